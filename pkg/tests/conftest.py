"""
Shared fixtures for the worked seven-state and six-state networks
"""
import pytest

from bcndata.core.models import ExperimentTrace
from bcndata.data.dataset import DataSet, assemble
from bcndata.network.bcn import Bcn

from tests.builders import (
    EXAMPLE1_L, EXAMPLE1_U, EXAMPLE1_X, EXAMPLE2_H, EXAMPLE2_L, EXAMPLE2_U, EXAMPLE2_X, EXAMPLE2_Y
)


@pytest.fixture
def example1_bcn() -> Bcn:
    return Bcn.from_columns(7, 3, EXAMPLE1_L)


@pytest.fixture
def example1_trace() -> ExperimentTrace:
    return ExperimentTrace(tuple(EXAMPLE1_X), tuple(EXAMPLE1_U))


@pytest.fixture
def example1_data(example1_trace) -> DataSet:
    return assemble([example1_trace], 7, 3)


@pytest.fixture
def example2_bcn() -> Bcn:
    return Bcn.from_columns(6, 3, EXAMPLE2_L, EXAMPLE2_H, 2)


@pytest.fixture
def example2_trace() -> ExperimentTrace:
    return ExperimentTrace(tuple(EXAMPLE2_X), tuple(EXAMPLE2_U), tuple(EXAMPLE2_Y))


@pytest.fixture
def example2_data(example2_trace) -> DataSet:
    return assemble([example2_trace], 6, 3, 2)
