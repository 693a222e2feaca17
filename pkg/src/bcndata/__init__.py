"""
bcndata - data-driven analysis and control of Boolean control networks

Decides from recorded state/input/output traces whether a network is
identifiable, which state sets are reachable, and whether safe control or
output regulation is possible for every network compatible with the data,
synthesizing the state feedback when it is.
"""

__version__ = "0.1.0"

from .core.exceptions import BCNDataError
from .core.models import ExperimentTrace
from .data.dataset import DataSet, assemble
from .network.bcn import Bcn, FeedbackMatrix

__all__ = [
    "BCNDataError",
    "ExperimentTrace",
    "DataSet",
    "assemble",
    "Bcn",
    "FeedbackMatrix",
]
