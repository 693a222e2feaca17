"""
Worked networks with their recorded experiments, and data-set builders
"""
import itertools
from typing import Iterable, List, Sequence, Tuple

from bcndata.core.models import ExperimentTrace
from bcndata.data.dataset import DataSet, assemble
from bcndata.network.bcn import Bcn

# Seven states, three inputs, no outputs recorded
EXAMPLE1_L = [4, 2, 2, 5, 2, 7, 5,
              6, 1, 3, 2, 4, 5, 7,
              7, 6, 2, 3, 1, 6, 6]
EXAMPLE1_X = [1, 7, 7, 6, 5, 1, 6, 5, 1, 4, 3, 3, 2, 2]
EXAMPLE1_U = [3, 2, 3, 2, 3, 2, 2, 3, 1, 3, 2, 1, 1]

# Six states, three inputs, two outputs
EXAMPLE2_L = [2, 4, 3, 3, 6, 5,
              1, 5, 2, 2, 6, 1,
              5, 1, 4, 5, 4, 6]
EXAMPLE2_H = [1, 2, 2, 2, 1, 1]
EXAMPLE2_X = [6, 6, 1, 2, 5, 4, 2, 4, 3, 3]
EXAMPLE2_U = [3, 2, 1, 2, 3, 2, 1, 1, 1]
EXAMPLE2_Y = [1, 1, 1, 2, 1, 2, 2, 2, 2]


def all_pairs(n_states: int, n_inputs: int) -> List[Tuple[int, int]]:
    """Every (input, state) pair in column order of L"""
    return list(itertools.product(range(1, n_inputs + 1), range(1, n_states + 1)))


def one_step_traces(bcn: Bcn, pairs: Iterable[Tuple[int, int]],
                    with_outputs: bool = False) -> List[ExperimentTrace]:
    """One single-transition experiment per (input, state) pair"""
    traces = []
    for i, j in pairs:
        outputs = (bcn.output(j),) if with_outputs else None
        traces.append(ExperimentTrace((j, bcn.successor(j, i)), (i,), outputs))
    return traces


def dataset_from_pairs(bcn: Bcn, pairs: Sequence[Tuple[int, int]], with_outputs: bool = False) -> DataSet:
    return assemble(one_step_traces(bcn, pairs, with_outputs), bcn.n_states, bcn.n_inputs,
                    bcn.n_outputs if with_outputs else None)


def exhaustive_dataset(bcn: Bcn, with_outputs: bool = False) -> DataSet:
    """Data observing every (input, state) pair exactly once"""
    return dataset_from_pairs(bcn, all_pairs(bcn.n_states, bcn.n_inputs), with_outputs)
