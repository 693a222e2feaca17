"""
Data-level validity of a state feedback

A feedback K selects, for every state j, the column (K_j - 1)N + j of L. The
predicates below only use columns the data pin down, so a feedback they
accept behaves the same on every network compatible with the data.
"""
import logging
from typing import Dict, Iterable, Optional, Sequence, Union

from ..core.exceptions import ValidationError
from ..data.dataset import DataSet
from ..network.bcn import FeedbackMatrix

logger = logging.getLogger(__name__)

FeedbackLike = Union[FeedbackMatrix, Sequence[int]]


def _inputs(k: FeedbackLike) -> Sequence[int]:
    return k.inputs if isinstance(k, FeedbackMatrix) else tuple(k)


def closed_loop_from_data(ds: DataSet, k: FeedbackLike) -> Dict[int, Optional[int]]:
    """Closed-loop successor of every state, None where the data do not know it"""
    inputs = _inputs(k)
    if len(inputs) != ds.n_states:
        raise ValidationError(f"Feedback has {len(inputs)} entries, expected {ds.n_states}", "K", len(inputs))
    return {j: ds.mask.successor(j, inputs[j - 1]) for j in range(1, ds.n_states + 1)}


def _all_known(successors: Dict[int, Optional[int]]) -> bool:
    unknown = [j for j, nxt in successors.items() if nxt is None]
    if unknown:
        logger.debug(f"Closed-loop successors unknown for states {unknown}")
    return not unknown


def safe_feedback_is_valid(ds: DataSet, k: FeedbackLike, unsafe: Iterable[int]) -> bool:
    """
    Every closed-loop successor is known, safe states map to safe states and
    every unsafe state enters the safe set within N steps.
    """
    unsafe = frozenset(unsafe)
    if len(_inputs(k)) != ds.n_states:
        return False
    successors = closed_loop_from_data(ds, k)
    if not _all_known(successors):
        return False

    for state, nxt in successors.items():
        if state not in unsafe and nxt in unsafe:
            logger.debug(f"Safe state {state} leaves the safe set")
            return False

    for state in unsafe:
        current = state
        for _ in range(ds.n_states):
            if current not in unsafe:
                break
            current = successors[current]
        if current in unsafe:
            logger.debug(f"Unsafe state {state} never reaches the safe set")
            return False
    return True


def regulation_feedback_is_valid(ds: DataSet, k: FeedbackLike, y_star: int) -> bool:
    """
    Every closed-loop successor is known and every state reaches, within N
    steps, a periodic orbit whose states were all observed with output y*.
    """
    if len(_inputs(k)) != ds.n_states:
        return False
    successors = closed_loop_from_data(ds, k)
    if not _all_known(successors):
        return False

    for state in successors:
        current = state
        for _ in range(ds.n_states):
            current = successors[current]
        # current now lies on the limit cycle of ``state``
        start = current
        while True:
            if ds.mask.output(current) != y_star:
                logger.debug(f"State {state} settles on a cycle through {current} "
                             f"with output {ds.mask.output(current)}")
                return False
            current = successors[current]
            if current == start:
                break
    return True
