"""
Safe control from data

A feedback solves the safe control problem for the unsafe set X_u when
trajectories starting in X_s = [1, N] minus X_u never leave X_s and
trajectories starting in X_u enter X_s in finitely many steps. The data
decide this for every compatible network at once when

1. every safe state has a recorded transition into X_s, and
2. every state has a recorded path into X_s.
"""
import logging
from dataclasses import dataclass, field
from typing import Any, Dict, FrozenSet, Iterable, Optional

from ..analysis.reachability import BasinResult, basin, state_set
from ..core.exceptions import EmptySafeSetError, SynthesisError
from ..data.dataset import DataSet
from ..network.bcn import FeedbackMatrix
from .validity import safe_feedback_is_valid

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SafeControlResult:
    """Outcome of ``safe_control``; K is set only when the problem is solvable"""
    solvable: bool
    unsafe: FrozenSet[int]
    safe: FrozenSet[int]
    K: Optional[FeedbackMatrix]
    stay_inputs: Dict[int, int] = field(default_factory=dict)
    approach_inputs: Dict[int, int] = field(default_factory=dict)
    certificate: Optional[BasinResult] = None
    missing_stay: FrozenSet[int] = frozenset()

    def to_dict(self) -> Dict[str, Any]:
        return {
            'solvable': self.solvable,
            'K': list(self.K.inputs) if self.K is not None else None,
            'certificate': {
                'unsafe': sorted(self.unsafe),
                'safe': sorted(self.safe),
                'stay_inputs': {str(j): u for j, u in sorted(self.stay_inputs.items())},
                'approach_inputs': {str(j): u for j, u in sorted(self.approach_inputs.items())},
                'missing_stay': sorted(self.missing_stay),
                'basin': self.certificate.to_dict() if self.certificate is not None else None,
            },
        }


def stay_inputs(ds: DataSet, safe: FrozenSet[int]) -> Dict[int, int]:
    """For each safe state, the input of its first recorded transition into ``safe``"""
    inputs: Dict[int, int] = {}
    for column in ds.columns():
        if column.x in safe and column.x_next in safe and column.x not in inputs:
            inputs[column.x] = column.u
    return inputs


def safe_control(ds: DataSet, unsafe: Iterable[int]) -> SafeControlResult:
    """
    Decide informativity for safe control and build the feedback.

    Raises:
        EmptySafeSetError: ``unsafe`` covers every state
        SynthesisError: the assembled K fails its own data-level re-check
    """
    unsafe = state_set(unsafe, ds.n_states, "unsafe")
    safe = frozenset(range(1, ds.n_states + 1)) - unsafe
    if not safe:
        raise EmptySafeSetError(ds.n_states)

    stay = stay_inputs(ds, safe)
    missing = safe - frozenset(stay)
    certificate = basin(ds, safe)
    approach = dict(certificate.inputs)
    # basin inputs live on basin minus target, so they never touch a safe state
    assert not set(approach) & set(stay)

    solvable = not missing and certificate.covers_all
    feedback = None
    if solvable:
        assigned = {**stay, **approach}
        feedback = FeedbackMatrix.from_inputs(ds.n_inputs, [assigned[j] for j in range(1, ds.n_states + 1)])
        if not safe_feedback_is_valid(ds, feedback, unsafe):
            raise SynthesisError("Synthesized safe-control feedback fails the data-level check", "safe")
        logger.info(f"Safe control solvable: K = {list(feedback.inputs)}")
    else:
        logger.info(f"Safe control not decidable from data: missing stay inputs {sorted(missing)}, "
                    f"states outside the basin {sorted(certificate.outside)}")

    return SafeControlResult(
        solvable=solvable,
        unsafe=unsafe,
        safe=safe,
        K=feedback,
        stay_inputs=stay,
        approach_inputs=approach,
        certificate=certificate,
        missing_stay=missing,
    )
