"""
Output regulation by state feedback from data

The data solve regulation to y* for every compatible network iff the data
digraph restricted to X^d(y*) has a cycle and every state has a recorded path
to a node of one of those cycles.
"""
import logging
from dataclasses import dataclass, field
from typing import Any, Dict, FrozenSet, Optional, Union

from ..algebra.logical import CanonicalVector
from ..analysis.cycles import DEFAULT_CYCLE_CAP, CycleSet, output_index, cycles_within, target_states
from ..analysis.reachability import BasinResult, basin
from ..core.exceptions import MissingOutputsError, SynthesisError
from ..data.dataset import DataSet
from ..network.bcn import FeedbackMatrix
from .validity import regulation_feedback_is_valid

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RegulationResult:
    """Outcome of ``output_regulation``; K is set only when the problem is solvable"""
    solvable: bool
    y_star: int
    K: Optional[FeedbackMatrix]
    target_states: FrozenSet[int]
    cycles: CycleSet
    basin: Optional[BasinResult] = None
    chosen_cycle: Dict[int, int] = field(default_factory=dict)
    cycle_inputs: Dict[int, int] = field(default_factory=dict)

    def to_dict(self) -> Dict[str, Any]:
        return {
            'solvable': self.solvable,
            'K': list(self.K.inputs) if self.K is not None else None,
            'certificate': {
                'y_star': self.y_star,
                'target_states': sorted(self.target_states),
                **self.cycles.to_dict(),
                'chosen_cycle': {str(j): c for j, c in sorted(self.chosen_cycle.items())},
                'basin': self.basin.to_dict() if self.basin is not None else None,
            },
        }


def output_regulation(ds: DataSet, y_star: Union[int, CanonicalVector],
                      cycle_cap: int = DEFAULT_CYCLE_CAP) -> RegulationResult:
    """
    Decide informativity for output regulation to y* and build the feedback.

    A state on several cycles takes the edge input of the first one in the
    (length, node sequence) order.
    """
    if ds.Yp is None:
        raise MissingOutputsError("output_regulation")
    y = output_index(ds, y_star)
    targets = target_states(ds, y)
    if not targets:
        logger.info(f"Output {y} never observed; regulation is not decidable from data")
        return RegulationResult(False, y, None, targets, CycleSet((), ()))

    cycles = cycles_within(ds, targets, cap=cycle_cap)
    if not cycles:
        logger.info(f"No data cycle inside X^d({y}) = {sorted(targets)}")
        return RegulationResult(False, y, None, targets, cycles)

    chosen: Dict[int, int] = {}
    on_cycle: Dict[int, int] = {}
    for index, (cycle, inputs) in enumerate(zip(cycles.cycles, cycles.edge_inputs)):
        for node, input_ in zip(cycle, inputs):
            if node not in chosen:
                chosen[node] = index
                on_cycle[node] = input_

    certificate = basin(ds, cycles.nodes)
    solvable = certificate.covers_all
    feedback = None
    if solvable:
        assigned = {**certificate.inputs, **on_cycle}
        feedback = FeedbackMatrix.from_inputs(ds.n_inputs, [assigned[j] for j in range(1, ds.n_states + 1)])
        if not regulation_feedback_is_valid(ds, feedback, y):
            raise SynthesisError("Synthesized regulating feedback fails the data-level check", "regulate")
        logger.info(f"Output regulation to {y} solvable: K = {list(feedback.inputs)}")
    else:
        logger.info(f"States {sorted(certificate.outside)} have no recorded path to a cycle in X^d({y})")

    return RegulationResult(
        solvable=solvable,
        y_star=y,
        K=feedback,
        target_states=targets,
        cycles=cycles,
        basin=certificate,
        chosen_cycle=chosen,
        cycle_inputs=on_cycle,
    )
