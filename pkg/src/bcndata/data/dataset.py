"""
Experiment data and the partial knowledge it gives about the network

The data matrices follow the block-per-experiment layout: column k of
(X_p, U_p, X_f, Y_p) is the snapshot (x(t), u(t), x(t+1), y(t)) of one
experiment, experiments concatenated in order.
"""
import logging
from dataclasses import dataclass, field
from functools import cached_property
from typing import Any, Dict, Iterator, List, Optional, Sequence, Tuple

from ..algebra.logical import LogicalMatrix
from ..core.exceptions import DimensionMismatchError, InconsistentDataError, ValidationError
from ..core.models import ExperimentTrace

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DataColumn:
    """One data column, 1-based; ``y`` is None for output-free data"""
    k: int
    x: int
    u: int
    x_next: int
    y: Optional[int]


@dataclass(frozen=True)
class KnowledgeMask:
    """
    What the data pin down about (L, H).

    ``successors`` maps a known column (i-1)N + j of L to its observed
    successor; ``outputs`` maps each observed state to its output.
    """
    n_states: int
    n_inputs: int
    n_outputs: Optional[int]
    successors: Dict[int, int] = field(default_factory=dict)
    outputs: Dict[int, int] = field(default_factory=dict)

    def column_index(self, state: int, input_: int) -> int:
        return (input_ - 1) * self.n_states + state

    def successor(self, state: int, input_: int) -> Optional[int]:
        return self.successors.get(self.column_index(state, input_))

    def output(self, state: int) -> Optional[int]:
        return self.outputs.get(state)

    @property
    def known(self) -> Tuple[bool, ...]:
        """One flag per column of L"""
        return tuple(c in self.successors for c in range(1, self.n_states * self.n_inputs + 1))

    @property
    def known_outputs(self) -> Tuple[bool, ...]:
        """One flag per state: was its output observed"""
        return tuple(j in self.outputs for j in range(1, self.n_states + 1))

    @property
    def free_columns(self) -> List[Tuple[int, int]]:
        """(input, state) pairs never observed, in column order"""
        n = self.n_states
        return [(c // n + 1, c % n + 1) for c, seen in enumerate(self.known) if not seen]

    @property
    def free_outputs(self) -> List[int]:
        return [j for j, seen in enumerate(self.known_outputs, start=1) if not seen]

    def partial_transition_columns(self) -> List[Optional[int]]:
        """Columns of L with None where the data leave them free"""
        return [self.successors.get(c) for c in range(1, self.n_states * self.n_inputs + 1)]

    def partial_output_columns(self) -> List[Optional[int]]:
        return [self.outputs.get(j) for j in range(1, self.n_states + 1)]

    def transitions(self) -> Iterator[Tuple[int, int, int]]:
        """Known (state, input, successor) triples in column order"""
        for column in sorted(self.successors):
            input_, state = divmod(column - 1, self.n_states)
            yield state + 1, input_ + 1, self.successors[column]

    def to_dict(self) -> Dict[str, Any]:
        return {
            'N': self.n_states,
            'M': self.n_inputs,
            'P': self.n_outputs,
            'L': self.partial_transition_columns(),
            'H': self.partial_output_columns() if self.n_outputs is not None else None,
            'known_columns': len(self.successors),
            'free_columns': self.n_states * self.n_inputs - len(self.successors),
        }


@dataclass(frozen=True)
class DataSet:
    """r experiments plus the assembled data matrices X_p, X_f, U_p and Y_p"""
    n_states: int
    n_inputs: int
    n_outputs: Optional[int]
    traces: Tuple[ExperimentTrace, ...]
    Xp: LogicalMatrix
    Xf: LogicalMatrix
    Up: LogicalMatrix
    Yp: Optional[LogicalMatrix]

    @property
    def T(self) -> int:
        return self.Xp.cols

    @property
    def has_outputs(self) -> bool:
        return self.Yp is not None

    def columns(self) -> Iterator[DataColumn]:
        """Data columns in scan order k = 1..T"""
        xs, us, xfs = self.Xp.columns, self.Up.columns, self.Xf.columns
        ys = self.Yp.columns if self.Yp is not None else None
        for k in range(self.T):
            yield DataColumn(k + 1, xs[k], us[k], xfs[k], ys[k] if ys is not None else None)

    @cached_property
    def mask(self) -> KnowledgeMask:
        return knowledge_mask(self)


def _infer_dimension(values: Sequence[int], given: Optional[int], what: str) -> int:
    if given is not None:
        if given < 1:
            raise ValidationError(f"{what} must be positive, got {given}", what, given)
        bad = [v for v in values if not 1 <= v <= given]
        if bad:
            raise DimensionMismatchError(f"{what} indices outside [1, {given}]", given, bad[:10], "assemble")
        return given
    return max(values) if values else 1


def assemble(traces: Sequence[ExperimentTrace], n_states: Optional[int] = None,
             n_inputs: Optional[int] = None, n_outputs: Optional[int] = None,
             check_consistency: bool = True) -> DataSet:
    """
    Concatenate experiments into a DataSet.

    Dimensions not given are taken as the largest index seen. With
    ``check_consistency`` the knowledge mask is built eagerly so that data no
    single deterministic BCN could produce are rejected here.
    """
    traces = tuple(traces)
    if not traces:
        raise ValidationError("At least one experiment is required", "traces")
    for number, trace in enumerate(traces, start=1):
        if trace.length < 1:
            raise ValidationError(f"Experiment {number} records no transition", "traces", number)
    with_outputs = {trace.has_outputs for trace in traces}
    if len(with_outputs) > 1:
        raise ValidationError("Either every experiment records outputs or none does", "outputs")
    has_outputs = with_outputs.pop()

    xp: List[int] = []
    xf: List[int] = []
    up: List[int] = []
    yp: List[int] = []
    for trace in traces:
        xp.extend(trace.states[:-1])
        xf.extend(trace.states[1:])
        up.extend(trace.inputs)
        if trace.outputs is not None:
            yp.extend(trace.outputs)

    n = _infer_dimension([s for trace in traces for s in trace.states], n_states, "N")
    m = _infer_dimension(up, n_inputs, "M")
    p = _infer_dimension(yp, n_outputs, "P") if has_outputs else None

    dataset = DataSet(
        n_states=n,
        n_inputs=m,
        n_outputs=p,
        traces=traces,
        Xp=LogicalMatrix(n, xp),
        Xf=LogicalMatrix(n, xf),
        Up=LogicalMatrix(m, up),
        Yp=LogicalMatrix(p, yp) if p is not None else None,
    )
    logger.debug(f"Assembled {len(traces)} experiments into T={dataset.T} columns (N={n}, M={m}, P={p})")
    if check_consistency:
        _ = dataset.mask
    return dataset


def knowledge_mask(ds: DataSet) -> KnowledgeMask:
    """Known columns of L and H, raising InconsistentDataError on conflicting observations"""
    successors: Dict[int, int] = {}
    outputs: Dict[int, int] = {}
    first_seen: Dict[int, int] = {}
    output_seen: Dict[int, int] = {}
    n = ds.n_states

    for column in ds.columns():
        position = (column.u - 1) * n + column.x
        known = successors.get(position)
        if known is None:
            successors[position] = column.x_next
            first_seen[position] = column.k
        elif known != column.x_next:
            raise InconsistentDataError(
                f"State {column.x} under input {column.u} leads to {known} at column "
                f"{first_seen[position]} and to {column.x_next} at column {column.k}",
                column=column.k,
                conflict={'state': column.x, 'input': column.u,
                          'successors': [known, column.x_next]})

        if column.y is not None:
            seen = outputs.get(column.x)
            if seen is None:
                outputs[column.x] = column.y
                output_seen[column.x] = column.k
            elif seen != column.y:
                raise InconsistentDataError(
                    f"State {column.x} shows output {seen} at column {output_seen[column.x]} "
                    f"and output {column.y} at column {column.k}",
                    column=column.k,
                    conflict={'state': column.x, 'outputs': [seen, column.y]})

    logger.debug(f"Knowledge mask: {len(successors)} of {n * ds.n_inputs} columns of L known")
    return KnowledgeMask(n, ds.n_inputs, ds.n_outputs, successors, outputs)
