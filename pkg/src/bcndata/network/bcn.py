"""
Boolean control networks in algebraic form

A Bcn is the pair (L, H): L is N x NM and its column (i-1)N + j is the
successor of state j under input i; H is P x N and its column j is the output
of state j.
"""
import logging
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple, Union

import numpy as np

from ..algebra.boolean import BooleanMatrix
from ..algebra.logical import CanonicalVector, LogicalMatrix
from ..algebra.stp import power_reducing_matrix, stp_chain
from ..core.exceptions import DimensionMismatchError, ValidationError
from ..core.models import ExperimentTrace

logger = logging.getLogger(__name__)

IndexLike = Union[int, CanonicalVector]


def index_of(value: IndexLike, dim: int, what: str) -> int:
    """1-based index of a canonical vector or plain int, checked against ``dim``"""
    if isinstance(value, CanonicalVector):
        if value.dim != dim:
            raise DimensionMismatchError(f"{what} has the wrong dimension", dim, value.dim, what)
        return value.index
    index = int(value)
    if not 1 <= index <= dim:
        raise ValidationError(f"{what} index {index} outside [1, {dim}]", what, index)
    return index


@dataclass(frozen=True)
class Bcn:
    """A Boolean control network x(t+1) = L u(t) x(t), y(t) = H x(t)"""
    L: LogicalMatrix
    H: LogicalMatrix

    def __post_init__(self) -> None:
        n = self.L.rows
        if self.L.cols == 0 or self.L.cols % n:
            raise DimensionMismatchError("L must be N x NM", f"{n} x k*{n}", self.L.shape, "Bcn")
        if self.H.cols != n:
            raise DimensionMismatchError("H must have one column per state", n, self.H.cols, "Bcn")

    @classmethod
    def from_columns(cls, n_states: int, n_inputs: int, transitions: Sequence[int],
                     outputs: Optional[Sequence[int]] = None, n_outputs: int = 1) -> "Bcn":
        """
        Build from 1-based column indices.

        Args:
            n_states: N
            n_inputs: M
            transitions: N*M successor indices, block by block
            outputs: N output indices; all ones when omitted
            n_outputs: P
        """
        if len(transitions) != n_states * n_inputs:
            raise DimensionMismatchError("L needs N*M columns", n_states * n_inputs, len(transitions),
                                         "from_columns")
        if outputs is None:
            outputs = [1] * n_states
        return cls(LogicalMatrix(n_states, transitions), LogicalMatrix(n_outputs, outputs))

    @property
    def n_states(self) -> int:
        return self.L.rows

    @property
    def n_inputs(self) -> int:
        return self.L.cols // self.L.rows

    @property
    def n_outputs(self) -> int:
        return self.H.rows

    def block(self, i: int) -> LogicalMatrix:
        """L_i, the N x N transition matrix of the subsystem under input i"""
        return self.L.block(i, self.n_states)

    def successor(self, state: int, input_: int) -> int:
        return self.L[(input_ - 1) * self.n_states + state]

    def output(self, state: int) -> int:
        return self.H[state]


@dataclass(frozen=True)
class Bn:
    """An autonomous Boolean network x(t+1) = L x(t)"""
    L: LogicalMatrix

    def __post_init__(self) -> None:
        if self.L.rows != self.L.cols:
            raise DimensionMismatchError("A Boolean network has a square L", "square", self.L.shape, "Bn")

    @property
    def n_states(self) -> int:
        return self.L.rows

    def successor(self, state: int) -> int:
        return self.L[state]

    def orbit(self, x0: int, steps: int) -> List[int]:
        """States x(0), ..., x(steps)"""
        states = [x0]
        for _ in range(steps):
            states.append(self.L[states[-1]])
        return states


@dataclass(frozen=True)
class FeedbackMatrix:
    """A state feedback u = K x; column j is the input applied in state j"""
    K: LogicalMatrix

    @classmethod
    def from_inputs(cls, n_inputs: int, inputs: Sequence[int]) -> "FeedbackMatrix":
        return cls(LogicalMatrix(n_inputs, inputs))

    @property
    def n_inputs(self) -> int:
        return self.K.rows

    @property
    def n_states(self) -> int:
        return self.K.cols

    @property
    def inputs(self) -> Tuple[int, ...]:
        return self.K.columns

    def input_for(self, state: int) -> int:
        return self.K[state]


def step(bcn: Bcn, x: IndexLike, u: IndexLike) -> Tuple[CanonicalVector, CanonicalVector]:
    """
    One update of the network.

    Returns:
        (x(t+1), y(t)) where y(t) = H x(t) is the output at the current state
    """
    j = index_of(x, bcn.n_states, "state")
    i = index_of(u, bcn.n_inputs, "input")
    x_next = CanonicalVector(bcn.n_states, bcn.successor(j, i))
    y = CanonicalVector(bcn.n_outputs, bcn.output(j))
    return x_next, y


def simulate(bcn: Bcn, x0: IndexLike, inputs: Sequence[IndexLike]) -> ExperimentTrace:
    """Iterate ``step`` from x0; outputs are reported for t < T only"""
    states = [index_of(x0, bcn.n_states, "state")]
    applied: List[int] = []
    outputs: List[int] = []
    for u in inputs:
        x_next, y = step(bcn, states[-1], u)
        applied.append(index_of(u, bcn.n_inputs, "input"))
        outputs.append(y.index)
        states.append(x_next.index)
    logger.debug(f"Simulated {len(applied)} steps from state {states[0]}")
    return ExperimentTrace(tuple(states), tuple(applied), tuple(outputs))


def l_tot(bcn: Bcn) -> BooleanMatrix:
    """L_1 v L_2 v ... v L_M"""
    n = bcn.n_states
    entries = np.zeros((n, n), dtype=bool)
    entries[bcn.L.indices, np.arange(bcn.L.cols) % n] = True
    return BooleanMatrix(entries)


def _check_feedback(bcn: Bcn, k: FeedbackMatrix) -> None:
    if k.n_inputs != bcn.n_inputs or k.n_states != bcn.n_states:
        raise DimensionMismatchError("Feedback does not match the network", (bcn.n_inputs, bcn.n_states),
                                     k.K.shape, "closed_loop")


def closed_loop(bcn: Bcn, k: FeedbackMatrix) -> Bn:
    """L_K by column selection: col_j(L_K) = col_{(i-1)N+j}(L) with delta_M^i = col_j(K)"""
    _check_feedback(bcn, k)
    n = bcn.n_states
    positions = k.K.indices * n + np.arange(n)
    return Bn(LogicalMatrix._from_zero_based(n, bcn.L.indices[positions]))


def closed_loop_stp(bcn: Bcn, k: FeedbackMatrix) -> Bn:
    """L_K = L |x K |x Phi_N, the algebraic form of ``closed_loop``"""
    _check_feedback(bcn, k)
    return Bn(stp_chain(bcn.L, k.K, power_reducing_matrix(bcn.n_states)))


def random_bcn(n_states: int, n_inputs: int, n_outputs: int = 1, seed: Optional[int] = None) -> Bcn:
    """Every column of L and H drawn independently and uniformly"""
    rng = np.random.default_rng(seed)
    transitions = rng.integers(1, n_states + 1, size=n_states * n_inputs)
    outputs = rng.integers(1, n_outputs + 1, size=n_states)
    return Bcn.from_columns(n_states, n_inputs, transitions.tolist(), outputs.tolist(), n_outputs)


def random_inputs(n_inputs: int, length: int, seed: Optional[int] = None) -> Tuple[int, ...]:
    rng = np.random.default_rng(seed)
    return tuple(int(u) for u in rng.integers(1, n_inputs + 1, size=length))
