"""
Data-driven reachability of a state set

``basin`` builds the layered basin of attraction from observed transitions
only: layer S_0 is the target, layer S_d collects the states that have a
recorded transition into S_{d-1} and are not in any earlier layer. Every
choice is made by the first data column k that witnesses it.
"""
import logging
from dataclasses import dataclass, field
from typing import Any, Dict, FrozenSet, Iterable, Optional, Tuple

import numpy as np

from ..algebra.boolean import reachability_closure
from ..core.exceptions import EmptyTargetError, ValidationError
from ..data.dataset import DataSet
from ..data.identification import l_tot_d

logger = logging.getLogger(__name__)


def state_set(states: Iterable[int], n_states: int, what: str = "states") -> FrozenSet[int]:
    """Validate a set of 1-based state indices"""
    result = frozenset(int(s) for s in states)
    bad = sorted(s for s in result if not 1 <= s <= n_states)
    if bad:
        raise ValidationError(f"{what} {bad} outside [1, {n_states}]", what, bad)
    return result


@dataclass(frozen=True)
class BasinResult:
    """
    Layered basin of attraction of ``target``.

    ``inputs`` and ``witnesses`` are defined exactly on basin minus target:
    the recorded input of each state and the data column it came from.
    """
    n_states: int
    target: FrozenSet[int]
    layers: Tuple[FrozenSet[int], ...]
    inputs: Dict[int, int] = field(default_factory=dict)
    witnesses: Dict[int, int] = field(default_factory=dict)

    @property
    def basin(self) -> FrozenSet[int]:
        return frozenset().union(*self.layers)

    @property
    def covers_all(self) -> bool:
        return len(self.basin) == self.n_states

    @property
    def outside(self) -> FrozenSet[int]:
        """States with no data-witnessed path into the target"""
        return frozenset(range(1, self.n_states + 1)) - self.basin

    def layer_of(self, state: int) -> Optional[int]:
        for index, layer in enumerate(self.layers):
            if state in layer:
                return index
        return None

    def to_dict(self) -> Dict[str, Any]:
        return {
            'target': sorted(self.target),
            'layers': [sorted(layer) for layer in self.layers],
            'basin': sorted(self.basin),
            'inputs': {str(state): self.inputs[state] for state in sorted(self.inputs)},
            'outside': sorted(self.outside),
        }


def basin(ds: DataSet, target: Iterable[int]) -> BasinResult:
    """Layered backward search over data transitions toward ``target``"""
    target = state_set(target, ds.n_states, "target")
    if not target:
        raise EmptyTargetError("basin")

    xs, us, xfs = ds.Xp.columns, ds.Up.columns, ds.Xf.columns
    assigned = set(target)
    layers = [target]
    inputs: Dict[int, int] = {}
    witnesses: Dict[int, int] = {}

    while True:
        previous = layers[-1]
        layer = set()
        for k in range(ds.T):
            state = xs[k]
            if xfs[k] in previous and state not in assigned:
                layer.add(state)
                assigned.add(state)
                inputs[state] = us[k]
                witnesses[state] = k + 1
        if not layer:
            break
        layers.append(frozenset(layer))

    logger.debug(f"Basin of {sorted(target)}: layer sizes {[len(s) for s in layers]}")
    return BasinResult(ds.n_states, target, tuple(layers), inputs, witnesses)


def informative_for_reachability(ds: DataSet, target: Iterable[int]) -> bool:
    """True iff every state has a data-witnessed path into ``target``"""
    target = state_set(target, ds.n_states, "target")
    if not target:
        raise EmptyTargetError("informative_for_reachability")
    closure = reachability_closure(l_tot_d(ds)).to_array()
    rows = np.fromiter((s - 1 for s in sorted(target)), dtype=np.int64)
    return bool(closure[rows, :].any(axis=0).all())
