"""
The family of networks compatible with a data set

Known columns of L and H are fixed by the knowledge mask; every other column
may be any canonical vector. The family is materialised either completely or
by seeded sampling, and always together with an adversarial completion.
"""
import itertools
import logging
from dataclasses import dataclass
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple

import networkx as nx
import numpy as np

from ..core.exceptions import ValidationError
from ..data.dataset import DataSet, KnowledgeMask
from ..network.bcn import Bcn
from ..network.properties import states_reaching

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CompatibleFamily:
    """B_d as a knowledge mask plus its free columns"""
    mask: KnowledgeMask
    n_states: int
    n_inputs: int
    n_outputs: int
    free_L_columns: Tuple[Tuple[int, int], ...]
    free_H_columns: Tuple[int, ...]
    seed: int = 0


def compatible_family(ds: DataSet, seed: int = 0) -> CompatibleFamily:
    """Family of ``ds``; output-free data give single-output models"""
    mask = ds.mask
    n_outputs = ds.n_outputs if ds.n_outputs is not None else 1
    free_outputs = tuple(mask.free_outputs) if ds.has_outputs else ()
    return CompatibleFamily(
        mask=mask,
        n_states=ds.n_states,
        n_inputs=ds.n_inputs,
        n_outputs=n_outputs,
        free_L_columns=tuple(mask.free_columns),
        free_H_columns=free_outputs,
        seed=seed,
    )


def family_size(fam: CompatibleFamily) -> int:
    """N^{free L columns} * P^{free H columns}"""
    return fam.n_states ** len(fam.free_L_columns) * fam.n_outputs ** len(fam.free_H_columns)


def complete(fam: CompatibleFamily, transitions: Sequence[int], outputs: Sequence[int]) -> Bcn:
    """Member of the family with the given values on the free columns"""
    if len(transitions) != len(fam.free_L_columns) or len(outputs) != len(fam.free_H_columns):
        raise ValidationError("Completion does not match the free columns", "completion",
                              (len(transitions), len(outputs)))
    columns = fam.mask.partial_transition_columns()
    for (i, j), value in zip(fam.free_L_columns, transitions):
        columns[(i - 1) * fam.n_states + j - 1] = value

    if fam.mask.n_outputs is None:
        output_columns: List[Optional[int]] = [1] * fam.n_states
    else:
        output_columns = fam.mask.partial_output_columns()
        for j, value in zip(fam.free_H_columns, outputs):
            output_columns[j - 1] = value
    return Bcn.from_columns(fam.n_states, fam.n_inputs, columns, output_columns, fam.n_outputs)


def _enumerate(fam: CompatibleFamily) -> Iterator[Bcn]:
    states = range(1, fam.n_states + 1)
    outputs = range(1, fam.n_outputs + 1)
    for transitions in itertools.product(states, repeat=len(fam.free_L_columns)):
        for values in itertools.product(outputs, repeat=len(fam.free_H_columns)):
            yield complete(fam, transitions, values)


def enumerate_or_sample(fam: CompatibleFamily, budget: int) -> List[Bcn]:
    """
    All members when the family has at most ``budget`` of them, otherwise the
    all-self-loop completion followed by ``budget - 1`` seeded uniform samples.
    """
    if budget < 1:
        raise ValidationError(f"Budget must be at least 1, got {budget}", "budget", budget)
    size = family_size(fam)
    if size <= budget:
        logger.debug(f"Enumerating all {size} compatible models")
        return list(_enumerate(fam))

    logger.debug(f"Family has {size} members; sampling {budget} with seed {fam.seed}")
    rng = np.random.default_rng(fam.seed)
    models = [adversarial_completion(fam)]
    for _ in range(budget - 1):
        transitions = rng.integers(1, fam.n_states + 1, size=len(fam.free_L_columns)).tolist()
        values = rng.integers(1, fam.n_outputs + 1, size=len(fam.free_H_columns)).tolist()
        models.append(complete(fam, transitions, values))
    return models


def _known_digraph(fam: CompatibleFamily) -> nx.DiGraph:
    graph = nx.DiGraph()
    graph.add_nodes_from(range(1, fam.n_states + 1))
    graph.add_edges_from((state, successor) for state, _, successor in fam.mask.transitions())
    return graph


def _sink(fam: CompatibleFamily, avoid: frozenset, anchor: frozenset) -> Optional[int]:
    outside = [z for z in range(1, fam.n_states + 1) if z not in avoid]
    if not outside:
        return None
    reaching = states_reaching(_known_digraph(fam), anchor) if anchor else frozenset()
    for z in outside:
        if z not in reaching:
            return z
    return outside[0]


def adversarial_completion(fam: CompatibleFamily, avoid: Iterable[int] = (),
                           y_star: Optional[int] = None, anchor: Optional[Iterable[int]] = None) -> Bcn:
    """
    The compatible model that is hardest to control.

    A free column (i, j) becomes a self-loop at j, unless j is in ``avoid``: then
    it leads to a sink, the smallest state outside ``avoid`` with no known path
    to ``anchor`` (``avoid`` by default). Free outputs become the smallest
    output different from y*.

    This extends the all-self-loop completion: with an empty ``avoid`` every
    free column is a self-loop.
    """
    avoid = frozenset(avoid)
    anchor = frozenset(anchor) if anchor is not None else avoid
    sink = _sink(fam, avoid, anchor) if avoid else None

    transitions = [
        sink if (j in avoid and sink is not None) else j
        for _, j in fam.free_L_columns
    ]
    wrong_output = 1 if (y_star is None or fam.n_outputs == 1 or y_star != 1) else 2
    outputs = [wrong_output] * len(fam.free_H_columns)
    logger.debug(f"Adversarial completion: avoid={sorted(avoid)}, sink={sink}")
    return complete(fam, transitions, outputs)
