"""
Target-output states and the data cycles inside them
"""
import logging
from dataclasses import dataclass
from typing import Any, Dict, FrozenSet, Iterable, Tuple, Union

import networkx as nx

from ..algebra.logical import CanonicalVector
from ..core.exceptions import CycleCapExceededError, EmptyTargetError, MissingOutputsError, ValidationError
from ..data.dataset import DataSet
from .reachability import state_set

logger = logging.getLogger(__name__)

DEFAULT_CYCLE_CAP = 1_000_000


def output_index(ds: DataSet, y_star: Union[int, CanonicalVector]) -> int:
    p = ds.n_outputs or 1
    if isinstance(y_star, CanonicalVector):
        if y_star.dim != p:
            raise ValidationError(f"Desired output has dimension {y_star.dim}, data have P={p}",
                                  "y_star", y_star)
        return y_star.index
    if not 1 <= int(y_star) <= p:
        raise ValidationError(f"Desired output {y_star} outside [1, {p}]", "y_star", y_star)
    return int(y_star)


def target_states(ds: DataSet, y_star: Union[int, CanonicalVector]) -> FrozenSet[int]:
    """X^d(y*): states recorded at least once with output y*"""
    if ds.Yp is None:
        raise MissingOutputsError("target_states")
    y = output_index(ds, y_star)
    hits = ds.Yp.indices == y - 1
    return frozenset(int(x) + 1 for x in ds.Xp.indices[hits])


def canonical_cycle(cycle: Iterable[int]) -> Tuple[int, ...]:
    """Rotate a cycle so that it starts at its smallest node"""
    nodes = tuple(cycle)
    start = nodes.index(min(nodes))
    return nodes[start:] + nodes[:start]


@dataclass(frozen=True)
class CycleSet:
    """
    Simple cycles of the data digraph, ordered by (length, node sequence).

    ``edge_inputs[c][m]`` is the recorded input of the edge from
    ``cycles[c][m]`` to the next node of the cycle.
    """
    cycles: Tuple[Tuple[int, ...], ...]
    edge_inputs: Tuple[Tuple[int, ...], ...]

    @property
    def nodes(self) -> FrozenSet[int]:
        return frozenset(node for cycle in self.cycles for node in cycle)

    def __len__(self) -> int:
        return len(self.cycles)

    def __bool__(self) -> bool:
        return bool(self.cycles)

    def to_dict(self) -> Dict[str, Any]:
        return {
            'cycles': [list(cycle) for cycle in self.cycles],
            'edge_inputs': [list(inputs) for inputs in self.edge_inputs],
        }


def data_subgraph(ds: DataSet, node_set: Iterable[int]) -> nx.DiGraph:
    """
    Digraph of data transitions with both endpoints in ``node_set``.

    Each edge carries the input and column of its first witness.
    """
    nodes = set(node_set)
    graph = nx.DiGraph()
    graph.add_nodes_from(sorted(nodes))
    for column in ds.columns():
        if column.x in nodes and column.x_next in nodes and not graph.has_edge(column.x, column.x_next):
            graph.add_edge(column.x, column.x_next, input=column.u, k=column.k)
    return graph


def cycles_within(ds: DataSet, node_set: Iterable[int], cap: int = DEFAULT_CYCLE_CAP) -> CycleSet:
    """
    All simple cycles of the data digraph induced on ``node_set``.

    Raises:
        CycleCapExceededError: more than ``cap`` cycles exist
    """
    nodes = state_set(node_set, ds.n_states, "node_set")
    if not nodes:
        raise EmptyTargetError("cycles_within")

    graph = data_subgraph(ds, nodes)
    found = []
    for cycle in nx.simple_cycles(graph):
        if len(found) >= cap:
            raise CycleCapExceededError(cap, graph.number_of_nodes())
        found.append(canonical_cycle(cycle))
    found.sort(key=lambda c: (len(c), c))

    edge_inputs = tuple(
        tuple(graph.edges[cycle[m], cycle[(m + 1) % len(cycle)]]['input'] for m in range(len(cycle)))
        for cycle in found
    )
    logger.debug(f"{len(found)} simple cycles on {len(nodes)} nodes")
    return CycleSet(tuple(found), edge_inputs)
