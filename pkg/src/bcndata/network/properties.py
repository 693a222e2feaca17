"""
Model-based properties of a known BCN

These answer the control questions directly on (L, H); the data-driven
routines never call them and the test suites use them as oracles.
"""
import logging
from typing import FrozenSet, Iterable, Optional, Tuple

import networkx as nx

from ..algebra.boolean import to_digraph
from ..core.exceptions import EmptySafeSetError
from .bcn import Bcn, IndexLike, index_of, l_tot

logger = logging.getLogger(__name__)


def model_equilibria(bcn: Bcn) -> FrozenSet[Tuple[int, int]]:
    """All (state, input) pairs with L u x = x"""
    return frozenset(
        (j, i)
        for i in range(1, bcn.n_inputs + 1)
        for j in range(1, bcn.n_states + 1)
        if bcn.successor(j, i) == j
    )


def model_reachable_set(bcn: Bcn, source: IndexLike) -> FrozenSet[int]:
    """States reachable from ``source`` (itself included) in the digraph of L_tot"""
    start = index_of(source, bcn.n_states, "state")
    graph = to_digraph(l_tot(bcn))
    return frozenset(nx.descendants(graph, start) | {start})


def states_reaching(graph: nx.DiGraph, target: Iterable[int]) -> FrozenSet[int]:
    """Nodes of ``graph`` with a path (possibly empty) into ``target``"""
    target = set(target)
    reaching = set(target)
    for node in target:
        reaching |= nx.ancestors(graph, node)
    return frozenset(reaching)


def model_safe_control_solvable(bcn: Bcn, unsafe: Iterable[int]) -> bool:
    """
    A feedback keeping X_s invariant and steering X_u into X_s exists iff every
    safe state has an input keeping it safe and X_s is reachable from every state.
    """
    unsafe = frozenset(unsafe)
    safe = frozenset(range(1, bcn.n_states + 1)) - unsafe
    if not safe:
        raise EmptySafeSetError(bcn.n_states)

    for j in safe:
        if not any(bcn.successor(j, i) in safe for i in range(1, bcn.n_inputs + 1)):
            logger.debug(f"Safe state {j} cannot stay safe")
            return False

    graph = to_digraph(l_tot(bcn))
    return len(states_reaching(graph, safe)) == bcn.n_states


def model_output_regulation_solvable(bcn: Bcn, y_star: int, graph: Optional[nx.DiGraph] = None) -> bool:
    """
    Regulation to y* is possible iff the digraph of L_tot restricted to
    X(y*) = {j : H x_j = y*} has a cycle and every state reaches a node on one.
    """
    if graph is None:
        graph = to_digraph(l_tot(bcn))
    target = [j for j in range(1, bcn.n_states + 1) if bcn.output(j) == y_star]
    induced = graph.subgraph(target)

    cycle_nodes = set()
    for component in nx.strongly_connected_components(induced):
        node = next(iter(component))
        if len(component) > 1 or induced.has_edge(node, node):
            cycle_nodes |= component
    if not cycle_nodes:
        return False
    return len(states_reaching(graph, cycle_nodes)) == bcn.n_states
