"""
Boolean matrices and the OR/AND semiring operations

BooleanMatrix wraps a read-only numpy bool array. Logical matrices are
accepted wherever a Boolean matrix is expected and converted on the fly.
"""
from typing import FrozenSet, Iterable, Tuple, Union

import networkx as nx
import numpy as np

from ..core.exceptions import DimensionMismatchError, ValidationError
from .logical import CanonicalVector, LogicalMatrix


class BooleanMatrix:
    """An immutable rows x cols matrix with entries in {0, 1}"""

    __slots__ = ("_entries",)

    def __init__(self, entries: Union[np.ndarray, Iterable[Iterable[int]]]):
        array = np.asarray(entries)
        if array.ndim != 2:
            raise DimensionMismatchError("Boolean matrices are two-dimensional", 2, array.ndim, "BooleanMatrix")
        if array.dtype != bool:
            if array.size and np.any((array != 0) & (array != 1)):
                raise ValidationError("Boolean matrix entries must be 0 or 1", "entries")
            array = array.astype(bool)
        else:
            array = array.copy()
        array.setflags(write=False)
        self._entries = array

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "BooleanMatrix":
        return cls(np.zeros((rows, cols), dtype=bool))

    @classmethod
    def ones(cls, rows: int, cols: int) -> "BooleanMatrix":
        return cls(np.ones((rows, cols), dtype=bool))

    @classmethod
    def identity(cls, n: int) -> "BooleanMatrix":
        return cls(np.eye(n, dtype=bool))

    @property
    def rows(self) -> int:
        return int(self._entries.shape[0])

    @property
    def cols(self) -> int:
        return int(self._entries.shape[1])

    @property
    def shape(self) -> Tuple[int, int]:
        return self.rows, self.cols

    def to_array(self) -> np.ndarray:
        """Read-only bool view of the entries"""
        return self._entries

    def entry(self, i: int, j: int) -> bool:
        """Entry at 1-based row i, column j"""
        return bool(self._entries[i - 1, j - 1])

    def column_support(self, j: int) -> FrozenSet[int]:
        """1-based rows holding a 1 in column j"""
        return frozenset(int(i) + 1 for i in np.flatnonzero(self._entries[:, j - 1]))

    def row_support(self, i: int) -> FrozenSet[int]:
        """1-based columns holding a 1 in row i"""
        return frozenset(int(j) + 1 for j in np.flatnonzero(self._entries[i - 1, :]))

    def zero_rows(self) -> FrozenSet[int]:
        return frozenset(int(i) + 1 for i in np.flatnonzero(~self._entries.any(axis=1)))

    def diagonal_support(self) -> FrozenSet[int]:
        if self.rows != self.cols:
            raise DimensionMismatchError("Diagonal of a non-square matrix", "square", self.shape, "diagonal")
        return frozenset(int(i) + 1 for i in np.flatnonzero(np.diag(self._entries)))

    @property
    def T(self) -> "BooleanMatrix":
        return BooleanMatrix(self._entries.T)

    def is_logical(self) -> bool:
        return bool(np.all(self._entries.sum(axis=0) == 1))

    def to_logical(self) -> LogicalMatrix:
        if not self.is_logical():
            raise ValidationError("Boolean matrix has a column that is not canonical", "entries")
        return LogicalMatrix.from_array(self._entries.astype(np.uint8))

    def __or__(self, other: "BooleanMatrix") -> "BooleanMatrix":
        other = as_boolean(other)
        _require_same_shape(self, other, "or")
        return BooleanMatrix(self._entries | other._entries)

    def __and__(self, other: "BooleanMatrix") -> "BooleanMatrix":
        return hadamard(self, other)

    def __le__(self, other: "BooleanMatrix") -> bool:
        """Entrywise order: every 1 of self is also a 1 of other"""
        other = as_boolean(other)
        _require_same_shape(self, other, "compare")
        return bool(np.all(~self._entries | other._entries))

    def __eq__(self, other: object) -> bool:
        if isinstance(other, LogicalMatrix):
            other = other.to_boolean()
        if not isinstance(other, BooleanMatrix):
            return NotImplemented
        return self.shape == other.shape and bool(np.array_equal(self._entries, other._entries))

    def __hash__(self) -> int:
        return hash((self.shape, np.packbits(self._entries).tobytes()))

    def __repr__(self) -> str:
        return f"BooleanMatrix({self.rows}x{self.cols}, ones={int(self._entries.sum())})"


BooleanLike = Union[BooleanMatrix, LogicalMatrix, CanonicalVector]


def as_boolean(value: BooleanLike) -> BooleanMatrix:
    if isinstance(value, BooleanMatrix):
        return value
    if isinstance(value, CanonicalVector):
        return BooleanMatrix(value.to_array().astype(bool))
    if isinstance(value, LogicalMatrix):
        return value.to_boolean()
    return BooleanMatrix(value)


def _require_same_shape(a: BooleanMatrix, b: BooleanMatrix, operation: str) -> None:
    if a.shape != b.shape:
        raise DimensionMismatchError("Operands have different shapes", a.shape, b.shape, operation)


def boolean_product(a: BooleanLike, b: BooleanLike) -> BooleanMatrix:
    """Matrix product over the (OR, AND) semiring"""
    a, b = as_boolean(a), as_boolean(b)
    if a.cols != b.rows:
        raise DimensionMismatchError("Inner dimensions differ", a.cols, b.rows, "boolean_product")
    product = a.to_array().astype(np.int64) @ b.to_array().astype(np.int64)
    return BooleanMatrix(product > 0)


def hadamard(a: BooleanLike, b: BooleanLike) -> BooleanMatrix:
    """Entrywise AND of two equally shaped matrices"""
    a, b = as_boolean(a), as_boolean(b)
    _require_same_shape(a, b, "hadamard")
    return BooleanMatrix(a.to_array() & b.to_array())


def reachability_closure(matrix: BooleanLike) -> BooleanMatrix:
    """
    I v L v L^2 v ... v L^(k-1) for a square k x k matrix L.

    Entry (i, j) is 1 iff node i can be reached from node j in the digraph of L.
    """
    matrix = as_boolean(matrix)
    if matrix.rows != matrix.cols:
        raise DimensionMismatchError("Closure of a non-square matrix", "square", matrix.shape,
                                     "reachability_closure")
    k = matrix.rows
    closure = BooleanMatrix.identity(k)
    power = BooleanMatrix.identity(k)
    for _ in range(k - 1):
        power = boolean_product(matrix, power)
        grown = closure | power
        if grown == closure:
            break
        closure = grown
    return closure


def is_irreducible(matrix: BooleanLike) -> bool:
    """True iff the OR of powers 0..k-1 has no zero entry"""
    closure = reachability_closure(matrix)
    return bool(closure.to_array().all())


def to_digraph(matrix: BooleanLike) -> nx.DiGraph:
    """
    Digraph of a square Boolean matrix on nodes 1..k.

    There is an edge j -> l iff entry (l, j) is 1: columns are sources and rows
    are targets.
    """
    matrix = as_boolean(matrix)
    if matrix.rows != matrix.cols:
        raise DimensionMismatchError("Digraph of a non-square matrix", "square", matrix.shape, "to_digraph")
    graph = nx.DiGraph()
    graph.add_nodes_from(range(1, matrix.rows + 1))
    targets, sources = np.nonzero(matrix.to_array())
    graph.add_edges_from((int(j) + 1, int(l) + 1) for l, j in zip(targets, sources))
    return graph
