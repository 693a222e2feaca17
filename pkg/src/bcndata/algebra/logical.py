"""
Canonical vectors and logical matrices

A canonical vector delta_K^i is stored as its dimension and 1-based index; a
logical matrix is stored as an array of column indices. Indices are 1-based at
every public boundary and 0-based in the private numpy storage.
"""
from dataclasses import dataclass
from typing import TYPE_CHECKING, Iterable, Iterator, List, Tuple, Union

import numpy as np

from ..core.exceptions import DimensionMismatchError, ValidationError

if TYPE_CHECKING:
    from .boolean import BooleanMatrix


@dataclass(frozen=True, order=True)
class CanonicalVector:
    """The dim-dimensional canonical vector with a single 1 at row ``index``"""
    dim: int
    index: int

    def __post_init__(self) -> None:
        if self.dim < 1:
            raise ValidationError(f"Canonical vector dimension must be positive, got {self.dim}",
                                  "dim", self.dim)
        if not 1 <= self.index <= self.dim:
            raise ValidationError(f"Index {self.index} outside [1, {self.dim}]", "index", self.index)

    def to_array(self) -> np.ndarray:
        """Column vector (dim x 1) of zeros and ones"""
        vector = np.zeros((self.dim, 1), dtype=np.uint8)
        vector[self.index - 1, 0] = 1
        return vector

    @classmethod
    def from_array(cls, array: np.ndarray) -> "CanonicalVector":
        column = np.asarray(array).reshape(-1)
        nonzero = np.flatnonzero(column)
        if len(nonzero) != 1 or column[nonzero[0]] != 1:
            raise ValidationError("Array is not a canonical vector", "array", column.tolist())
        return cls(len(column), int(nonzero[0]) + 1)

    def __str__(self) -> str:
        return f"delta_{self.dim}^{self.index}"


def delta(dim: int, index: int) -> CanonicalVector:
    """Shorthand for ``CanonicalVector(dim, index)``"""
    return CanonicalVector(dim, index)


class LogicalMatrix:
    """
    A rows x cols matrix whose every column is a canonical vector.

    Stored as one row index per column. Instances are immutable.
    """

    __slots__ = ("_rows", "_cols")

    def __init__(self, rows: int, columns: Iterable[int]):
        """
        Args:
            rows: number of rows (dimension of every column)
            columns: 1-based row index of the unit entry of each column
        """
        if rows < 1:
            raise ValidationError(f"Logical matrix needs at least one row, got {rows}", "rows", rows)
        cols = np.asarray(list(columns), dtype=np.int64).reshape(-1) - 1
        if cols.size and (cols.min() < 0 or cols.max() >= rows):
            bad = [int(c) + 1 for c in cols if not 0 <= c < rows]
            raise ValidationError(f"Column indices {bad[:10]} outside [1, {rows}]", "columns", bad[:10])
        cols.setflags(write=False)
        self._rows = int(rows)
        self._cols = cols

    @classmethod
    def _from_zero_based(cls, rows: int, cols: np.ndarray) -> "LogicalMatrix":
        matrix = cls.__new__(cls)
        cols = np.asarray(cols, dtype=np.int64).reshape(-1).copy()
        cols.setflags(write=False)
        matrix._rows = int(rows)
        matrix._cols = cols
        return matrix

    @classmethod
    def from_array(cls, array: np.ndarray) -> "LogicalMatrix":
        """Build from a dense 0-1 array, checking that every column is canonical"""
        dense = np.asarray(array)
        if dense.ndim != 2:
            raise DimensionMismatchError("Expected a two-dimensional array", 2, dense.ndim, "from_array")
        column_sums = dense.astype(np.int64).sum(axis=0)
        if dense.size and (np.any(column_sums != 1) or np.any((dense != 0) & (dense != 1))):
            raise ValidationError("Array is not a logical matrix", "array")
        return cls._from_zero_based(dense.shape[0], np.argmax(dense, axis=0))

    @classmethod
    def identity(cls, n: int) -> "LogicalMatrix":
        return cls._from_zero_based(n, np.arange(n))

    @property
    def rows(self) -> int:
        return self._rows

    @property
    def cols(self) -> int:
        return int(self._cols.size)

    @property
    def shape(self) -> Tuple[int, int]:
        return self._rows, self.cols

    @property
    def indices(self) -> np.ndarray:
        """Read-only 0-based row index of every column"""
        return self._cols

    @property
    def columns(self) -> Tuple[int, ...]:
        """1-based row index of every column"""
        return tuple(int(c) + 1 for c in self._cols)

    def column(self, j: int) -> CanonicalVector:
        """The j-th column (1-based) as a canonical vector"""
        if not 1 <= j <= self.cols:
            raise ValidationError(f"Column {j} outside [1, {self.cols}]", "column", j)
        return CanonicalVector(self._rows, int(self._cols[j - 1]) + 1)

    def __getitem__(self, j: int) -> int:
        """1-based row index of the unit entry of column j (1-based)"""
        if not 1 <= j <= self.cols:
            raise ValidationError(f"Column {j} outside [1, {self.cols}]", "column", j)
        return int(self._cols[j - 1]) + 1

    def __iter__(self) -> Iterator[int]:
        return iter(self.columns)

    def __len__(self) -> int:
        return self.cols

    def block(self, i: int, width: int) -> "LogicalMatrix":
        """The i-th (1-based) group of ``width`` consecutive columns"""
        if width < 1 or self.cols % width:
            raise DimensionMismatchError("Block width does not divide the column count",
                                         f"divisor of {self.cols}", width, "block")
        count = self.cols // width
        if not 1 <= i <= count:
            raise ValidationError(f"Block {i} outside [1, {count}]", "block", i)
        return self._from_zero_based(self._rows, self._cols[(i - 1) * width:i * width])

    def compose(self, other: "LogicalMatrix") -> "LogicalMatrix":
        """Ordinary matrix product ``self @ other`` of conformable logical matrices"""
        if self.cols != other.rows:
            raise DimensionMismatchError("Inner dimensions differ", self.cols, other.rows, "compose")
        return self._from_zero_based(self._rows, self._cols[other._cols])

    def to_array(self) -> np.ndarray:
        dense = np.zeros((self._rows, self.cols), dtype=np.uint8)
        dense[self._cols, np.arange(self.cols)] = 1
        return dense

    def to_boolean(self) -> "BooleanMatrix":
        from .boolean import BooleanMatrix

        return BooleanMatrix(self.to_array().astype(bool))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LogicalMatrix):
            return NotImplemented
        return self._rows == other._rows and np.array_equal(self._cols, other._cols)

    def __hash__(self) -> int:
        return hash((self._rows, self._cols.tobytes()))

    def __repr__(self) -> str:
        shown: List[str] = [str(c) for c in self.columns[:16]]
        more = ", ..." if self.cols > 16 else ""
        return f"LogicalMatrix({self._rows}x{self.cols}, [{', '.join(shown)}{more}])"


LogicalLike = Union[CanonicalVector, LogicalMatrix]


def as_logical(value: LogicalLike) -> LogicalMatrix:
    """View a canonical vector as a one-column logical matrix"""
    if isinstance(value, CanonicalVector):
        return LogicalMatrix(value.dim, [value.index])
    return value
