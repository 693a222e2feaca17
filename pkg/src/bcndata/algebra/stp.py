"""
Semi-tensor product, Khatri-Rao product and the power-reducing matrix

Logical operands take an exact index-arithmetic path; anything else goes
through dense numpy Kronecker products.
"""
import logging
import math
from typing import Union, overload

import numpy as np
from scipy.linalg import khatri_rao as dense_khatri_rao

from ..core.exceptions import DimensionMismatchError, ValidationError
from .boolean import BooleanMatrix
from .logical import CanonicalVector, LogicalMatrix, as_logical

logger = logging.getLogger(__name__)

MatrixLike = Union[CanonicalVector, LogicalMatrix, BooleanMatrix, np.ndarray]


def _kron_identity_indices(matrix: LogicalMatrix, k: int) -> LogicalMatrix:
    """matrix (x) I_k, computed on column indices"""
    if k == 1:
        return matrix
    cols = (matrix.indices[:, None] * k + np.arange(k)).ravel()
    return LogicalMatrix._from_zero_based(matrix.rows * k, cols)


def _dense(value: MatrixLike) -> np.ndarray:
    if isinstance(value, CanonicalVector):
        return value.to_array().astype(np.float64)
    if isinstance(value, LogicalMatrix):
        return value.to_array().astype(np.float64)
    if isinstance(value, BooleanMatrix):
        return value.to_array().astype(np.float64)
    array = np.asarray(value, dtype=np.float64)
    if array.ndim == 1:
        array = array.reshape(-1, 1)
    if array.ndim != 2:
        raise DimensionMismatchError("Expected a matrix", 2, array.ndim, "stp")
    return array


def _stp_logical(a: LogicalMatrix, b: LogicalMatrix) -> LogicalMatrix:
    n, p = a.cols, b.rows
    lcm = math.lcm(n, p)
    left = _kron_identity_indices(a, lcm // n)
    right = _kron_identity_indices(b, lcm // p)
    return left.compose(right)


@overload
def stp(a: CanonicalVector, b: CanonicalVector) -> CanonicalVector: ...


@overload
def stp(a: LogicalMatrix, b: CanonicalVector) -> Union[CanonicalVector, LogicalMatrix]: ...


@overload
def stp(a: LogicalMatrix, b: LogicalMatrix) -> LogicalMatrix: ...


@overload
def stp(a: MatrixLike, b: MatrixLike) -> Union[CanonicalVector, LogicalMatrix, np.ndarray]: ...


def stp(a, b):
    """
    Left semi-tensor product a |x b = (a (x) I_{l/n})(b (x) I_{l/p}), l = lcm(n, p).

    Args:
        a: m x n operand
        b: p x q operand

    Returns:
        A canonical vector when b is a canonical vector and the product has a
        single column, a logical matrix for other logical operands, and a float
        numpy array otherwise.
    """
    logical_operands = isinstance(a, (CanonicalVector, LogicalMatrix)) and \
        isinstance(b, (CanonicalVector, LogicalMatrix))
    if logical_operands:
        left, right = as_logical(a), as_logical(b)
        if left.cols == 0 or right.cols == 0:
            raise ValidationError("Semi-tensor product of an empty matrix", "shape",
                                  (left.shape, right.shape))
        product = _stp_logical(left, right)
        if isinstance(b, CanonicalVector) and product.cols == 1:
            return product.column(1)
        return product

    left_dense, right_dense = _dense(a), _dense(b)
    if 0 in left_dense.shape or 0 in right_dense.shape:
        raise ValidationError("Semi-tensor product of an empty matrix", "shape",
                              (left_dense.shape, right_dense.shape))
    n, p = left_dense.shape[1], right_dense.shape[0]
    lcm = math.lcm(n, p)
    lifted_left = np.kron(left_dense, np.eye(lcm // n))
    lifted_right = np.kron(right_dense, np.eye(lcm // p))
    return lifted_left @ lifted_right


def stp_chain(*factors: MatrixLike):
    """Left-associated product of several factors"""
    if not factors:
        raise ValidationError("stp_chain needs at least one factor", "factors")
    result = factors[0]
    for factor in factors[1:]:
        result = stp(result, factor)
    return result


@overload
def khatri_rao(c: LogicalMatrix, d: LogicalMatrix) -> LogicalMatrix: ...


@overload
def khatri_rao(c: BooleanMatrix, d: BooleanMatrix) -> BooleanMatrix: ...


def khatri_rao(c, d):
    """
    Column-wise Kronecker product: column j is col_j(c) (x) col_j(d).

    Two logical matrices give a logical matrix whose column j has 1-based index
    (c_j - 1) * d.rows + d_j.
    """
    if c.cols != d.cols:
        raise DimensionMismatchError("Khatri-Rao operands need equal column counts",
                                     c.cols, d.cols, "khatri_rao")
    if isinstance(c, LogicalMatrix) and isinstance(d, LogicalMatrix):
        return LogicalMatrix._from_zero_based(c.rows * d.rows, c.indices * d.rows + d.indices)

    left = c.to_array() if isinstance(c, (BooleanMatrix, LogicalMatrix)) else np.asarray(c)
    right = d.to_array() if isinstance(d, (BooleanMatrix, LogicalMatrix)) else np.asarray(d)
    rows = left.shape[0] * right.shape[0]
    if left.shape[1] == 0:
        return BooleanMatrix.zeros(rows, 0)
    product = dense_khatri_rao(left.astype(np.uint8), right.astype(np.uint8))
    return BooleanMatrix(product > 0)


def power_reducing_matrix(n: int) -> LogicalMatrix:
    """Phi_n, the n^2 x n logical matrix with Phi_n x = x |x x for x in L_n"""
    if n < 1:
        raise ValidationError(f"Power-reducing matrix needs n >= 1, got {n}", "n", n)
    return LogicalMatrix(n * n, [(j - 1) * n + j for j in range(1, n + 1)])
