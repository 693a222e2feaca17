"""
Boolean and logical matrix algebra
"""
from .logical import CanonicalVector, LogicalMatrix, delta, as_logical
from .boolean import (
    BooleanMatrix, as_boolean, boolean_product, hadamard, is_irreducible,
    reachability_closure, to_digraph
)
from .stp import stp, stp_chain, khatri_rao, power_reducing_matrix

__all__ = [
    'CanonicalVector', 'LogicalMatrix', 'delta', 'as_logical',
    'BooleanMatrix', 'as_boolean', 'boolean_product', 'hadamard', 'is_irreducible',
    'reachability_closure', 'to_digraph',
    'stp', 'stp_chain', 'khatri_rao', 'power_reducing_matrix',
]
