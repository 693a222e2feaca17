"""
Identifiability of the network from data, and identification itself
"""
import logging
from typing import List, Tuple

import numpy as np

from ..algebra.boolean import BooleanMatrix, boolean_product, is_irreducible
from ..algebra.logical import LogicalMatrix
from ..algebra.stp import khatri_rao
from ..core.exceptions import MissingOutputsError, NotInformativeError
from ..network.bcn import Bcn
from .dataset import DataSet

logger = logging.getLogger(__name__)


def _input_state_pairs(ds: DataSet) -> LogicalMatrix:
    """U_p * X_p; column k has index (i-1)N + j for (u, x) = (delta_M^i, delta_N^j)"""
    return khatri_rao(ds.Up, ds.Xp)


def missing_pairs(ds: DataSet) -> List[Tuple[int, int]]:
    """(input, state) pairs that never occur in the data"""
    return ds.mask.free_columns


def is_informative_for_identifiability(ds: DataSet) -> bool:
    """True iff U_p * X_p has no zero row"""
    return not _input_state_pairs(ds).to_boolean().zero_rows()


def covers_all_pairs(ds: DataSet) -> bool:
    """True iff every (input, state) pair occurs in some data column"""
    seen = {(column.u, column.x) for column in ds.columns()}
    return len(seen) == ds.n_states * ds.n_inputs


def l_tot_d(ds: DataSet) -> BooleanMatrix:
    """X_f (.)_B X_p^T: entry (i, j) is 1 iff the data show a transition j -> i"""
    return boolean_product(ds.Xf, ds.Xp.to_boolean().T)


def informative_for_network_reachability(ds: DataSet) -> bool:
    """The data prove every compatible network reachable iff L_tot^d is irreducible"""
    return is_irreducible(l_tot_d(ds))


def _require_identifiable(ds: DataSet) -> None:
    if not is_informative_for_identifiability(ds):
        missing = missing_pairs(ds)
        raise NotInformativeError(
            f"The data leave {len(missing)} of {ds.n_states * ds.n_inputs} columns of L undetermined",
            missing_pairs=missing)


def identify_transition_matrix(ds: DataSet) -> LogicalMatrix:
    """L = X_f (.)_B (U_p * X_p)^T"""
    _require_identifiable(ds)
    pairs = _input_state_pairs(ds).to_boolean()
    return boolean_product(ds.Xf, pairs.T).to_logical()


def identify_transition_matrix_real(ds: DataSet) -> LogicalMatrix:
    """
    The same L through ordinary arithmetic:
    X_f (U_p*X_p)^T diag(1^T X_f (U_p*X_p)^T)^{-1}
    """
    _require_identifiable(ds)
    pairs = _input_state_pairs(ds).to_array().astype(np.float64)
    counts = ds.Xf.to_array().astype(np.float64) @ pairs.T
    normalised = counts @ np.diag(1.0 / counts.sum(axis=0))
    return LogicalMatrix.from_array(np.rint(normalised).astype(np.uint8))


def _require_outputs(ds: DataSet, operation: str) -> LogicalMatrix:
    if ds.Yp is None:
        raise MissingOutputsError(operation)
    return ds.Yp


def identify_output_matrix(ds: DataSet) -> LogicalMatrix:
    """H by lookup: column j is the output recorded at any visit of state j"""
    _require_outputs(ds, "identify_output_matrix")
    unseen = ds.mask.free_outputs
    if unseen:
        raise NotInformativeError(f"States {unseen} never appear in X_p; H is not determined",
                                  missing_pairs=unseen)
    return LogicalMatrix(ds.n_outputs or 1, ds.mask.partial_output_columns())


def identify_output_matrix_pinv(ds: DataSet) -> LogicalMatrix:
    """H = Y_p X_p^# with the right inverse X_p^# = X_p^T (X_p X_p^T)^{-1}"""
    yp = _require_outputs(ds, "identify_output_matrix_pinv")
    unseen = ds.mask.free_outputs
    if unseen:
        raise NotInformativeError(f"X_p is not of full row rank; states {unseen} never appear",
                                  missing_pairs=unseen)
    xp = ds.Xp.to_array().astype(np.float64)
    right_inverse = xp.T @ np.linalg.inv(xp @ xp.T)
    h = yp.to_array().astype(np.float64) @ right_inverse
    return LogicalMatrix.from_array(np.rint(h).astype(np.uint8))


def identify(ds: DataSet) -> Bcn:
    """
    The unique network compatible with informative data.

    Output-free data identify L only; the returned network then has a
    single output.
    """
    transitions = identify_transition_matrix(ds)
    if ds.has_outputs:
        outputs = identify_output_matrix(ds)
    else:
        outputs = LogicalMatrix(1, [1] * ds.n_states)
    logger.info(f"Identified a BCN with N={ds.n_states}, M={ds.n_inputs}, P={outputs.rows}")
    return Bcn(transitions, outputs)
