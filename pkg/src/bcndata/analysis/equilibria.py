"""
Equilibria compatible with the data
"""
import logging
from typing import Dict

import numpy as np

from ..algebra.boolean import hadamard
from ..data.dataset import DataSet

logger = logging.getLogger(__name__)


def data_equilibria(ds: DataSet) -> Dict[int, int]:
    """
    States observed as fixed points, each with the input of its first witness.

    A column k with (X_p (.) X_f) delta_T^k = delta_N^j shows x(t) = x(t+1) = j;
    the returned map sends j to U_p delta_T^k.
    """
    fixed = hadamard(ds.Xp, ds.Xf).to_array().any(axis=0)
    equilibria: Dict[int, int] = {}
    for k in np.flatnonzero(fixed):
        state = ds.Xp[int(k) + 1]
        equilibria.setdefault(state, ds.Up[int(k) + 1])
    logger.debug(f"Data equilibria: {sorted(equilibria)}")
    return dict(sorted(equilibria.items()))
