"""
Boolean control networks: representation, simulation and model-based properties
"""
from .bcn import (
    Bcn, Bn, FeedbackMatrix, step, simulate, l_tot, closed_loop, closed_loop_stp,
    random_bcn, random_inputs
)
from .properties import (
    model_equilibria, model_reachable_set, model_safe_control_solvable,
    model_output_regulation_solvable
)

__all__ = [
    'Bcn', 'Bn', 'FeedbackMatrix', 'step', 'simulate', 'l_tot', 'closed_loop', 'closed_loop_stp',
    'random_bcn', 'random_inputs',
    'model_equilibria', 'model_reachable_set', 'model_safe_control_solvable',
    'model_output_regulation_solvable',
]
