"""
Data-driven analyses: reachability, equilibria and cycles
"""
from .reachability import BasinResult, basin, informative_for_reachability, state_set
from .equilibria import data_equilibria
from .cycles import CycleSet, DEFAULT_CYCLE_CAP, canonical_cycle, cycles_within, data_subgraph, target_states

__all__ = [
    'BasinResult', 'basin', 'informative_for_reachability', 'state_set',
    'data_equilibria',
    'CycleSet', 'DEFAULT_CYCLE_CAP', 'canonical_cycle', 'cycles_within', 'data_subgraph', 'target_states',
]
