"""
Experiment data: assembly, knowledge mask and identification
"""
from .dataset import DataColumn, DataSet, KnowledgeMask, assemble, knowledge_mask
from .identification import (
    is_informative_for_identifiability, covers_all_pairs, missing_pairs, identify,
    identify_transition_matrix, identify_transition_matrix_real, identify_output_matrix,
    identify_output_matrix_pinv, l_tot_d, informative_for_network_reachability
)

__all__ = [
    'DataColumn', 'DataSet', 'KnowledgeMask', 'assemble', 'knowledge_mask',
    'is_informative_for_identifiability', 'covers_all_pairs', 'missing_pairs', 'identify',
    'identify_transition_matrix', 'identify_transition_matrix_real', 'identify_output_matrix',
    'identify_output_matrix_pinv', 'l_tot_d', 'informative_for_network_reachability',
]
