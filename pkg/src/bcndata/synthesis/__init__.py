"""
Feedback synthesis from data: safe control and output regulation
"""
from .safe_control import SafeControlResult, safe_control, stay_inputs
from .regulation import RegulationResult, output_regulation
from .validity import closed_loop_from_data, safe_feedback_is_valid, regulation_feedback_is_valid

__all__ = [
    'SafeControlResult', 'safe_control', 'stay_inputs',
    'RegulationResult', 'output_regulation',
    'closed_loop_from_data', 'safe_feedback_is_valid', 'regulation_feedback_is_valid',
]
