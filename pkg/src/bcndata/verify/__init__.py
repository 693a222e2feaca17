"""
Independent checks of synthesized feedbacks over the compatible family
"""
from .family import (
    CompatibleFamily, compatible_family, family_size, complete, enumerate_or_sample,
    adversarial_completion
)
from .checks import (
    Counterexample, Verdict, check_safe_control, check_output_regulation, safe_control_failure,
    regulation_failure, safe_control_models, regulation_models, verify_safe_control,
    verify_output_regulation, all_feedbacks, find_feedback
)

__all__ = [
    'CompatibleFamily', 'compatible_family', 'family_size', 'complete', 'enumerate_or_sample',
    'adversarial_completion',
    'Counterexample', 'Verdict', 'check_safe_control', 'check_output_regulation', 'safe_control_failure',
    'regulation_failure', 'safe_control_models', 'regulation_models', 'verify_safe_control',
    'verify_output_regulation', 'all_feedbacks', 'find_feedback',
]
