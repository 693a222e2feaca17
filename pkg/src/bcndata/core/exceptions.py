"""
Custom exceptions for bcndata

This module provides the exception hierarchy used across the package, with
specific exception types for malformed inputs, inconsistent data and the
failure modes of the analysis and synthesis routines.
"""
from typing import Optional, Dict, Any, Iterable


class BCNDataError(Exception):
    """
    Base exception for bcndata

    All custom exceptions inherit from this base class to provide
    consistent error handling throughout the application.
    """

    def __init__(self, message: str, error_code: Optional[str] = None, context: Optional[Dict[str, Any]] = None):
        self.message = message
        self.error_code = error_code
        self.context = context or {}
        super().__init__(self.message)

    def __str__(self) -> str:
        if self.error_code:
            return f"[{self.error_code}] {self.message}"
        return self.message

    def to_dict(self) -> Dict[str, Any]:
        """Convert exception to dictionary for JSON serialization"""
        return {
            'error': self.__class__.__name__,
            'message': self.message,
            'error_code': self.error_code,
            'context': self.context
        }


# Input validation exceptions
class ValidationError(BCNDataError):
    """Raised when an argument is out of range or malformed"""

    def __init__(self, message: str, field_name: Optional[str] = None,
                 field_value: Optional[Any] = None, error_code: str = "VALIDATION_ERROR"):
        context: Dict[str, Any] = {}
        if field_name:
            context['field_name'] = field_name
        if field_value is not None:
            context['field_value'] = str(field_value)[:100]  # Limit value length
        super().__init__(message, error_code, context)


class DimensionMismatchError(BCNDataError):
    """Raised when matrix shapes or network dimensions do not agree"""

    def __init__(self, message: str, expected: Optional[Any] = None, actual: Optional[Any] = None,
                 operation: Optional[str] = None, error_code: str = "DIMENSION_MISMATCH"):
        context: Dict[str, Any] = {}
        if expected is not None:
            context['expected'] = str(expected)
        if actual is not None:
            context['actual'] = str(actual)
        if operation:
            context['operation'] = operation
        super().__init__(message, error_code, context)


# Data exceptions
class InconsistentDataError(BCNDataError):
    """Raised when recorded data cannot come from a single deterministic BCN"""

    def __init__(self, message: str, column: Optional[int] = None,
                 conflict: Optional[Dict[str, Any]] = None):
        context: Dict[str, Any] = {}
        if column is not None:
            context['column'] = column
        if conflict:
            context.update(conflict)
        super().__init__(message, "INCONSISTENT_DATA", context)


class NotInformativeError(BCNDataError):
    """Raised when the data do not identify the network uniquely"""

    def __init__(self, message: str, missing_pairs: Optional[Iterable[Any]] = None):
        context: Dict[str, Any] = {}
        if missing_pairs is not None:
            missing = list(missing_pairs)
            context['missing_pairs'] = missing[:20]
            context['missing_count'] = len(missing)
        super().__init__(message, "NOT_INFORMATIVE", context)


class MissingOutputsError(BCNDataError):
    """Raised when an output-based operation runs on output-free data"""

    def __init__(self, operation: str):
        super().__init__(f"Operation '{operation}' requires recorded outputs", "MISSING_OUTPUTS",
                         {'operation': operation})


# Analysis and synthesis exceptions
class EmptyTargetError(BCNDataError):
    """Raised when a target state set is empty"""

    def __init__(self, operation: str):
        super().__init__(f"Operation '{operation}' needs a non-empty state set", "EMPTY_TARGET",
                         {'operation': operation})


class EmptySafeSetError(BCNDataError):
    """Raised when the unsafe set covers every state"""

    def __init__(self, n_states: int):
        super().__init__(f"The unsafe set covers all {n_states} states; the safe set is empty",
                         "EMPTY_SAFE_SET", {'n_states': n_states})


class CycleCapExceededError(BCNDataError):
    """Raised when simple-cycle enumeration exceeds the configured cap"""

    def __init__(self, cap: int, node_count: Optional[int] = None):
        context: Dict[str, Any] = {'cap': cap}
        if node_count is not None:
            context['node_count'] = node_count
        super().__init__(f"More than {cap} simple cycles; raise the cycle cap to continue",
                         "CAP_EXCEEDED", context)


class SynthesisError(BCNDataError):
    """Raised when a synthesized feedback fails its own validity re-check"""

    def __init__(self, message: str, problem: Optional[str] = None):
        context: Dict[str, Any] = {}
        if problem:
            context['problem'] = problem
        super().__init__(message, "SYNTHESIS_ERROR", context)


# Configuration exceptions
class ConfigurationError(BCNDataError):
    """Raised when configuration is invalid"""

    def __init__(self, message: str, config_file: Optional[str] = None,
                 config_section: Optional[str] = None, error_code: str = "CONFIGURATION_ERROR"):
        context: Dict[str, Any] = {}
        if config_file:
            context['config_file'] = config_file
        if config_section:
            context['config_section'] = config_section
        super().__init__(message, error_code, context)


class ConfigurationFileNotFoundError(ConfigurationError):
    """Raised when configuration file is not found"""

    def __init__(self, config_file: str):
        message = f"Configuration file not found: {config_file}"
        super().__init__(message, config_file, error_code="CONFIG_FILE_NOT_FOUND")


class InvalidConfigurationError(ConfigurationError):
    """Raised when configuration values are invalid"""

    def __init__(self, message: str, config_section: str, invalid_keys: Optional[list] = None):
        super().__init__(message, config_section=config_section, error_code="INVALID_CONFIGURATION")
        if invalid_keys:
            self.context['invalid_keys'] = invalid_keys


# File exceptions
class FileFormatError(BCNDataError):
    """Raised when a model or trace file cannot be read or validated"""

    def __init__(self, message: str, file_path: Optional[str] = None,
                 file_kind: Optional[str] = None, error_code: str = "FILE_FORMAT_ERROR"):
        context: Dict[str, Any] = {}
        if file_path:
            context['file_path'] = file_path
        if file_kind:
            context['file_kind'] = file_kind
        super().__init__(message, error_code, context)
