"""
Configuration management for bcndata
"""
import logging
import os
from pathlib import Path
from typing import Any, Dict, Optional

import yaml
from dotenv import load_dotenv
from pydantic import BaseModel, Field
from pydantic import ValidationError as PydanticValidationError

from ..core.exceptions import ConfigurationError, ConfigurationFileNotFoundError, InvalidConfigurationError
from ..core.models import AnalysisConfig, OutputConfig, VerificationConfig

logger = logging.getLogger(__name__)

DEFAULT_CONFIG_PATH = "./bcndata.yaml"

# Environment variable -> (section, key, type)
ENV_OVERRIDES = {
    "BCNDATA_CYCLE_CAP": ("analysis", "cycle_cap", int),
    "BCNDATA_BUDGET": ("verification", "budget", int),
    "BCNDATA_SEED": ("verification", "seed", int),
    "BCNDATA_FORMAT": ("output", "format", str),
    "BCNDATA_LOG_LEVEL": (None, "log_level", str),
}


class AppConfig(BaseModel):
    """Main application configuration"""
    analysis: AnalysisConfig = Field(default_factory=AnalysisConfig)
    verification: VerificationConfig = Field(default_factory=VerificationConfig)
    output: OutputConfig = Field(default_factory=OutputConfig)

    # Global settings
    debug: bool = Field(default=False, description="Enable debug mode")
    log_level: str = Field(default="WARNING", description="Logging level")
    log_file: Optional[str] = Field(None, description="Log file path")


class ConfigManager:
    """Configuration manager"""

    def __init__(self, config_path: Optional[str] = None):
        self.explicit = config_path is not None
        self.config_path = config_path or self._find_config_file()
        self._config: Optional[AppConfig] = None

    def _find_config_file(self) -> str:
        """Find configuration file"""
        # Priority order: env var -> current dir -> home dir -> default
        paths = [
            os.getenv("BCNDATA_CONFIG"),
            "./bcndata.yaml",
            "./bcndata.yml",
            os.path.expanduser("~/.bcndata/config.yaml"),
        ]

        for path in paths:
            if path and Path(path).exists():
                return path

        return DEFAULT_CONFIG_PATH

    def load_config(self) -> AppConfig:
        """Load configuration from file, falling back to defaults when there is none"""
        if self._config is not None:
            return self._config

        load_dotenv()
        path = Path(self.config_path)
        if not path.exists():
            if self.explicit:
                raise ConfigurationFileNotFoundError(self.config_path)
            logger.debug(f"No configuration file at {self.config_path}; using defaults")
            config_data: Dict[str, Any] = {}
        else:
            try:
                with open(path, 'r', encoding='utf-8') as f:
                    config_data = yaml.safe_load(f) or {}
            except (OSError, yaml.YAMLError) as e:
                raise ConfigurationError(f"Failed to read configuration: {e}", self.config_path)
            if not isinstance(config_data, dict):
                raise ConfigurationError("Configuration root must be a mapping", self.config_path)

        config_data = self._apply_env_overrides(config_data)

        try:
            self._config = AppConfig(**config_data)
        except PydanticValidationError as e:
            invalid = ['.'.join(str(part) for part in error['loc']) for error in e.errors()]
            raise InvalidConfigurationError(f"Invalid configuration in {self.config_path}: {e}",
                                            config_section=invalid[0].split('.')[0] if invalid else "root",
                                            invalid_keys=invalid)
        return self._config

    def _apply_env_overrides(self, config_data: Dict[str, Any]) -> Dict[str, Any]:
        """Apply environment variable overrides"""
        for variable, (section, key, kind) in ENV_OVERRIDES.items():
            value = os.getenv(variable)
            if value is None:
                continue
            try:
                converted = kind(value)
            except ValueError:
                raise InvalidConfigurationError(f"{variable}={value!r} is not a valid {kind.__name__}",
                                                config_section=section or "root", invalid_keys=[key])
            if section is None:
                config_data[key] = converted
            else:
                config_data.setdefault(section, {})
                config_data[section][key] = converted
        return config_data

    def save_config(self, config: AppConfig) -> None:
        """Save configuration to file"""
        try:
            Path(self.config_path).parent.mkdir(parents=True, exist_ok=True)

            with open(self.config_path, 'w', encoding='utf-8') as f:
                yaml.dump(config.model_dump(mode='json'), f, default_flow_style=False, allow_unicode=True)

            self._config = config

        except OSError as e:
            raise ConfigurationError(f"Failed to save configuration: {e}", self.config_path)

    def create_default_config(self) -> AppConfig:
        """Create default configuration"""
        return AppConfig()
