"""配置管理模块"""

from .defaults import DEFAULT_CONFIG
from .settings import DEFAULT_CONFIG_PATH, Settings
from .validator import (
    DEFAULT_RULES,
    ConfigValidator,
    ValidationError,
    ValidationRule,
    fix_config,
    validate_config,
)

__all__ = [
    "Settings",
    "DEFAULT_CONFIG",
    "DEFAULT_CONFIG_PATH",
    "DEFAULT_RULES",
    "ConfigValidator",
    "ValidationError",
    "ValidationRule",
    "validate_config",
    "fix_config",
]
