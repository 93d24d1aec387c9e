"""工具模块"""

from .i18n import I18n, Language, get_i18n, t
from .logging import LoggerMixin, get_logger, setup_logging

__all__ = [
    # Logging
    "setup_logging",
    "get_logger",
    "LoggerMixin",
    # i18n
    "I18n",
    "Language",
    "get_i18n",
    "t",
]
