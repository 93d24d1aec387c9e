"""
GdmaLab 日志系统

控制台日志写到 stderr，stdout 留给表格和 CSV 输出。
文件日志默认关闭，仿真长跑时用 --log-dir 打开。
"""

import logging
import sys
from datetime import datetime
from logging.handlers import RotatingFileHandler
from pathlib import Path
from typing import Optional

ROOT_LOGGER = "gdmalab"

CONSOLE_FORMAT = "%(levelname)s: %(message)s"
CONSOLE_FORMAT_DEBUG = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
FILE_FORMAT = (
    "%(asctime)s - %(name)s - %(levelname)s - %(filename)s:%(lineno)d - %(message)s"
)

DEFAULT_LOG_DIR = Path.home() / ".local" / "share" / "gdmalab" / "logs"

_loggers: dict[str, logging.Logger] = {}
_initialized = False


class ColoredFormatter(logging.Formatter):
    """带颜色的控制台日志格式化器"""

    COLORS = {
        "DEBUG": "\033[36m",
        "INFO": "\033[32m",
        "WARNING": "\033[33m",
        "ERROR": "\033[31m",
        "CRITICAL": "\033[35m",
    }
    RESET = "\033[0m"

    def __init__(self, fmt: str = None, use_colors: bool = True, stream=None):
        super().__init__(fmt)
        stream = stream or sys.stderr
        self.use_colors = use_colors and hasattr(stream, "isatty") and stream.isatty()

    def format(self, record: logging.LogRecord) -> str:
        if not self.use_colors or record.levelname not in self.COLORS:
            return super().format(record)
        # 不修改原 record，文件处理器还要用
        colored = logging.makeLogRecord(record.__dict__)
        colored.levelname = f"{self.COLORS[record.levelname]}{record.levelname}{self.RESET}"
        return super().format(colored)


def setup_logging(
    debug: bool = False,
    log_dir: Optional[Path] = None,
    log_file: bool = False,
    max_file_size: int = 5 * 1024 * 1024,
    backup_count: int = 3,
    use_colors: bool = True,
    force: bool = False,
) -> logging.Logger:
    """
    设置日志系统

    Args:
        debug: 是否启用调试输出（逐块进度）
        log_dir: 日志文件目录，给出时自动启用文件日志
        log_file: 是否启用文件日志
        max_file_size: 单个日志文件最大大小（字节）
        backup_count: 保留的备份文件数量
        use_colors: 是否使用彩色输出
        force: 已初始化时是否重新配置（CLI 每次调用都会重新配置）

    Returns:
        根日志器
    """
    global _initialized

    root_logger = logging.getLogger(ROOT_LOGGER)
    if _initialized and not force:
        return root_logger

    level = logging.DEBUG if debug else logging.WARNING
    root_logger.setLevel(logging.DEBUG)
    root_logger.propagate = False

    for handler in root_logger.handlers[:]:
        root_logger.removeHandler(handler)
        handler.close()

    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setLevel(level)
    console_format = CONSOLE_FORMAT_DEBUG if debug else CONSOLE_FORMAT
    console_handler.setFormatter(ColoredFormatter(console_format, use_colors=use_colors))
    root_logger.addHandler(console_handler)

    if log_file or log_dir is not None:
        try:
            log_dir = Path(log_dir) if log_dir is not None else DEFAULT_LOG_DIR
            log_dir.mkdir(parents=True, exist_ok=True)
            log_path = log_dir / f"gdmalab_{datetime.now().strftime('%Y%m%d')}.log"

            file_handler = RotatingFileHandler(
                log_path,
                maxBytes=max_file_size,
                backupCount=backup_count,
                encoding="utf-8",
            )
            file_handler.setLevel(logging.DEBUG)
            file_handler.setFormatter(logging.Formatter(FILE_FORMAT))
            root_logger.addHandler(file_handler)
            root_logger.debug(f"Log file: {log_path}")
        except OSError as e:
            root_logger.warning(f"Cannot create log file: {e}")

    _initialized = True
    return root_logger


def get_logger(name: str = None) -> logging.Logger:
    """
    获取日志器

    Args:
        name: 模块名，src.x.y 会映射到 gdmalab.x.y

    Returns:
        日志器实例

    Example:
        >>> logger = get_logger(__name__)
        >>> logger.info("sweep finished")
    """
    if not _initialized:
        setup_logging()

    if name is None:
        return logging.getLogger(ROOT_LOGGER)

    if name.startswith(f"{ROOT_LOGGER}."):
        full_name = name
    elif name.startswith("src."):
        full_name = f"{ROOT_LOGGER}.{name[4:]}"
    else:
        full_name = f"{ROOT_LOGGER}.{name}"

    if full_name not in _loggers:
        _loggers[full_name] = logging.getLogger(full_name)

    return _loggers[full_name]


class LoggerMixin:
    """
    日志器混入类

    Example:
        >>> class Harness(LoggerMixin):
        ...     def run(self):
        ...         self.logger.info("running")
    """

    @property
    def logger(self) -> logging.Logger:
        if "_logger" not in self.__dict__:
            self.__dict__["_logger"] = get_logger(self.__class__.__module__)
        return self.__dict__["_logger"]

    def __getstate__(self):
        # 日志器不参与 pickle，进程池里重新获取
        state = self.__dict__.copy()
        state.pop("_logger", None)
        return state
