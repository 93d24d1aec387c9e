"""
配置管理

从 YAML 文件加载扁平的仿真配置，合并到默认值之上。
"""

from pathlib import Path
from typing import Any, List, Optional

import yaml

from ..exceptions import ConfigNotFoundError, ConfigParseError
from ..utils.logging import get_logger
from .defaults import DEFAULT_CONFIG

logger = get_logger(__name__)

DEFAULT_CONFIG_PATH = Path(__file__).parent.parent.parent / "config" / "simulation.yaml"


class Settings:
    """
    配置管理器

    Example:
        >>> settings = Settings("config/simulation.yaml")
        >>> settings.get("n_users")
        15
    """

    def __init__(self, config_path: Optional[str] = None, required: bool = True):
        """
        Args:
            config_path: 配置文件路径，None 时只用默认值
            required: 文件不存在时是否报错

        Raises:
            ConfigNotFoundError: 文件不存在且 required 为 True
            ConfigParseError: YAML 无法解析或顶层不是映射
        """
        self.config_path = Path(config_path) if config_path is not None else None
        self.required = required and config_path is not None
        self._config: dict = {}
        self.load()

    def load(self) -> dict:
        self._config = self._deep_copy(DEFAULT_CONFIG)
        if self.config_path is None:
            return self._config

        if not self.config_path.exists():
            if self.required:
                raise ConfigNotFoundError(str(self.config_path))
            logger.debug(f"Config file not found, using defaults: {self.config_path}")
            return self._config

        try:
            with open(self.config_path, "r", encoding="utf-8") as f:
                user_config = yaml.safe_load(f) or {}
        except yaml.YAMLError as e:
            raise ConfigParseError(str(self.config_path), str(e)) from e
        if not isinstance(user_config, dict):
            raise ConfigParseError(str(self.config_path), "top level must be a mapping")

        self._config.update(self._deep_copy(user_config))
        logger.debug(f"Loaded config: {self.config_path}")
        return self._config

    def save(self, path: Optional[str] = None):
        target = Path(path) if path is not None else self.config_path
        if target is None:
            raise ConfigNotFoundError("<unset>")
        target.parent.mkdir(parents=True, exist_ok=True)
        with open(target, "w", encoding="utf-8") as f:
            yaml.safe_dump(self._config, f, default_flow_style=None, sort_keys=False)

    def get(self, key: str, default: Any = None) -> Any:
        """
        获取配置值

        Args:
            key: 配置键，兼容点分隔写法
            default: 默认值
        """
        value = self._config
        for k in key.split("."):
            if isinstance(value, dict) and k in value:
                value = value[k]
            else:
                return default
        return value

    def set(self, key: str, value: Any):
        keys = key.split(".")
        config = self._config
        for k in keys[:-1]:
            config = config.setdefault(k, {})
        config[keys[-1]] = value

    def reset(self):
        self._config = self._deep_copy(DEFAULT_CONFIG)

    @property
    def config(self) -> dict:
        return self._config

    # ===== 便捷属性 =====

    @property
    def n_users(self) -> int:
        return self.get("n_users", 15)

    @property
    def master_seed(self) -> int:
        return self.get("master_seed", 0)

    @master_seed.setter
    def master_seed(self, value: int):
        self.set("master_seed", value)

    @property
    def workers(self) -> int:
        return self.get("workers", 1)

    @workers.setter
    def workers(self, value: int):
        self.set("workers", value)

    @property
    def ebn0_points_db(self) -> List[float]:
        return list(self.get("ebn0_points_db", []))

    # ===== 辅助方法 =====

    def _deep_copy(self, obj: Any) -> Any:
        if isinstance(obj, dict):
            return {k: self._deep_copy(v) for k, v in obj.items()}
        if isinstance(obj, list):
            return [self._deep_copy(v) for v in obj]
        return obj
