"""
GdmaLab 仿真规格

一次扫描的全部参数：链路、信噪比点、停止条件、种子与并行度。
"""

from dataclasses import dataclass, field, replace
from typing import Any, Dict, Iterator, Mapping, Optional, Tuple, Union

from ..config.defaults import DEFAULT_CONFIG
from ..config.settings import Settings
from ..config.validator import ConfigValidator
from ..exceptions import ConfigInvalidError, ConfigValidationError
from ..link.link_config import LinkConfig, SpectrumMode

MIN_BITS_FLOOR = 1000


@dataclass(frozen=True)
class StopRule:
    """
    每个信噪比点的停止条件

    同时满足 min_bits 与 min_errors 时停止；累计到 max_bits 仍不满足则记为预算耗尽。
    strict 为 True 时预算耗尽直接抛出 BudgetExhaustedError。
    """

    min_bits: int = 10**6
    min_errors: int = 200
    max_bits: int = 10**7
    strict: bool = False

    def satisfied(self, bits: int, errors: int) -> bool:
        return bits >= self.min_bits and errors >= self.min_errors

    def exhausted(self, bits: int) -> bool:
        return bits >= self.max_bits


@dataclass(frozen=True)
class SimulationSpec:
    """
    蒙特卡洛扫描规格

    Attributes:
        link: 基础链路配置，mode 与 modulation 由 modes / modulations 逐一替换
        ebn0_points_db: 严格递增的 Eb/N0 点（dB）
        stop: 停止条件
        master_seed: 主种子
        workers: 进程数，不影响结果
        frames_per_block: 每块帧数
        modes: 要扫描的频谱模式
        modulations: 要扫描的星座
    """

    link: LinkConfig = field(default_factory=LinkConfig)
    ebn0_points_db: Tuple[float, ...] = (0.0, 2.0, 4.0, 6.0, 8.0, 10.0)
    stop: StopRule = field(default_factory=StopRule)
    master_seed: int = 0
    workers: int = 1
    frames_per_block: int = 256
    modes: Tuple[SpectrumMode, ...] = (SpectrumMode.FS,)
    modulations: Tuple[str, ...] = ("bpsk",)

    def __post_init__(self):
        object.__setattr__(self, "ebn0_points_db", tuple(float(x) for x in self.ebn0_points_db))
        object.__setattr__(self, "modes", tuple(SpectrumMode(m) for m in self.modes))
        object.__setattr__(self, "modulations", tuple(self.modulations))

    def validate(self) -> None:
        """
        Raises:
            ConfigValidationError: 参数不合法
            ConfigInvalidError: 某个 (mode, modulation) 组合的链路不成立
        """
        if self.stop.min_bits < MIN_BITS_FLOOR:
            raise ConfigValidationError("min_bits", self.stop.min_bits, f">= {MIN_BITS_FLOOR}")
        if self.stop.min_errors < 0:
            raise ConfigValidationError("min_errors", self.stop.min_errors, ">= 0")
        if self.stop.max_bits < self.stop.min_bits:
            raise ConfigValidationError("max_bits", self.stop.max_bits, "must be >= min_bits")
        if not self.ebn0_points_db:
            raise ConfigValidationError("ebn0_points_db", [], "empty")
        points = self.ebn0_points_db
        if any(b <= a for a, b in zip(points, points[1:])):
            raise ConfigValidationError("ebn0_points_db", list(points), "strictly increasing")
        if self.workers < 1:
            raise ConfigValidationError("workers", self.workers, ">= 1")
        if self.frames_per_block < 1:
            raise ConfigValidationError("frames_per_block", self.frames_per_block, ">= 1")
        if not self.modes or not self.modulations:
            raise ConfigValidationError("modes/modulations", None, "empty")
        for cfg in self.link_configs():
            cfg.validate()

    def link_configs(self) -> Iterator[LinkConfig]:
        """按 (mode, modulation) 依次生成链路配置"""
        for mode in self.modes:
            for modulation in self.modulations:
                yield replace(self.link, mode=mode, modulation=modulation)

    def with_workers(self, workers: int) -> "SimulationSpec":
        return replace(self, workers=workers)

    def with_seed(self, master_seed: int) -> "SimulationSpec":
        return replace(self, master_seed=master_seed)

    @classmethod
    def from_mapping(cls, data: Mapping[str, Any]) -> "SimulationSpec":
        """从扁平配置构造（键名同 DEFAULT_CONFIG）"""
        try:
            link = LinkConfig(
                transform=data["transform"],
                p=int(data["p"]),
                m=int(data["m"]),
                poly=data.get("poly"),
                q=int(data["q"]),
                n_users=int(data["n_users"]),
                code=str(data["code"]),
                symbol_duration=float(data["symbol_duration"]),
                energy_convention=data["energy_convention"],
            )
            spec = cls(
                link=link,
                ebn0_points_db=tuple(data["ebn0_points_db"]),
                stop=StopRule(
                    min_bits=int(data["min_bits"]),
                    min_errors=int(data["min_errors"]),
                    max_bits=int(data["max_bits"]),
                    strict=bool(data.get("strict_budget", False)),
                ),
                master_seed=int(data["master_seed"]),
                workers=int(data["workers"]),
                frames_per_block=int(data["frames_per_block"]),
                modes=tuple(str(m).upper() for m in data["modes"]),
                modulations=tuple(str(m).lower() for m in data["modulations"]),
            )
        except KeyError as e:
            raise ConfigValidationError(str(e.args[0]), None, "missing") from e
        except (TypeError, ValueError) as e:
            raise ConfigValidationError("simulation", None, str(e)) from e
        return spec

    @classmethod
    def from_settings(
        cls,
        settings: Union[Settings, Dict[str, Any]],
        overrides: Optional[Dict[str, Any]] = None,
    ) -> "SimulationSpec":
        """
        校验配置并构造规格

        Args:
            settings: Settings 实例或扁平字典（未给出的键取默认值）
            overrides: 命令行覆盖项，None 值忽略

        Raises:
            ConfigValidationError: 第一个校验错误
        """
        data = dict(DEFAULT_CONFIG)
        data.update(settings.config if isinstance(settings, Settings) else settings)
        for key, value in (overrides or {}).items():
            if value is not None:
                data[key] = value

        errors = [e for e in ConfigValidator(strict=True).validate(data) if e.severity == "error"]
        if errors:
            first = errors[0]
            raise ConfigValidationError(first.key, first.value, first.message)

        spec = cls.from_mapping(data)
        try:
            spec.validate()
        except ConfigInvalidError as e:
            raise ConfigValidationError("link", data.get("transform"), str(e)) from e
        return spec
