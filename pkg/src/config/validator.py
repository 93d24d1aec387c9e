"""
GdmaLab 配置验证器

逐键检查类型、范围与取值，再做跨字段检查。严格模式下未知键也是错误。
"""

import copy
from dataclasses import dataclass
from typing import Any, Callable, Dict, List, Optional, Type, Union

from ..fields.base import is_prime
from ..modem.constellations import available_constellations


@dataclass
class ValidationError:
    """验证错误"""

    key: str
    message: str
    value: Any
    severity: str = "error"  # "error", "warning"

    def __str__(self) -> str:
        return f"[{self.severity.upper()}] {self.key}: {self.message} (value: {self.value})"


@dataclass
class ValidationRule:
    """验证规则"""

    key: str
    description: str = ""
    required: bool = False
    value_type: Optional[Union[Type, tuple]] = None
    min_value: Optional[Union[int, float]] = None
    max_value: Optional[Union[int, float]] = None
    allowed_values: Optional[List[Any]] = None
    custom_validator: Optional[Callable[[Any], Optional[str]]] = None
    default: Any = None


def _prime(value) -> Optional[str]:
    return None if is_prime(value) else f"{value} 不是素数"


def _number_list(value) -> Optional[str]:
    if not isinstance(value, list) or not value:
        return "需要非空数值列表"
    if not all(isinstance(x, (int, float)) and not isinstance(x, bool) for x in value):
        return "列表元素必须是数值"
    return None


def _modes(value) -> Optional[str]:
    if not isinstance(value, list) or not value:
        return "需要非空列表"
    bad = [m for m in value if str(m).upper() not in ("FS", "CC")]
    return f"未知模式 {bad}" if bad else None


def _modulations(value) -> Optional[str]:
    if not isinstance(value, list) or not value:
        return "需要非空列表"
    known = available_constellations()
    bad = [m for m in value if str(m).lower() not in known]
    return f"未知星座 {bad}，可选 {known}" if bad else None


def _poly(value) -> Optional[str]:
    if not isinstance(value, list) or not all(isinstance(c, int) for c in value):
        return "多项式需写成整数系数列表（最高次在前）"
    return None


DEFAULT_RULES: Dict[str, ValidationRule] = {
    "transform": ValidationRule(
        key="transform",
        description="复用变换",
        required=True,
        value_type=str,
        allowed_values=["ffft", "ffht", "identity"],
        default="ffft",
    ),
    "p": ValidationRule(
        key="p",
        description="特征 p",
        required=True,
        value_type=int,
        min_value=2,
        custom_validator=_prime,
        default=2,
    ),
    "m": ValidationRule(
        key="m",
        description="扩张次数 m",
        required=True,
        value_type=int,
        min_value=1,
        max_value=16,
        default=4,
    ),
    "poly": ValidationRule(
        key="poly",
        description="本原多项式",
        custom_validator=_poly,
    ),
    "q": ValidationRule(
        key="q",
        description="高斯整数域 GI(q)",
        value_type=int,
        min_value=2,
        custom_validator=_prime,
        default=3,
    ),
    "n_users": ValidationRule(
        key="n_users",
        description="用户数",
        required=True,
        value_type=int,
        min_value=1,
        default=15,
    ),
    "code": ValidationRule(key="code", description="码表", value_type=str, default="auto"),
    "symbol_duration": ValidationRule(
        key="symbol_duration",
        description="输入符号周期（秒）",
        value_type=(int, float),
        min_value=1e-12,
        default=1.0,
    ),
    "energy_convention": ValidationRule(
        key="energy_convention",
        description="Eb/N0 口径",
        value_type=str,
        allowed_values=["information_bit", "channel_symbol"],
        default="information_bit",
    ),
    "modes": ValidationRule(
        key="modes", description="频谱模式", required=True, custom_validator=_modes
    ),
    "modulations": ValidationRule(
        key="modulations", description="星座", required=True, custom_validator=_modulations
    ),
    "ebn0_points_db": ValidationRule(
        key="ebn0_points_db",
        description="Eb/N0 点",
        required=True,
        custom_validator=_number_list,
    ),
    "min_bits": ValidationRule(
        key="min_bits",
        description="每点最少比特数",
        required=True,
        value_type=int,
        min_value=1000,
        default=1_000_000,
    ),
    "min_errors": ValidationRule(
        key="min_errors",
        description="每点最少错误数",
        required=True,
        value_type=int,
        min_value=0,
        default=200,
    ),
    "max_bits": ValidationRule(
        key="max_bits",
        description="每点比特上限",
        required=True,
        value_type=int,
        min_value=1000,
        default=10_000_000,
    ),
    "strict_budget": ValidationRule(
        key="strict_budget", description="预算耗尽时报错", value_type=bool, default=False
    ),
    "frames_per_block": ValidationRule(
        key="frames_per_block",
        description="每块帧数",
        value_type=int,
        min_value=1,
        max_value=1 << 16,
        default=256,
    ),
    "master_seed": ValidationRule(
        key="master_seed", description="主种子", value_type=int, min_value=0, default=0
    ),
    "workers": ValidationRule(
        key="workers", description="进程数", value_type=int, min_value=1, max_value=256, default=1
    ),
}


class ConfigValidator:
    """
    配置验证器

    Example:
        >>> errors = ConfigValidator(strict=True).validate(config)
        >>> for error in errors:
        ...     print(error)
    """

    def __init__(
        self,
        rules: Optional[Dict[str, ValidationRule]] = None,
        strict: bool = False,
    ):
        """
        Args:
            rules: 自定义验证规则，None 时使用默认规则
            strict: 严格模式（未知键报错）
        """
        self.rules = rules or DEFAULT_RULES.copy()
        self.strict = strict

    def validate(self, config: Dict[str, Any]) -> List[ValidationError]:
        """
        Returns:
            验证错误列表，为空则通过
        """
        errors: List[ValidationError] = []

        if self.strict:
            for key in config:
                if key not in self.rules:
                    errors.append(ValidationError(key, "未知配置项", config[key]))

        for key, rule in self.rules.items():
            errors.extend(self._validate_rule(rule, config.get(key)))

        if not any(e.severity == "error" for e in errors):
            errors.extend(self._validate_cross_field(config))
        return errors

    def _validate_rule(self, rule: ValidationRule, value: Any) -> List[ValidationError]:
        if value is None:
            if rule.required:
                return [ValidationError(rule.key, f"必填项 '{rule.description}' 缺失", value)]
            return []

        if rule.value_type is not None:
            types = rule.value_type if isinstance(rule.value_type, tuple) else (rule.value_type,)
            # bool 是 int 的子类，只有明确要求 bool 时才接受
            wrong_bool = isinstance(value, bool) and bool not in types
            if wrong_bool or not isinstance(value, types):
                expected = " 或 ".join(t.__name__ for t in types)
                return [
                    ValidationError(
                        rule.key,
                        f"类型错误，期望 {expected}，实际为 {type(value).__name__}",
                        value,
                    )
                ]

        errors: List[ValidationError] = []
        if rule.min_value is not None and isinstance(value, (int, float)):
            if value < rule.min_value:
                errors.append(
                    ValidationError(rule.key, f"值 {value} 小于最小值 {rule.min_value}", value)
                )
        if rule.max_value is not None and isinstance(value, (int, float)):
            if value > rule.max_value:
                errors.append(
                    ValidationError(rule.key, f"值 {value} 大于最大值 {rule.max_value}", value)
                )
        if rule.allowed_values is not None and value not in rule.allowed_values:
            allowed = ", ".join(str(v) for v in rule.allowed_values)
            errors.append(ValidationError(rule.key, f"值 {value} 不在 [{allowed}] 中", value))
        if rule.custom_validator is not None:
            message = rule.custom_validator(value)
            if message:
                errors.append(ValidationError(rule.key, message, value))
        return errors

    def _validate_cross_field(self, config: Dict[str, Any]) -> List[ValidationError]:
        errors: List[ValidationError] = []

        points = config.get("ebn0_points_db") or []
        if any(b <= a for a, b in zip(points, points[1:])):
            errors.append(ValidationError("ebn0_points_db", "必须严格递增", points))

        if config.get("transform") == "ffht" and config.get("q", 3) % 2 == 0:
            errors.append(ValidationError("q", "FFHT 需要奇特征", config.get("q")))

        min_bits, max_bits = config.get("min_bits"), config.get("max_bits")
        if min_bits is not None and max_bits is not None and min_bits > max_bits:
            errors.append(
                ValidationError(
                    "max_bits",
                    f"max_bits ({max_bits}) 必须不小于 min_bits ({min_bits})",
                    {"min_bits": min_bits, "max_bits": max_bits},
                )
            )

        if config.get("workers", 1) > 1 and config.get("frames_per_block", 256) < 16:
            errors.append(
                ValidationError(
                    "frames_per_block",
                    "多进程时块过小，进程间开销占主导",
                    config.get("frames_per_block"),
                    severity="warning",
                )
            )
        return errors

    def add_rule(self, rule: ValidationRule):
        self.rules[rule.key] = rule

    def remove_rule(self, key: str):
        self.rules.pop(key, None)

    def get_defaults(self) -> Dict[str, Any]:
        return {key: rule.default for key, rule in self.rules.items() if rule.default is not None}

    def fix_config(self, config: Dict[str, Any]) -> Dict[str, Any]:
        """
        缺失项补默认值，越界数值夹到边界

        Returns:
            修复后的配置副本
        """
        fixed = copy.deepcopy(config)
        for key, rule in self.rules.items():
            value = fixed.get(key)
            if value is None and rule.default is not None:
                fixed[key] = rule.default
                continue
            if isinstance(value, (int, float)) and not isinstance(value, bool):
                if rule.min_value is not None and value < rule.min_value:
                    fixed[key] = rule.min_value
                elif rule.max_value is not None and value > rule.max_value:
                    fixed[key] = rule.max_value
        return fixed


def validate_config(config: Dict[str, Any], strict: bool = False) -> List[ValidationError]:
    """便捷函数：验证配置"""
    return ConfigValidator(strict=strict).validate(config)


def fix_config(config: Dict[str, Any]) -> Dict[str, Any]:
    """便捷函数：修复配置"""
    return ConfigValidator().fix_config(config)
