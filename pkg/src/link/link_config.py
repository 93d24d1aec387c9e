"""
GdmaLab 链路配置
"""

from dataclasses import asdict, dataclass, replace
from enum import Enum
from typing import Any, Dict, Optional, Tuple

from ..exceptions import ConfigInvalidError
from ..fields.base import is_prime


class TransformKind(Enum):
    """复用变换"""

    FFFT = "ffft"
    FFHT = "ffht"
    IDENTITY = "identity"  # 不扩频，仅调制


class SpectrumMode(Enum):
    """FS 传输全部 N 个分量，CC 只传输 ν 个陪集首元"""

    FS = "FS"
    CC = "CC"


class EnergyConvention(Enum):
    """Eb/N0 的能量口径"""

    INFORMATION_BIT = "information_bit"  # 每用户信息比特
    CHANNEL_SYMBOL = "channel_symbol"  # 每信道比特


def _enum(kind, value):
    if isinstance(value, kind):
        return value
    if isinstance(value, str):
        for member in kind:
            if value.lower() in (member.value.lower(), member.name.lower()):
                return member
    raise ConfigInvalidError(f"unknown {kind.__name__}: {value}", value=value)


@dataclass(frozen=True)
class LinkConfig:
    """
    N-GDMA 链路配置

    Attributes:
        transform: FFFT / FFHT / IDENTITY
        p, m, poly: FFFT 的扩域 GF(p^m)，poly 为 None 时用默认本原多项式
        q: FFHT 的 GI(q)
        n_users: 用户数 N
        mode: FS / CC
        code: 码表名，"auto" 按域自动选择
        modulation: 星座名
        symbol_duration: 输入符号周期 T（秒）
        energy_convention: Eb/N0 口径
    """

    transform: TransformKind = TransformKind.FFFT
    p: int = 2
    m: int = 4
    poly: Optional[Tuple[int, ...]] = None
    q: int = 3
    n_users: int = 15
    mode: SpectrumMode = SpectrumMode.FS
    code: str = "auto"
    modulation: str = "bpsk"
    symbol_duration: float = 1.0
    energy_convention: EnergyConvention = EnergyConvention.INFORMATION_BIT

    def __post_init__(self):
        object.__setattr__(self, "transform", _enum(TransformKind, self.transform))
        object.__setattr__(self, "mode", _enum(SpectrumMode, self.mode))
        object.__setattr__(
            self, "energy_convention", _enum(EnergyConvention, self.energy_convention)
        )
        if self.poly is not None:
            object.__setattr__(self, "poly", tuple(int(c) for c in self.poly))

    @property
    def ground_order(self) -> int:
        """用户符号字母表大小 p"""
        return self.q if self.transform is TransformKind.FFHT else self.p

    @property
    def group_order(self) -> int:
        """频谱域乘法群阶"""
        if self.transform is TransformKind.FFHT:
            return self.q * self.q - 1
        return self.p**self.m - 1

    def validate(self) -> None:
        """
        Raises:
            ConfigInvalidError: 参数组合不成立
        """
        if self.n_users < 1:
            raise ConfigInvalidError("n_users must be >= 1", n_users=self.n_users)
        if self.symbol_duration <= 0:
            raise ConfigInvalidError(
                "symbol_duration must be > 0", symbol_duration=self.symbol_duration
            )

        if self.transform is TransformKind.FFHT:
            if self.q % 2 == 0:
                raise ConfigInvalidError("FFHT requires odd characteristic", q=self.q)
            if not is_prime(self.q):
                raise ConfigInvalidError("q must be prime", q=self.q)
        else:
            if not is_prime(self.p):
                raise ConfigInvalidError("p must be prime", p=self.p)
            if self.m < 1:
                raise ConfigInvalidError("m must be >= 1", m=self.m)

        if self.transform is TransformKind.IDENTITY:
            if (self.p, self.m) != (2, 1):
                raise ConfigInvalidError("identity link runs over GF(2)", p=self.p, m=self.m)
            if self.mode is SpectrumMode.CC:
                raise ConfigInvalidError("identity link has no cosets to compress")
            return

        if self.group_order % self.n_users != 0:
            raise ConfigInvalidError(
                "n_users must divide the multiplicative group order",
                n_users=self.n_users,
                group_order=self.group_order,
            )

    def with_mode(self, mode) -> "LinkConfig":
        return replace(self, mode=_enum(SpectrumMode, mode))

    def with_modulation(self, modulation: str) -> "LinkConfig":
        return replace(self, modulation=modulation)

    def to_dict(self) -> Dict[str, Any]:
        data = asdict(self)
        data["transform"] = self.transform.value
        data["mode"] = self.mode.value
        data["energy_convention"] = self.energy_convention.value
        data["poly"] = list(self.poly) if self.poly is not None else None
        return data

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "LinkConfig":
        known = {name for name in cls.__dataclass_fields__}
        unknown = sorted(set(data) - known)
        if unknown:
            raise ConfigInvalidError(f"unknown link keys: {', '.join(unknown)}")
        return cls(**data)

    def describe(self) -> str:
        if self.transform is TransformKind.FFHT:
            field = f"GI({self.q})"
        elif self.m == 1:
            field = f"GF({self.p})"
        else:
            field = f"GF({self.p}^{self.m})"
        return (
            f"{self.n_users}-GDMA {self.transform.value.upper()} over {field}, "
            f"{self.mode.value}, {self.modulation}"
        )
