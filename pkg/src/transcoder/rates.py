"""
GdmaLab 速率指标

R：每个伽罗瓦符号携带的平均信息比特
h：每个伽罗瓦符号平均占用的调制符号数 R / log₂M
"""

import math
from dataclasses import dataclass
from decimal import ROUND_HALF_DOWN, Decimal
from enum import Enum
from fractions import Fraction
from typing import Union

from ..exceptions import (
    IncompleteCodeError,
    InvalidConstellationSizeError,
    NonInstantaneousCodeError,
)
from .codes import OpportunisticCode


class Weighting(Enum):
    """码字长度类的加权方式"""

    UNIFORM_BITS = "uniform-bits"  # 输入为独立等概比特
    UNIFORM_SYMBOLS = "uniform-symbols"  # 各符号等概


@dataclass(frozen=True)
class RateReport:
    p_dir: Fraction
    p_opp: Fraction
    r_bits_per_symbol: Fraction
    weighting: Weighting
    s: int

    @property
    def r(self) -> float:
        return float(self.r_bits_per_symbol)


def average_rate(
    code: OpportunisticCode, weighting: Union[Weighting, str] = Weighting.UNIFORM_BITS
) -> RateReport:
    """
    平均速率

    Args:
        code: 完备前缀码
        weighting: uniform-bits（默认）或 uniform-symbols

    Raises:
        NonInstantaneousCodeError: 不是前缀码
        IncompleteCodeError: Kraft 和不为 1
    """
    weighting = Weighting(weighting) if isinstance(weighting, str) else weighting
    violation = code.prefix_violation
    if violation is not None:
        raise NonInstantaneousCodeError(code.name, violation[1], violation[0])
    if not code.complete:
        raise IncompleteCodeError(code.name, code.kraft_sum)

    s = code.s
    if weighting is Weighting.UNIFORM_BITS:
        p_dir = sum(
            (Fraction(1, 2**n) for n in code.lengths if n <= s), Fraction(0)
        )
        r = sum((Fraction(int(n), 2**n) for n in code.lengths), Fraction(0))
    else:
        p_dir = Fraction(1 << s, code.size)
        r = p_dir * s + (1 - p_dir) * (s + 1)

    return RateReport(
        p_dir=p_dir,
        p_opp=1 - p_dir,
        r_bits_per_symbol=r,
        weighting=weighting,
        s=s,
    )


def h_param(r: float, m: int) -> float:
    """
    h = R / log₂M

    Raises:
        InvalidConstellationSizeError: M < 2
    """
    if m < 2:
        raise InvalidConstellationSizeError(m)
    return float(r) / math.log2(m)


def frame_symbols(h: float, n: int) -> float:
    """每帧调制符号数 hN"""
    return h * n


def format_h(h: float, places: int = 3) -> str:
    """
    h 的表格显示，恰在中点时向下取

    Example:
        >>> format_h(0.78125)
        '0.781'
    """
    quantum = Decimal(1).scaleb(-places)
    return str(Decimal(h).quantize(quantum, rounding=ROUND_HALF_DOWN))
