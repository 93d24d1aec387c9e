"""
GdmaLab 香农界与链路预算

γ_cc ≤ log_p(1 + SNR)
R = N·log₂(p) / (2T)
W = N / (2T·γ_cc)
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple, Union

from ..exceptions import NegativeSnrError, NonPositiveDurationError
from ..modem.channel import linear_to_db

Gamma = Union[Fraction, int, float]


@dataclass(frozen=True)
class BoundReport:
    """
    紧致因子的香农界检查结果

    Attributes:
        gamma_cc: 紧致因子
        snr: 线性信噪比
        gamma_max: log_p(1 + SNR)
        satisfied: gamma_cc <= gamma_max
        min_snr: 使界成立的最小线性 SNR，p^γ - 1
        min_snr_db: 同上，dB
        rate_bits_per_s: 全局速率（给出用户数和符号周期时）
        bandwidth_hz: 占用带宽（同上）
    """

    gamma_cc: Fraction
    snr: float
    gamma_max: float
    satisfied: bool
    min_snr: float
    min_snr_db: float
    rate_bits_per_s: Optional[float] = None
    bandwidth_hz: Optional[float] = None


def shannon_bound(snr: float, p: int) -> float:
    """
    log_p(1 + snr)

    Raises:
        NegativeSnrError: snr < 0
    """
    if snr < 0:
        raise NegativeSnrError(snr)
    return math.log1p(snr) / math.log(p)


def minimum_snr(gamma: Gamma, p: int) -> float:
    """使 γ ≤ log_p(1 + SNR) 成立的最小线性 SNR"""
    return float(p) ** float(gamma) - 1.0


def link_budget(n_users: int, p: int, symbol_duration: float, gamma: Gamma) -> Tuple[float, float]:
    """
    全局速率与带宽

    Args:
        n_users: 用户数 N
        p: 特征
        symbol_duration: 输入符号周期 T（秒）
        gamma: 紧致因子

    Returns:
        (R bits/s, W Hz)

    Raises:
        NonPositiveDurationError: T <= 0
    """
    if symbol_duration <= 0:
        raise NonPositiveDurationError(symbol_duration)
    rate = n_users * math.log2(p) / (2.0 * symbol_duration)
    bandwidth = n_users / (2.0 * symbol_duration * float(gamma))
    return rate, bandwidth


def rate_within_capacity(rate: float, bandwidth: float, snr: float) -> bool:
    """R ≤ W·log₂(1 + SNR)"""
    if snr < 0:
        raise NegativeSnrError(snr)
    # 1e-12 容差吸收 log 的舍入
    return rate <= bandwidth * math.log2(1.0 + snr) + 1e-12


def check_bound(
    gamma: Gamma,
    snr: float,
    p: int,
    n_users: Optional[int] = None,
    symbol_duration: Optional[float] = None,
) -> BoundReport:
    """
    检查紧致因子是否满足香农界

    Raises:
        NegativeSnrError: snr < 0
        NonPositiveDurationError: 给出的 T <= 0
    """
    gamma_max = shannon_bound(snr, p)
    gamma_frac = Fraction(gamma).limit_denominator(10**6)
    min_snr = minimum_snr(gamma_frac, p)

    rate = bandwidth = None
    if n_users is not None and symbol_duration is not None:
        rate, bandwidth = link_budget(n_users, p, symbol_duration, gamma_frac)

    return BoundReport(
        gamma_cc=gamma_frac,
        snr=float(snr),
        gamma_max=gamma_max,
        satisfied=float(gamma_frac) <= gamma_max + 1e-12,
        min_snr=min_snr,
        min_snr_db=linear_to_db(min_snr) if min_snr > 0 else float("-inf"),
        rate_bits_per_s=rate,
        bandwidth_hz=bandwidth,
    )
