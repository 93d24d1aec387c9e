"""
GdmaLab 二项比例区间估计
"""

import math
from typing import Tuple

from scipy.stats import norm

from ..exceptions import InvalidProbabilityError


def z_score(confidence: float) -> float:
    """双侧置信水平对应的标准正态分位数"""
    if not 0.0 < confidence < 1.0:
        raise InvalidProbabilityError(confidence)
    return float(norm.ppf(0.5 + confidence / 2.0))


def confidence_interval(errors: int, trials: int, confidence: float = 0.95) -> Tuple[float, float]:
    """
    Wilson 得分区间

    Args:
        errors: 错误数
        trials: 试验数（>= 1）
        confidence: 置信水平

    Returns:
        (low, high)；errors = 0 时 low = 0，errors = trials 时 high = 1

    Example:
        >>> confidence_interval(0, 10**6)[0]
        0.0
    """
    if trials < 1:
        raise InvalidProbabilityError(float("nan"))
    z = z_score(confidence)
    p_hat = errors / trials
    z2 = z * z
    denominator = 1.0 + z2 / trials
    center = (p_hat + z2 / (2.0 * trials)) / denominator
    margin = (z / denominator) * math.sqrt(
        p_hat * (1.0 - p_hat) / trials + z2 / (4.0 * trials * trials)
    )
    low = 0.0 if errors == 0 else max(0.0, center - margin)
    high = 1.0 if errors == trials else min(1.0, center + margin)
    return low, high


def binomial_sigma(probability: float, trials: int) -> float:
    """二项比例估计的标准差 √(p(1-p)/n)"""
    if trials < 1:
        return 0.0
    return math.sqrt(max(probability * (1.0 - probability), 0.0) / trials)
