"""
GdmaLab 帧错误联合界

P_E,N ≤ min(1, h·N·P_E,1)
"""

import math

from ..exceptions import InvalidProbabilityError


def frame_error_bound(n: int, h: float, pe1: float) -> float:
    """
    Args:
        n: 每帧伽罗瓦符号数
        h: 每个伽罗瓦符号的调制符号数
        pe1: 单用户误符号率

    Raises:
        InvalidProbabilityError: pe1 不在 [0, 1]

    Example:
        >>> round(frame_error_bound(8, 1.042, 1e-3), 5)
        0.00834
    """
    if math.isnan(pe1) or not 0.0 <= pe1 <= 1.0:
        raise InvalidProbabilityError(pe1)
    return min(1.0, h * n * pe1)
