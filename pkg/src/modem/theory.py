"""
GdmaLab 单用户理论误符号率

    BPSK      Q(√(2γ))
    QPSK      1 - (1 - Q(√γ))²
    M-PSK     2Q(√(2γ)·sin(π/M))
    方形 QAM   1 - (1 - 2(1 - 1/√M)·Q(√(3γ/(M-1))))²
    十字 QAM   K̄·Q(d_min·√(γ/2))，K̄ 与 d_min 取自星座几何
γ 为 Es/N0（线性）。
"""

import math

import numpy as np
from scipy.special import erfc

from ..exceptions import NegativeSnrError
from .constellations import Constellation


def q_function(x):
    """高斯尾概率 Q(x) = erfc(x/√2)/2"""
    return 0.5 * erfc(np.asarray(x, dtype=float) / math.sqrt(2.0))


def theoretical_ser(constellation: Constellation, esn0: float) -> float:
    """
    P_E,1

    Raises:
        NegativeSnrError: esn0 < 0
    """
    if esn0 < 0:
        raise NegativeSnrError(esn0)
    if math.isinf(esn0):
        return 0.0

    family, size = constellation.family, constellation.size
    if family == "bpsk":
        ser = q_function(math.sqrt(2.0 * esn0))
    elif family == "psk" and size == 4:
        ser = 1.0 - (1.0 - q_function(math.sqrt(esn0))) ** 2
    elif family == "psk":
        ser = 2.0 * q_function(math.sqrt(2.0 * esn0) * math.sin(math.pi / size))
    elif family == "qam":
        side = 2.0 * (1.0 - 1.0 / math.sqrt(size)) * q_function(
            math.sqrt(3.0 * esn0 / (size - 1))
        )
        ser = 1.0 - (1.0 - side) ** 2
    else:
        ser = constellation.average_neighbours * q_function(
            constellation.min_distance * math.sqrt(esn0 / 2.0)
        )
    return float(min(1.0, ser))
