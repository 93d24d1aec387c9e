"""
GdmaLab AWGN 信道

复基带，每个实维度噪声方差 N0/2；符号能量 Es = 1。
"""

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np


def db_to_linear(db: float) -> float:
    if math.isinf(db):
        return math.inf if db > 0 else 0.0
    return 10.0 ** (db / 10.0)


def linear_to_db(value: float) -> float:
    if value <= 0:
        return -math.inf
    return 10.0 * math.log10(value)


def noise_density(esn0: float, es: float = 1.0) -> float:
    """由 Es/N0（线性）求 N0；esn0 为无穷时无噪声"""
    if math.isinf(esn0):
        return 0.0
    return es / esn0


@dataclass(frozen=True)
class ChannelConfig:
    """
    信道参数

    Attributes:
        ebn0_db: 每信息比特信噪比（dB）
        seed: 随机种子
        es: 星座平均符号能量
    """

    ebn0_db: float
    seed: Optional[int] = None
    es: float = 1.0

    @property
    def ebn0(self) -> float:
        return db_to_linear(self.ebn0_db)

    def n0(self, esn0_per_ebn0: float = 1.0) -> float:
        """
        噪声谱密度

        Args:
            esn0_per_ebn0: Es/N0 与 Eb/N0 之比，由链路的能量约定给出
        """
        return noise_density(self.ebn0 * esn0_per_ebn0, self.es)

    def rng(self) -> np.random.Generator:
        return np.random.default_rng(self.seed)


def awgn(samples: np.ndarray, n0: float, rng: np.random.Generator) -> np.ndarray:
    """
    加性高斯白噪声

    Args:
        samples: 复样本
        n0: 噪声谱密度，0 时原样返回
        rng: 随机数发生器
    """
    samples = np.asarray(samples, dtype=np.complex128)
    if n0 == 0:
        return samples.copy()
    sigma = math.sqrt(n0 / 2.0)
    noise = rng.standard_normal(samples.shape) + 1j * rng.standard_normal(samples.shape)
    return samples + sigma * noise
