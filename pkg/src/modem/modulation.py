"""
GdmaLab 调制与硬判决解调
"""

from typing import Sequence, Tuple, Union

import numpy as np

from .constellations import Constellation

# 解调时每批处理的样本数
DEMOD_CHUNK = 1 << 16

Bits = Union[str, Sequence[int], np.ndarray]


def as_bit_array(bits: Bits) -> np.ndarray:
    """'0101' 或整数序列 -> uint8 数组"""
    if isinstance(bits, str):
        return np.array([int(b) for b in bits if not b.isspace()], dtype=np.uint8)
    return np.asarray(bits, dtype=np.uint8).reshape(-1)


def bits_to_str(bits: np.ndarray) -> str:
    return "".join(str(int(b)) for b in np.asarray(bits).reshape(-1))


def padding_for(n_bits: int, constellation: Constellation) -> int:
    """补齐到 log₂M 整数倍所需的零比特数"""
    return (-n_bits) % constellation.bits_per_symbol


def map_bits(constellation: Constellation, bit_groups: np.ndarray) -> np.ndarray:
    """(S, k) 比特组 -> S 个星座点"""
    k = constellation.bits_per_symbol
    weights = 1 << np.arange(k - 1, -1, -1)
    keys = np.asarray(bit_groups, dtype=np.int64).reshape(-1, k) @ weights
    return constellation.points[constellation.point_of_label[keys]]


def demap(constellation: Constellation, samples: np.ndarray) -> np.ndarray:
    """
    最近点判决，等距时取序号最小的点

    Returns:
        (S, k) 判决比特
    """
    samples = np.asarray(samples, dtype=np.complex128).reshape(-1)
    decided = np.empty(samples.size, dtype=np.int64)
    points = constellation.points
    for start in range(0, samples.size, DEMOD_CHUNK):
        chunk = samples[start : start + DEMOD_CHUNK]
        distance = np.abs(chunk[:, None] - points[None, :]) ** 2
        decided[start : start + chunk.size] = np.argmin(distance, axis=1)
    return constellation.label_bits[decided]


def modulate_frame(bits: Bits, constellation: Constellation) -> Tuple[np.ndarray, int]:
    """
    比特 -> 星座点

    Returns:
        (samples, pad)：pad 为补在末尾的零比特数
    """
    array = as_bit_array(bits)
    pad = padding_for(array.size, constellation)
    if pad:
        array = np.concatenate([array, np.zeros(pad, dtype=np.uint8)])
    if array.size == 0:
        return np.zeros(0, dtype=np.complex128), 0
    return map_bits(constellation, array), pad


def modulate(bits: Bits, constellation: Constellation) -> np.ndarray:
    """
    比特 -> 星座点，不足 log₂M 的尾部补零

    Example:
        >>> modulate("01", get_constellation("bpsk"))
        array([ 1.+0.j, -1.+0.j])
    """
    return modulate_frame(bits, constellation)[0]


def demodulate(samples: np.ndarray, constellation: Constellation) -> np.ndarray:
    """硬判决解调，返回拼接后的比特"""
    samples = np.asarray(samples)
    if samples.size == 0:
        return np.zeros(0, dtype=np.uint8)
    return demap(constellation, samples).reshape(-1)
