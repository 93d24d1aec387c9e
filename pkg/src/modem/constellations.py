"""
GdmaLab 星座图

BPSK、Gray 编码 M-PSK、矩形 Gray 16/64-QAM 与十字形 32-QAM，平均能量归一化为 1。
"""

from dataclasses import dataclass
from functools import cached_property
from typing import Dict, List, Tuple

import numpy as np

from ..exceptions import InvalidConstellationSizeError, UnknownConstellationError
from ..utils.logging import get_logger

logger = get_logger(__name__)

# 最近邻判定的距离容差
NEIGHBOUR_TOLERANCE = 1e-9


def gray(n: int) -> int:
    return n ^ (n >> 1)


@dataclass(frozen=True, eq=False)
class Constellation:
    """
    星座

    Attributes:
        name: 注册名，如 "qpsk"
        family: bpsk / psk / qam / cross，决定理论误符号率公式
        points: 复坐标，按点序号排列
        labels: 各点的比特标签
    """

    name: str
    family: str
    points: np.ndarray
    labels: Tuple[str, ...]

    def __post_init__(self):
        points = np.asarray(self.points, dtype=np.complex128)
        energy = float(np.mean(np.abs(points) ** 2))
        points = points / np.sqrt(energy)
        points.setflags(write=False)
        object.__setattr__(self, "points", points)

    @property
    def size(self) -> int:
        return int(self.points.size)

    @property
    def bits_per_symbol(self) -> int:
        return self.size.bit_length() - 1

    @property
    def average_energy(self) -> float:
        return float(np.mean(np.abs(self.points) ** 2))

    @cached_property
    def label_bits(self) -> np.ndarray:
        """(M, k) 各点标签比特"""
        bits = np.array([[int(b) for b in label] for label in self.labels], dtype=np.uint8)
        bits.setflags(write=False)
        return bits

    @cached_property
    def point_of_label(self) -> np.ndarray:
        """标签整数值 -> 点序号"""
        index = np.empty(self.size, dtype=np.int64)
        for i, label in enumerate(self.labels):
            index[int(label, 2)] = i
        index.setflags(write=False)
        return index

    @cached_property
    def min_distance(self) -> float:
        diffs = np.abs(self.points[:, None] - self.points[None, :])
        np.fill_diagonal(diffs, np.inf)
        return float(diffs.min())

    @cached_property
    def neighbours(self) -> List[Tuple[int, int]]:
        """距离为最小距离的点对 (i < j)"""
        d = self.min_distance
        pairs = []
        for i in range(self.size):
            for j in range(i + 1, self.size):
                if abs(abs(self.points[i] - self.points[j]) - d) < NEIGHBOUR_TOLERANCE:
                    pairs.append((i, j))
        return pairs

    @property
    def average_neighbours(self) -> float:
        """平均最近邻个数"""
        return 2.0 * len(self.neighbours) / self.size

    def is_gray(self) -> bool:
        """最近邻点标签只差一位"""
        bits = self.label_bits
        return all(int(np.sum(bits[i] != bits[j])) == 1 for i, j in self.neighbours)

    def __repr__(self) -> str:
        return f"Constellation({self.name}, M={self.size})"


def _check_size(size: int):
    if size < 2 or size & (size - 1):
        raise InvalidConstellationSizeError(size)


def bpsk() -> Constellation:
    """0 -> +1，1 -> -1"""
    return Constellation("bpsk", "bpsk", np.array([1.0, -1.0]), ("0", "1"))


def psk(size: int, offset: float = 0.0, name: str = None) -> Constellation:
    """第 m 个点位于 offset + 2πm/M，标签为 gray(m)"""
    _check_size(size)
    k = size.bit_length() - 1
    m = np.arange(size)
    points = np.exp(1j * (offset + 2.0 * np.pi * m / size))
    labels = tuple(format(gray(int(i)), f"0{k}b") for i in m)
    return Constellation(name or f"{size}psk", "psk", points, labels)


def square_qam(size: int, name: str = None) -> Constellation:
    """
    矩形 Gray QAM，每轴为 Gray 编码的 √M-PAM

    同相分量的标签在前，正交分量在后。
    """
    _check_size(size)
    k = size.bit_length() - 1
    if k % 2:
        raise InvalidConstellationSizeError(size)
    side = 1 << (k // 2)
    half = k // 2
    points, labels = [], []
    for ix in range(side):
        for iy in range(side):
            points.append(complex(2 * ix + 1 - side, 2 * iy + 1 - side))
            labels.append(format(gray(ix), f"0{half}b") + format(gray(iy), f"0{half}b"))
    return Constellation(name or f"{size}qam", "qam", np.array(points), tuple(labels))


def cross_qam32() -> Constellation:
    """{±1, ±3, ±5}² 去掉四个角点，标签按行优先序号取 gray"""
    levels = (5, 3, 1, -1, -3, -5)
    points = [
        complex(x, y)
        for y in levels
        for x in reversed(levels)
        if not (abs(x) == 5 and abs(y) == 5)
    ]
    labels = tuple(format(gray(i), "05b") for i in range(len(points)))
    return Constellation("32qam", "cross", np.array(points), labels)


_BUILDERS = {
    "bpsk": bpsk,
    "qpsk": lambda: psk(4, np.pi / 4, "qpsk"),
    "8psk": lambda: psk(8, 0.0, "8psk"),
    "16qam": lambda: square_qam(16),
    "32qam": cross_qam32,
    "64qam": lambda: square_qam(64),
}

_ALIASES = {
    "2psk": "bpsk",
    "4psk": "qpsk",
    "8-psk": "8psk",
    "16-qam": "16qam",
    "32-qam": "32qam",
    "64-qam": "64qam",
}

_CACHE: Dict[str, Constellation] = {}


def available_constellations() -> List[str]:
    return list(_BUILDERS)


def get_constellation(name: str) -> Constellation:
    """
    按名称获取星座

    Raises:
        UnknownConstellationError: 未注册的名称
    """
    key = name.strip().lower()
    key = _ALIASES.get(key, key)
    if key not in _BUILDERS:
        raise UnknownConstellationError(name)
    if key not in _CACHE:
        _CACHE[key] = _BUILDERS[key]()
    return _CACHE[key]
