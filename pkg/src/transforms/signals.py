"""
GdmaLab 信号与频谱

值统一以所在域的整数编码保存；基域 GF(p) 的元素编码为 0..p-1，
因此嵌入扩域或 GI(q) 时数值不变。
"""

from dataclasses import dataclass
from typing import Any, List, Sequence

import numpy as np

from ..fields.base import TableField


def _as_readonly(values: Sequence[int]) -> np.ndarray:
    array = np.array(values, dtype=np.int64).reshape(-1)
    array.setflags(write=False)
    return array


@dataclass(frozen=True, eq=False)
class Signal:
    """
    长度 N 的用户符号向量

    Attributes:
        values: 整数编码
        field: values 所在的域（基域值嵌入其中）
        symbol_duration: 输入符号周期 T（秒），链路预算使用
    """

    values: np.ndarray
    field: TableField
    symbol_duration: float = 1.0

    def __post_init__(self):
        object.__setattr__(self, "values", _as_readonly(self.values))

    @property
    def length(self) -> int:
        return int(self.values.size)

    def is_ground(self) -> bool:
        """全部分量是否都在 GF(p) 中"""
        return bool(np.all(self.values < self.field.characteristic))

    def out_of_subfield(self) -> np.ndarray:
        return self.values >= self.field.characteristic

    def decided(self) -> np.ndarray:
        """逐分量判决：不在 GF(p) 中的分量判为 0"""
        return np.where(self.out_of_subfield(), 0, self.values)

    def elements(self) -> List[Any]:
        return [self.field.element(int(v)) for v in self.values]

    def __len__(self) -> int:
        return self.length

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Signal)
            and other.field == self.field
            and np.array_equal(other.values, self.values)
        )

    def __repr__(self) -> str:
        return f"Signal({list(self.values)}, {self.field!r})"


@dataclass(frozen=True, eq=False)
class Spectrum:
    """
    变换输出

    Attributes:
        values: 频谱分量的整数编码
        field: 频谱所在的域 GF(p^m) 或 GI(q)
        kernel: 载波元素 α 或 ζ，长度等于其乘法阶
    """

    values: np.ndarray
    field: TableField
    kernel: Any = None

    def __post_init__(self):
        object.__setattr__(self, "values", _as_readonly(self.values))

    @property
    def length(self) -> int:
        return int(self.values.size)

    def elements(self) -> List[Any]:
        return [self.field.element(int(v)) for v in self.values]

    def power_labels(self) -> List[str]:
        return [self.field.power_label(int(v)) for v in self.values]

    def weight(self) -> int:
        """汉明重量"""
        return int(np.count_nonzero(self.values))

    def __len__(self) -> int:
        return self.length

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Spectrum)
            and other.field == self.field
            and np.array_equal(other.values, self.values)
        )

    def __repr__(self) -> str:
        return f"Spectrum({list(self.values)}, {self.field!r})"
