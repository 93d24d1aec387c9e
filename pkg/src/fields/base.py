"""
GdmaLab 有限域公共基类

GF(p^m) 与 GI(q) 的元素都编码为整数 0..order-1，并且基域 GF(p) 的元素
恰好编码为 0..p-1。批量路径（变换、压缩、仿真）只依赖这里的查表算术。
"""

from abc import ABC, abstractmethod
from functools import cached_property
from typing import Iterable, List

import numpy as np

# 查表算术的元素数上限（order^2 个 int32）
MAX_TABLE_ORDER = 1024

_SUPERSCRIPT = str.maketrans("0123456789-", "⁰¹²³⁴⁵⁶⁷⁸⁹⁻")


def superscript(n: int) -> str:
    """整数的上标形式，如 14 -> ¹⁴"""
    return str(n).translate(_SUPERSCRIPT)


def is_prime(n: int) -> bool:
    """试除法素性检验"""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def divisors(n: int) -> List[int]:
    """n 的全部正因子（升序）"""
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


class TableField(ABC):
    """
    整数编码有限域

    子类提供 characteristic、order、_build_add_table、_build_mul_table，
    以及 power_label 的记号。其余查表结构在这里惰性构建。
    """

    characteristic: int
    order: int
    power_symbol: str = "α"

    @abstractmethod
    def _build_add_table(self) -> np.ndarray:
        """构建 order x order 加法表"""

    @abstractmethod
    def _build_mul_table(self) -> np.ndarray:
        """构建 order x order 乘法表"""

    @abstractmethod
    def element(self, value):
        """由整数编码构造元素对象"""

    @abstractmethod
    def generator_value(self) -> int:
        """乘法群生成元的整数编码"""

    # ===== 查表结构 =====

    def _check_table_size(self):
        if self.order > MAX_TABLE_ORDER:
            raise MemoryError(
                f"field of order {self.order} exceeds table limit {MAX_TABLE_ORDER}"
            )

    @cached_property
    def add_table(self) -> np.ndarray:
        self._check_table_size()
        table = self._build_add_table().astype(np.int32)
        table.setflags(write=False)
        return table

    @cached_property
    def mul_table(self) -> np.ndarray:
        self._check_table_size()
        table = self._build_mul_table().astype(np.int32)
        table.setflags(write=False)
        return table

    @cached_property
    def neg_table(self) -> np.ndarray:
        table = np.argmax(self.add_table == 0, axis=1).astype(np.int32)
        table.setflags(write=False)
        return table

    @cached_property
    def inv_table(self) -> np.ndarray:
        """inv_table[0] 占位为 0，调用方自行处理零元"""
        table = np.argmax(self.mul_table == 1, axis=1).astype(np.int32)
        table[0] = 0
        table.setflags(write=False)
        return table

    @cached_property
    def log_table(self) -> np.ndarray:
        """log_table[0] = -1"""
        table = np.full(self.order, -1, dtype=np.int64)
        table[self.antilog_table] = np.arange(self.order - 1)
        table.setflags(write=False)
        return table

    @cached_property
    def antilog_table(self) -> np.ndarray:
        g = self.generator_value()
        values = np.empty(self.order - 1, dtype=np.int64)
        current = 1
        for k in range(self.order - 1):
            values[k] = current
            current = self.mul_value(current, g)
        values.setflags(write=False)
        return values

    # ===== 标量整数编码算术 =====

    def add_value(self, a: int, b: int) -> int:
        return int(self.add_table[a, b])

    def mul_value(self, a: int, b: int) -> int:
        return int(self.mul_table[a, b])

    def power_value(self, a: int, exponent: int) -> int:
        """a^exponent，负指数先求逆"""
        if a == 0:
            if exponent < 0:
                from ..exceptions import DivisionByZeroError

                raise DivisionByZeroError("pow")
            return 1 if exponent == 0 else 0
        k = int(self.log_table[a])
        return int(self.antilog_table[(k * exponent) % (self.order - 1)])

    def is_ground_value(self, value: int) -> bool:
        """是否落在基域 GF(p) 中"""
        return 0 <= value < self.characteristic

    # ===== 向量算术 =====

    def power_table(self, exponent: int) -> np.ndarray:
        """x -> x^exponent 的映射表（exponent >= 0）"""
        values = np.arange(self.order)
        logs = self.log_table
        out = np.where(
            values == 0,
            1 if exponent == 0 else 0,
            self.antilog_table[(np.maximum(logs, 0) * exponent) % (self.order - 1)],
        )
        return out.astype(np.int32)

    def vec_add(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        return self.add_table[a, b]

    def vec_mul(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        return self.mul_table[a, b]

    def vec_sum(self, values: np.ndarray, axis: int = -1) -> np.ndarray:
        """沿 axis 做域加法归约"""
        values = np.moveaxis(np.asarray(values), axis, 0)
        acc = np.zeros(values.shape[1:], dtype=np.int32)
        for row in values:
            acc = self.add_table[acc, row]
        return acc

    # ===== 显示 =====

    def power_label(self, value: int) -> str:
        """幂记号: 0, 1, α, α³ ..."""
        if value == 0:
            return "0"
        k = int(self.log_table[value])
        if k == 0:
            return "1"
        if k == 1:
            return self.power_symbol
        return f"{self.power_symbol}{superscript(k)}"

    def values(self) -> Iterable[int]:
        return range(self.order)
