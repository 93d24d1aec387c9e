"""
GdmaLab 高斯整数域 GI(q)

元素 a + jb，a, b ∈ GF(q)，j² = -1 且 -1 是 GF(q) 的二次非剩余，
此时 GI(q) 是与 GF(q²) 同构的域。整数编码为 re + q·im。
"""

from dataclasses import dataclass
from dataclasses import field as dc_field
from functools import cached_property
from typing import List

import numpy as np

from ..exceptions import (
    DivisionByZeroError,
    ElementOutOfRangeError,
    EvenCharacteristicError,
    FieldMismatchError,
    MinusOneIsResidueError,
    NonPrimeModulusError,
    ZeroElementError,
)
from ..utils.logging import get_logger
from .base import TableField, divisors, is_prime, superscript
from .extension import PrimeField

logger = get_logger(__name__)

# 构造时穷举验证群阶的 q 上限
EXHAUSTIVE_CHECK_LIMIT = 11


class GaussianField(TableField):
    """
    高斯整数域 GI(q)，q 为奇素数

    Example:
        >>> gi3 = GaussianField(3)
        >>> xi = gi3.element(1, 1)
        >>> xi * xi
        GaussianInt(2j)
    """

    power_symbol = "ξ"

    def __init__(self, q: int):
        if q % 2 == 0:
            raise EvenCharacteristicError(q)
        if not is_prime(q):
            # 只实现 r = 1 的素数基域
            raise NonPrimeModulusError(q)

        self.q = q
        self.base = PrimeField(q)
        self.characteristic = q
        self.order = q * q

        minus_one = q - 1
        for x in range(q):
            if (x * x) % q == minus_one:
                raise MinusOneIsResidueError(q, x)

        if q <= EXHAUSTIVE_CHECK_LIMIT:
            units = sum(
                1
                for re in range(q)
                for im in range(q)
                if (re or im) and (re * re + im * im) % q != 0
            )
            assert units == q * q - 1, "every nonzero Gaussian integer must be a unit"

        logger.debug(f"Built GI({q})")

    # ===== 编码 =====

    def element(self, re, im: int = None) -> "GaussianInt":
        """
        构造元素

        Args:
            re: 实部；im 省略时视为整数编码 re + q·im
            im: 虚部
        """
        if im is None:
            value = int(re)
            if not 0 <= value < self.order:
                raise ElementOutOfRangeError(value, self.order)
            return GaussianInt(value % self.q, value // self.q, self)
        re, im = int(re), int(im)
        if not (0 <= re < self.q and 0 <= im < self.q):
            raise ElementOutOfRangeError((re, im), self.q)
        return GaussianInt(re, im, self)

    def from_value(self, value: int) -> "GaussianInt":
        return self.element(value)

    @property
    def zero(self) -> "GaussianInt":
        return GaussianInt(0, 0, self)

    @property
    def one(self) -> "GaussianInt":
        return GaussianInt(1, 0, self)

    @property
    def j(self) -> "GaussianInt":
        return GaussianInt(0, 1, self)

    def elements(self) -> List["GaussianInt"]:
        return [self.element(v) for v in range(self.order)]

    # ===== 查表 =====

    def _split(self):
        values = np.arange(self.order)
        return values % self.q, values // self.q

    def _build_add_table(self) -> np.ndarray:
        re, im = self._split()
        q = self.q
        out_re = (re[:, None] + re[None, :]) % q
        out_im = (im[:, None] + im[None, :]) % q
        return out_re + q * out_im

    def _build_mul_table(self) -> np.ndarray:
        re, im = self._split()
        q = self.q
        out_re = (re[:, None] * re[None, :] - im[:, None] * im[None, :]) % q
        out_im = (re[:, None] * im[None, :] + re[None, :] * im[:, None]) % q
        return out_re + q * out_im

    def generator_value(self) -> int:
        return self.generator.value

    @cached_property
    def generator(self) -> "GaussianInt":
        return gi_find_generator(self)

    def mul_value(self, a: int, b: int) -> int:
        return (self.element(a) * self.element(b)).value

    def add_value(self, a: int, b: int) -> int:
        return (self.element(a) + self.element(b)).value

    def element_of_order(self, n: int) -> "GaussianInt":
        """阶为 n 的元素 ξ^((q²-1)/n)"""
        from ..exceptions import LengthMismatchError

        if n < 1 or (self.order - 1) % n != 0:
            raise LengthMismatchError(self.order - 1, n, "kernel order")
        return self.generator ** ((self.order - 1) // n)

    def __eq__(self, other) -> bool:
        return isinstance(other, GaussianField) and other.q == self.q

    def __hash__(self) -> int:
        return hash(("GI", self.q))

    def __repr__(self) -> str:
        return f"GI({self.q})"


@dataclass(frozen=True)
class GaussianInt:
    """GI(q) 元素 re + j·im"""

    re: int
    im: int
    field: GaussianField = dc_field(repr=False)

    @property
    def value(self) -> int:
        return self.re + self.field.q * self.im

    @property
    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def conjugate(self) -> "GaussianInt":
        return GaussianInt(self.re, (-self.im) % self.field.q, self.field)

    def norm(self) -> int:
        return (self.re * self.re + self.im * self.im) % self.field.q

    def _check(self, other: "GaussianInt"):
        if not isinstance(other, GaussianInt):
            return False
        if other.field != self.field:
            raise FieldMismatchError(self.field, other.field)
        return True

    def __add__(self, other):
        if not self._check(other):
            return NotImplemented
        q = self.field.q
        return GaussianInt((self.re + other.re) % q, (self.im + other.im) % q, self.field)

    def __neg__(self):
        q = self.field.q
        return GaussianInt((-self.re) % q, (-self.im) % q, self.field)

    def __sub__(self, other):
        if not self._check(other):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, np.integer)):
            q = self.field.q
            return GaussianInt((self.re * other) % q, (self.im * other) % q, self.field)
        if not self._check(other):
            return NotImplemented
        q = self.field.q
        re = (self.re * other.re - self.im * other.im) % q
        im = (self.re * other.im + other.re * self.im) % q
        return GaussianInt(re, im, self.field)

    __rmul__ = __mul__

    def inverse(self) -> "GaussianInt":
        return gi_inv(self)

    def __truediv__(self, other):
        if not self._check(other):
            return NotImplemented
        return self * gi_inv(other)

    def __pow__(self, exponent: int):
        exponent = int(exponent)
        base = self
        if exponent < 0:
            base = gi_inv(self)
            exponent = -exponent
        result = self.field.one
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def order(self) -> int:
        return gi_order(self)

    def power_label(self) -> str:
        return self.field.power_label(self.value)

    def __int__(self) -> int:
        return self.value

    def __str__(self) -> str:
        if self.im == 0:
            return str(self.re)
        imag = "j" if self.im == 1 else f"{self.im}j"
        if self.re == 0:
            return imag
        return f"{self.re}+{imag}"

    def __repr__(self) -> str:
        return f"GaussianInt({self})"


def validate_gaussian_field(q: int) -> GaussianField:
    """
    构造并验证 GI(q)

    Raises:
        EvenCharacteristicError: q 为偶数
        MinusOneIsResidueError: -1 是 GF(q) 的平方数
    """
    return GaussianField(q)


def gi_add(x: GaussianInt, y: GaussianInt) -> GaussianInt:
    return x + y


def gi_mul(x: GaussianInt, y: GaussianInt) -> GaussianInt:
    return x * y


def gi_inv(x: GaussianInt) -> GaussianInt:
    """
    共轭除以范数求逆

    Raises:
        DivisionByZeroError: x 为零
    """
    if x.is_zero:
        raise DivisionByZeroError("inv")
    inv_norm = x.field.base.inv(x.norm())
    return x.conjugate() * inv_norm


def gi_order(x: GaussianInt) -> int:
    """
    乘法阶，必整除 q² - 1

    Raises:
        ZeroElementError: x 为零
    """
    if x.is_zero:
        raise ZeroElementError("order")
    group = x.field.order - 1
    one = x.field.one
    for d in divisors(group):
        if x**d == one:
            return d
    return group


def gi_find_generator(field: GaussianField) -> GaussianInt:
    """按整数编码顺序返回第一个阶为 q² - 1 的元素（GI(3) 中为 1+j）"""
    group = field.order - 1
    for value in range(1, field.order):
        candidate = field.element(value)
        if gi_order(candidate) == group:
            return candidate
    raise ZeroElementError("generator")


def gaussian_power_table(field: GaussianField) -> List[GaussianInt]:
    """生成元的全部幂 ξ^0 .. ξ^(q²-2)"""
    g = field.generator
    powers = []
    current = field.one
    for _ in range(field.order - 1):
        powers.append(current)
        current = current * g
    return powers


def format_power(k: int, symbol: str = "ξ") -> str:
    """ξ^k 的显示形式"""
    if k == 0:
        return f"{symbol}⁰"
    return f"{symbol}{superscript(k)}"
