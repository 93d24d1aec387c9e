"""
GdmaLab 扩域算术

GF(p) 与 GF(p^m)。扩域由本原多项式定义，α 为 x 的剩余类。
元素系数向量按最高次在前存储 (a_{m-1}, ..., a_0)，与多项式输入顺序一致；
整数编码为 Σ a_i p^i，因此 GF(p) 的常数元素编码就是其自身。
"""

from dataclasses import dataclass
from dataclasses import field as dc_field
from enum import Enum
from typing import List, Optional, Sequence, Tuple, Union

import numpy as np

from ..exceptions import (
    DivisionByZeroError,
    ElementOutOfRangeError,
    FieldMismatchError,
    InvalidPolynomialError,
    LengthMismatchError,
    NonPrimeModulusError,
    NonPrimitivePolynomialError,
    ZeroElementError,
)
from ..utils.logging import get_logger
from .base import TableField, divisors, is_prime

logger = get_logger(__name__)

# 仅为实际用到的域提供默认本原多项式
DEFAULT_PRIMITIVE_POLYS = {
    (2, 4): (1, 0, 0, 1, 1),  # x^4 + x + 1
    (2, 3): (1, 0, 1, 1),  # x^3 + x + 1
    (2, 1): (1, 1),  # GF(2)
}


def default_primitive_poly(p: int, m: int) -> Tuple[int, ...]:
    """
    获取默认本原多项式

    Raises:
        InvalidPolynomialError: 该 (p, m) 没有默认多项式
    """
    try:
        return DEFAULT_PRIMITIVE_POLYS[(p, m)]
    except KeyError:
        raise InvalidPolynomialError(
            None, f"no default primitive polynomial for GF({p}^{m})"
        ) from None


def format_poly(poly: Sequence[int]) -> str:
    """(1, 0, 0, 1, 1) -> 'x^4 + x + 1'"""
    degree = len(poly) - 1
    terms = []
    for i, c in enumerate(poly):
        power = degree - i
        if c == 0:
            continue
        coef = "" if (c == 1 and power > 0) else str(c)
        if power == 0:
            terms.append(str(c))
        elif power == 1:
            terms.append(f"{coef}x")
        else:
            terms.append(f"{coef}x^{power}")
    return " + ".join(terms) if terms else "0"


class PrimeField:
    """素域 GF(p)，仅做整数模运算"""

    def __init__(self, p: int):
        if not is_prime(p):
            raise NonPrimeModulusError(p)
        self.p = p

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.p

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.p

    def mul(self, a: int, b: int) -> int:
        return (a * b) % self.p

    def inv(self, a: int) -> int:
        if a % self.p == 0:
            raise DivisionByZeroError("inv")
        return pow(a, self.p - 2, self.p)

    def squares(self) -> set:
        """穷举全部平方数"""
        return {(x * x) % self.p for x in range(self.p)}

    def __eq__(self, other) -> bool:
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self) -> int:
        return hash(("GF", self.p))

    def __repr__(self) -> str:
        return f"PrimeField({self.p})"


# ===== GF(p)[x] 多项式辅助（系数升序） =====


def _poly_trim(a: List[int]) -> List[int]:
    while len(a) > 1 and a[-1] == 0:
        a = a[:-1]
    return a


def _poly_sub(a: List[int], b: List[int], p: int) -> List[int]:
    n = max(len(a), len(b))
    out = [
        ((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p
        for i in range(n)
    ]
    return _poly_trim(out)


def _poly_mul(a: List[int], b: List[int], p: int) -> List[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] = (out[i + j] + x * y) % p
    return _poly_trim(out)


def _poly_divmod(a: List[int], b: List[int], p: int) -> Tuple[List[int], List[int]]:
    a = _poly_trim(list(a))
    b = _poly_trim(list(b))
    inv_lead = pow(b[-1], p - 2, p)
    quotient = [0] * max(1, len(a) - len(b) + 1)
    remainder = list(a)
    while len(remainder) >= len(b) and any(remainder):
        shift = len(remainder) - len(b)
        coef = (remainder[-1] * inv_lead) % p
        quotient[shift] = coef
        for i, c in enumerate(b):
            remainder[i + shift] = (remainder[i + shift] - coef * c) % p
        remainder = _poly_trim(remainder)
    return _poly_trim(quotient), remainder


class ArithOp(Enum):
    """ext_arith 支持的操作"""

    ADD = "add"
    SUB = "sub"
    MUL = "mul"
    DIV = "div"
    POW = "pow"
    INV = "inv"


class ExtensionField(TableField):
    """
    扩域 GF(p^m)

    构造时以 x 的逐次幂生成 antilog 表并检验 ord(x) = p^m - 1。

    Example:
        >>> gf16 = ExtensionField(2, 4, (1, 0, 0, 1, 1))
        >>> gf16.alpha ** 4 == gf16.alpha + gf16.one
        True
    """

    power_symbol = "α"

    def __init__(self, p: int, m: int, poly: Optional[Sequence[int]] = None):
        """
        Args:
            p: 特征（素数）
            m: 扩张次数 >= 1
            poly: 首一本原多项式系数，最高次在前；None 时使用默认多项式
        """
        if not is_prime(p):
            raise NonPrimeModulusError(p)
        if m < 1:
            raise InvalidPolynomialError(poly, "degree m must be >= 1")
        if poly is None:
            poly = default_primitive_poly(p, m)

        poly = tuple(int(c) for c in poly)
        if len(poly) != m + 1:
            raise InvalidPolynomialError(poly, f"expected {m + 1} coefficients")
        if poly[0] != 1:
            raise InvalidPolynomialError(poly, "polynomial must be monic")
        if any(c < 0 or c >= p for c in poly):
            raise InvalidPolynomialError(poly, f"coefficients must lie in [0, {p})")

        self.p = p
        self.m = m
        self.poly = poly
        self.characteristic = p
        self.order = p**m
        self.ground = PrimeField(p)

        # x^m ≡ Σ reduction[i] x^i
        self._reduction = [(-poly[m - i]) % p for i in range(m)]
        self._antilog = self._build_antilog()
        self._log = np.full(self.order, -1, dtype=np.int64)
        self._log[self._antilog] = np.arange(self.order - 1)
        self._antilog.setflags(write=False)
        self._log.setflags(write=False)

        logger.debug(f"Built GF({p}^{m}) with poly {format_poly(poly)}")

    # ===== 构造 =====

    def _digits(self, value: int) -> List[int]:
        """升序数字 a_0..a_{m-1}"""
        out = []
        for _ in range(self.m):
            out.append(value % self.p)
            value //= self.p
        return out

    def _from_digits(self, digits: Sequence[int]) -> int:
        value = 0
        for d in reversed(digits):
            value = value * self.p + d
        return value

    def _times_x(self, digits: List[int]) -> List[int]:
        top = digits[-1]
        shifted = [0] + digits[:-1]
        return [(shifted[i] + top * self._reduction[i]) % self.p for i in range(self.m)]

    def _build_antilog(self) -> np.ndarray:
        size = self.order - 1
        antilog = np.empty(size, dtype=np.int64)
        digits = [1] + [0] * (self.m - 1)
        for k in range(size):
            value = self._from_digits(digits)
            if k > 0 and value in (0, 1):
                raise NonPrimitivePolynomialError(self.poly, k, size)
            antilog[k] = value
            digits = self._times_x(digits)
        if self._from_digits(digits) != 1:
            raise NonPrimitivePolynomialError(self.poly, 0, size)
        return antilog

    def _build_add_table(self) -> np.ndarray:
        values = np.arange(self.order)
        weights = self.p ** np.arange(self.m)
        digits = (values[:, None] // weights[None, :]) % self.p
        summed = (digits[:, None, :] + digits[None, :, :]) % self.p
        return summed @ weights

    def _build_mul_table(self) -> np.ndarray:
        logs = self._log
        n = self.order - 1
        table = self._antilog[(logs[:, None] + logs[None, :]) % n]
        zero = (logs[:, None] < 0) | (logs[None, :] < 0)
        return np.where(zero, 0, table)

    @property
    def antilog_table(self) -> np.ndarray:
        return self._antilog

    @property
    def log_table(self) -> np.ndarray:
        return self._log

    def generator_value(self) -> int:
        return int(self._antilog[1]) if self.order > 2 else 1

    # ===== 元素 =====

    def element(self, value: Union[int, Sequence[int]]) -> "ExtElement":
        """
        构造元素

        Args:
            value: 整数编码，或最高次在前的系数向量
        """
        if not isinstance(value, (int, np.integer)):
            coeffs = tuple(int(c) for c in value)
            if len(coeffs) != self.m or any(c < 0 or c >= self.p for c in coeffs):
                raise ElementOutOfRangeError(coeffs, self.order)
            return ExtElement(coeffs, self)
        value = int(value)
        if not 0 <= value < self.order:
            raise ElementOutOfRangeError(value, self.order)
        return ExtElement(tuple(reversed(self._digits(value))), self)

    @property
    def zero(self) -> "ExtElement":
        return self.element(0)

    @property
    def one(self) -> "ExtElement":
        return self.element(1)

    @property
    def alpha(self) -> "ExtElement":
        """本原元 α（x 的剩余类）"""
        return self.element(self.generator_value())

    def alpha_power(self, k: int) -> "ExtElement":
        return self.element(int(self._antilog[k % (self.order - 1)]))

    def elements(self) -> List["ExtElement"]:
        return [self.element(v) for v in range(self.order)]

    def element_of_order(self, n: int) -> "ExtElement":
        """
        阶为 n 的元素 α^((p^m - 1)/n)

        Raises:
            LengthMismatchError: n 不整除 p^m - 1
        """
        if n < 1 or (self.order - 1) % n != 0:
            raise LengthMismatchError(self.order - 1, n, "kernel order")
        return self.alpha_power((self.order - 1) // n)

    # ===== 标量算术（整数编码） =====

    def add_value(self, a: int, b: int) -> int:
        da, db = self._digits(a), self._digits(b)
        return self._from_digits([(x + y) % self.p for x, y in zip(da, db)])

    def neg_value(self, a: int) -> int:
        return self._from_digits([(-x) % self.p for x in self._digits(a)])

    def mul_value(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        k = (self._log[a] + self._log[b]) % (self.order - 1)
        return int(self._antilog[k])

    def inv_value(self, a: int) -> int:
        if a == 0:
            raise DivisionByZeroError("inv")
        return int(self._antilog[(-self._log[a]) % (self.order - 1)])

    def inverse_by_euclid(self, e: "ExtElement") -> "ExtElement":
        """
        用多项式扩展欧几里得算法求逆，作为查表求逆的交叉校验

        Raises:
            DivisionByZeroError: e 为零
        """
        self._check_member(e)
        if e.is_zero:
            raise DivisionByZeroError("inv")
        p = self.p
        modulus = list(reversed(self.poly))
        r0, r1 = modulus, _poly_trim(self._digits(e.value))
        s0, s1 = [0], [1]
        while any(r1):
            q, r = _poly_divmod(r0, r1, p)
            r0, r1 = r1, r
            s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1, p), p)
        # r0 为非零常数
        scale = pow(r0[0], p - 2, p)
        s = [(c * scale) % p for c in s0]
        _, s = _poly_divmod(s, modulus, p)
        s = (s + [0] * self.m)[: self.m]
        return self.element(self._from_digits(s))

    def _check_member(self, e: "ExtElement"):
        if e.field != self:
            raise FieldMismatchError(e.field, self)

    # ===== 比较 =====

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ExtensionField)
            and other.p == self.p
            and other.m == self.m
            and other.poly == self.poly
        )

    def __hash__(self) -> int:
        return hash(("GF", self.p, self.m, self.poly))

    def __repr__(self) -> str:
        if self.m == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.m})"

    def describe(self) -> str:
        return f"{self!r} mod {format_poly(self.poly)}"


@dataclass(frozen=True)
class ExtElement:
    """GF(p^m) 元素，coeffs 最高次在前"""

    coeffs: Tuple[int, ...]
    field: ExtensionField = dc_field(repr=False)

    @property
    def value(self) -> int:
        value = 0
        for c in self.coeffs:
            value = value * self.field.p + c
        return value

    @property
    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def _coerce(self, other) -> "ExtElement":
        if isinstance(other, ExtElement):
            if other.field != self.field:
                raise FieldMismatchError(self.field, other.field)
            return other
        if isinstance(other, (int, np.integer)):
            return self.field.element(int(other) % self.field.p)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.field.element(self.field.add_value(self.value, other.value))

    __radd__ = __add__

    def __neg__(self):
        return self.field.element(self.field.neg_value(self.value))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.field.element(self.field.mul_value(self.value, other.value))

    __rmul__ = __mul__

    def inverse(self) -> "ExtElement":
        return self.field.element(self.field.inv_value(self.value))

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if other.is_zero:
            raise DivisionByZeroError("div")
        return self * other.inverse()

    def __pow__(self, exponent: int):
        return self.field.element(self.field.power_value(self.value, int(exponent)))

    def log(self) -> int:
        """离散对数 log_α"""
        if self.is_zero:
            raise ZeroElementError("log")
        return int(self.field.log_table[self.value])

    def order(self) -> int:
        return element_order(self)

    def power_label(self) -> str:
        return self.field.power_label(self.value)

    def __int__(self) -> int:
        return self.value

    def __str__(self) -> str:
        return "".join(str(c) for c in self.coeffs)


def build_extension_field(
    p: int, m: int, poly: Optional[Sequence[int]] = None
) -> ExtensionField:
    """构造 GF(p^m)，poly 为 None 时使用默认本原多项式"""
    return ExtensionField(p, m, poly)


def ext_arith(
    a: ExtElement,
    b: Union[ExtElement, int, None],
    op: Union[ArithOp, str],
) -> ExtElement:
    """
    扩域算术分派

    Args:
        a: 左操作数
        b: 右操作数；pow 时为整数指数，inv 时忽略
        op: add/sub/mul/div/pow/inv

    Raises:
        DivisionByZeroError: 除数或求逆对象为零
        FieldMismatchError: 操作数不属于同一个域
    """
    op = ArithOp(op) if isinstance(op, str) else op
    if isinstance(b, ExtElement) and b.field != a.field:
        raise FieldMismatchError(a.field, b.field)

    if op is ArithOp.ADD:
        return a + b
    if op is ArithOp.SUB:
        return a - b
    if op is ArithOp.MUL:
        return a * b
    if op is ArithOp.DIV:
        return a / b
    if op is ArithOp.POW:
        return a ** int(b)
    return a.inverse()


def element_order(e: ExtElement) -> int:
    """
    乘法阶：最小的 n >= 1 使 e^n = 1

    Raises:
        ZeroElementError: e 为零
    """
    if e.is_zero:
        raise ZeroElementError("order")
    group = e.field.order - 1
    for d in divisors(group):
        if e.field.power_value(e.value, d) == 1:
            return d
    return group
