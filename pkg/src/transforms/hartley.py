"""
GdmaLab 有限域哈特利变换 (FFHT)

GI(q) 上的 cas 核：
    cos(i) = (ζ^i + ζ^-i) / 2
    sin(i) = (ζ^i - ζ^-i) / (2j)
    cas(i) = cos(i) + sin(i)
正变换 H_k = Σ_i v_i cas(ik mod N)。
"""

from functools import lru_cache
from typing import Optional, Sequence, Union

import numpy as np

from ..exceptions import (
    ElementOutOfRangeError,
    EvenCharacteristicError,
    LengthMismatchError,
)
from ..fields.gaussian import GaussianField, GaussianInt, gi_inv, gi_order
from ..utils.logging import get_logger
from .linear import FieldTransform, field_matmul, identity_matrix, invert_matrix
from .signals import Signal, Spectrum

logger = get_logger(__name__)


class CasKernel:
    """
    cas 核表

    Args:
        field: GI(q)
        n: 变换长度，省略时取 zeta 的阶
        zeta: 阶为 N 的元素，省略时取阶为 n 的标准元素（n 也省略时为生成元）

    Attributes:
        zeta: 核元素 ζ
        length: N = ord(ζ)
        cos_table / sin_table / cas_table: 长度 N 的整数编码
    """

    def __init__(
        self,
        field: GaussianField,
        n: Optional[int] = None,
        zeta: Optional[GaussianInt] = None,
    ):
        if field.characteristic % 2 == 0:
            raise EvenCharacteristicError(field.characteristic)
        if zeta is None:
            zeta = field.element_of_order(n) if n is not None else field.generator
        length = gi_order(zeta)
        if n is not None and n != length:
            raise LengthMismatchError(n, length, "kernel order")

        self.field = field
        self.zeta = zeta
        self.length = length

        half = gi_inv(field.element(2 % field.q, 0))
        half_j = gi_inv(field.element(0, 2 % field.q))
        cos_values, sin_values, cas_values = [], [], []
        for i in range(length):
            up, down = zeta**i, zeta ** (-i)
            c = (up + down) * half
            s = (up - down) * half_j
            cos_values.append(c.value)
            sin_values.append(s.value)
            cas_values.append((c + s).value)

        self.cos_table = np.array(cos_values, dtype=np.int32)
        self.sin_table = np.array(sin_values, dtype=np.int32)
        self.cas_table = np.array(cas_values, dtype=np.int32)
        for table in (self.cos_table, self.sin_table, self.cas_table):
            table.setflags(write=False)

    def cas(self, i: int) -> GaussianInt:
        """cas(i)，按 N 取模"""
        return self.field.element(int(self.cas_table[i % self.length]))

    def cos(self, i: int) -> GaussianInt:
        return self.field.element(int(self.cos_table[i % self.length]))

    def sin(self, i: int) -> GaussianInt:
        return self.field.element(int(self.sin_table[i % self.length]))

    def matrix(self) -> np.ndarray:
        """N x N cas 矩阵 M[i, k] = cas(ik mod N)"""
        idx = np.outer(np.arange(self.length), np.arange(self.length)) % self.length
        return self.cas_table[idx]

    def __eq__(self, other) -> bool:
        return isinstance(other, CasKernel) and other.zeta == self.zeta

    def __hash__(self) -> int:
        return hash(("cas", self.field, self.zeta.value))

    def __repr__(self) -> str:
        return f"CasKernel(zeta={self.zeta}, N={self.length})"


class HartleyTransform(FieldTransform):
    """
    GI(q) 上的 FFHT

    构造时验证 M·M = N·I；成立则逆矩阵取 N⁻¹·M，否则做 Gauss-Jordan 求逆。

    Raises:
        SingularKernelMatrixError: cas 矩阵奇异
    """

    kind = "ffht"

    def __init__(self, kernel: CasKernel):
        field = kernel.field
        n = kernel.length
        forward = kernel.matrix()

        n_scalar = n % field.q
        square = field_matmul(field, forward, forward)
        self.self_inverse = n_scalar != 0 and np.array_equal(
            square, identity_matrix(n) * n_scalar
        )
        if self.self_inverse:
            n_inv = pow(n_scalar, -1, field.q)
            inverse = field.mul_table[forward, n_inv]
        else:
            inverse = invert_matrix(field, forward)

        super().__init__(field, n, forward, inverse, kernel=kernel.zeta)
        self.cas_kernel = kernel
        logger.debug(
            f"Built FFHT over {field!r}, N={n}, zeta={kernel.zeta}, "
            f"self_inverse={self.self_inverse}"
        )


@lru_cache(maxsize=32)
def hartley_transform(kernel: CasKernel) -> HartleyTransform:
    return HartleyTransform(kernel)


def ffht(v: Union[Signal, Sequence[int]], kernel: CasKernel) -> Spectrum:
    """
    正变换

    Raises:
        EvenCharacteristicError: 特征为 2
        LengthMismatchError: N 不等于 ord(ζ)
    """
    field = kernel.field
    if field.characteristic % 2 == 0:
        raise EvenCharacteristicError(field.characteristic)
    values = v.values if isinstance(v, Signal) else np.asarray(v, dtype=np.int64)
    if values.size != kernel.length:
        raise LengthMismatchError(kernel.length, int(values.size), "signal")
    bad = values[(values < 0) | (values >= field.characteristic)]
    if bad.size:
        raise ElementOutOfRangeError(int(bad[0]), field.characteristic)
    transform = hartley_transform(kernel)
    return Spectrum(transform.forward(values), field, kernel.zeta)


def iffht(spectrum: Spectrum, kernel: CasKernel) -> Signal:
    """
    逆变换 v = M⁻¹ H

    Raises:
        LengthMismatchError: 频谱长度与核不符
        SingularKernelMatrixError: cas 矩阵奇异
    """
    if spectrum.length != kernel.length:
        raise LengthMismatchError(kernel.length, spectrum.length, "spectrum")
    transform = hartley_transform(kernel)
    return Signal(transform.inverse(spectrum.values), kernel.field)
