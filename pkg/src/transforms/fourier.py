"""
GdmaLab 有限域傅里叶变换 (FFFT)

V_k = Σ_i v_i α^{ik}，逆变换 v_i = N⁻¹ Σ_k V_k α^{-ik}。
"""

from functools import lru_cache
from math import gcd
from typing import Optional, Sequence, Union

import numpy as np

from ..exceptions import (
    ElementOutOfRangeError,
    LengthMismatchError,
    NonInvertibleLengthError,
)
from ..fields.extension import ExtElement, ExtensionField, element_order
from ..utils.logging import get_logger
from .linear import FieldTransform
from .signals import Signal, Spectrum

logger = get_logger(__name__)


class FourierTransform(FieldTransform):
    """
    GF(p^m) 上长度 N 的 FFFT

    Args:
        field: 频谱所在的扩域
        kernel: 阶为 N 的载波元素，默认 α（N = p^m - 1）

    Raises:
        NonInvertibleLengthError: gcd(N, p) != 1

    Example:
        >>> gf16 = ExtensionField(2, 4)
        >>> fft = FourierTransform(gf16)
        >>> fft.forward([1] * 15)[:3]
        array([1, 0, 0], dtype=int32)
    """

    kind = "ffft"

    def __init__(self, field: ExtensionField, kernel: Optional[ExtElement] = None):
        kernel = field.alpha if kernel is None else kernel
        n = element_order(kernel)
        p = field.characteristic
        if gcd(n, p) != 1:
            raise NonInvertibleLengthError(n, p)

        k = kernel.value
        exponents = np.outer(np.arange(n), np.arange(n))
        forward = np.array(
            [[field.power_value(k, int(e)) for e in row] for row in exponents],
            dtype=np.int32,
        )
        # N⁻¹ 是基域元素，基域编码与整数一致
        n_inv = pow(n, -1, p)
        inverse = np.array(
            [
                [field.mul_value(n_inv, field.power_value(k, -int(e))) for e in row]
                for row in exponents
            ],
            dtype=np.int32,
        )
        super().__init__(field, n, forward, inverse, kernel=kernel)
        self.n_inverse = n_inv
        logger.debug(f"Built FFFT over {field!r}, N={n}, kernel={kernel.power_label()}")


@lru_cache(maxsize=32)
def fourier_transform(field: ExtensionField, kernel_value: Optional[int] = None) -> FourierTransform:
    """按 (field, kernel) 缓存的 FFFT 实例"""
    kernel = None if kernel_value is None else field.element(kernel_value)
    return FourierTransform(field, kernel)


def _ground_values(v: Union[Signal, Sequence[int]], field) -> np.ndarray:
    values = v.values if isinstance(v, Signal) else np.asarray(v, dtype=np.int64)
    bad = values[(values < 0) | (values >= field.characteristic)]
    if bad.size:
        raise ElementOutOfRangeError(int(bad[0]), field.characteristic)
    return values


def ffft(
    v: Union[Signal, Sequence[int]],
    field: ExtensionField,
    kernel: Optional[ExtElement] = None,
) -> Spectrum:
    """
    正变换

    Args:
        v: GF(p) 上的长度 N 信号
        field: 扩域 GF(p^m)
        kernel: 阶为 N 的载波，默认 α

    Returns:
        Spectrum

    Raises:
        LengthMismatchError: N 不等于载波阶
    """
    transform = fourier_transform(field, None if kernel is None else kernel.value)
    values = _ground_values(v, field)
    if values.size != transform.length:
        raise LengthMismatchError(transform.length, int(values.size), "signal")
    return Spectrum(transform.forward(values), field, transform.kernel)


def iffft(spectrum: Spectrum) -> Signal:
    """
    逆变换

    Raises:
        NonInvertibleLengthError: gcd(N, p) != 1
        LengthMismatchError: 频谱长度不等于载波阶
    """
    field = spectrum.field
    n = spectrum.length
    if gcd(n, field.characteristic) != 1:
        raise NonInvertibleLengthError(n, field.characteristic)
    kernel = spectrum.kernel
    transform = fourier_transform(field, None if kernel is None else kernel.value)
    return Signal(transform.inverse(spectrum.values), field)
