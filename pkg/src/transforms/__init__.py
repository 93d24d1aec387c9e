"""
变换模块

FFFT / FFHT 及其逆变换，作为 GDMA 的复用/解复用核。
"""

from .fourier import FourierTransform, ffft, fourier_transform, iffft
from .hartley import CasKernel, HartleyTransform, ffht, hartley_transform, iffht
from .linear import (
    FieldTransform,
    IdentityTransform,
    field_matmul,
    identity_matrix,
    invert_matrix,
)
from .signals import Signal, Spectrum

__all__ = [
    "Signal",
    "Spectrum",
    "FieldTransform",
    "IdentityTransform",
    "field_matmul",
    "identity_matrix",
    "invert_matrix",
    "FourierTransform",
    "fourier_transform",
    "ffft",
    "iffft",
    "CasKernel",
    "HartleyTransform",
    "hartley_transform",
    "ffht",
    "iffht",
]
