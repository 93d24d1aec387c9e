"""
有限域模块

GF(p)、GF(p^m) 与高斯整数域 GI(q)。
"""

from .base import TableField, is_prime, superscript
from .extension import (
    DEFAULT_PRIMITIVE_POLYS,
    ArithOp,
    ExtElement,
    ExtensionField,
    PrimeField,
    build_extension_field,
    default_primitive_poly,
    element_order,
    ext_arith,
    format_poly,
)
from .gaussian import (
    GaussianField,
    GaussianInt,
    gaussian_power_table,
    gi_add,
    gi_find_generator,
    gi_inv,
    gi_mul,
    gi_order,
    validate_gaussian_field,
)

__all__ = [
    "TableField",
    "is_prime",
    "superscript",
    "DEFAULT_PRIMITIVE_POLYS",
    "ArithOp",
    "ExtElement",
    "ExtensionField",
    "PrimeField",
    "build_extension_field",
    "default_primitive_poly",
    "element_order",
    "ext_arith",
    "format_poly",
    "GaussianField",
    "GaussianInt",
    "gaussian_power_table",
    "gi_add",
    "gi_find_generator",
    "gi_inv",
    "gi_mul",
    "gi_order",
    "validate_gaussian_field",
]
