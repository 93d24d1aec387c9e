"""
转码模块

二进制与 p 元伽罗瓦符号之间的机会码映射，以及 R、h 指标。
"""

from .codes import (
    OpportunisticCode,
    builtin_code,
    canonical_code_name,
    code_for_field,
    direct_code,
    list_codes,
)
from .rates import RateReport, Weighting, average_rate, format_h, frame_symbols, h_param
from .stream import (
    EncodeResult,
    bits_to_symbols,
    decode_symbols,
    encode_bits,
    symbols_to_bits,
)

__all__ = [
    "OpportunisticCode",
    "builtin_code",
    "canonical_code_name",
    "code_for_field",
    "direct_code",
    "list_codes",
    "EncodeResult",
    "encode_bits",
    "decode_symbols",
    "symbols_to_bits",
    "bits_to_symbols",
    "Weighting",
    "RateReport",
    "average_rate",
    "h_param",
    "format_h",
    "frame_symbols",
]
