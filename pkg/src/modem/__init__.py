"""
调制解调模块

星座、调制/硬判决解调、AWGN 信道与单用户理论误符号率。
自检在 modem.selftest 中。
"""

from .channel import ChannelConfig, awgn, db_to_linear, linear_to_db, noise_density
from .constellations import (
    Constellation,
    available_constellations,
    bpsk,
    cross_qam32,
    get_constellation,
    gray,
    psk,
    square_qam,
)
from .modulation import (
    as_bit_array,
    bits_to_str,
    demap,
    demodulate,
    map_bits,
    modulate,
    modulate_frame,
    padding_for,
)
from .theory import q_function, theoretical_ser

__all__ = [
    "Constellation",
    "available_constellations",
    "get_constellation",
    "gray",
    "bpsk",
    "psk",
    "square_qam",
    "cross_qam32",
    "modulate",
    "modulate_frame",
    "demodulate",
    "map_bits",
    "demap",
    "padding_for",
    "as_bit_array",
    "bits_to_str",
    "ChannelConfig",
    "awgn",
    "db_to_linear",
    "linear_to_db",
    "noise_density",
    "q_function",
    "theoretical_ser",
]
