"""
误码率仿真模块

分块可复现的蒙特卡洛扫描、Wilson 区间与 CSV 记录。
"""

from .harness import MonteCarloHarness, run_point, simulate_block, sweep
from .records import CSV_COLUMNS, BerRecord, ebn0_at_ber, format_row, write_csv
from .rng import block_generator, point_key
from .spec import SimulationSpec, StopRule
from .statistics import binomial_sigma, confidence_interval, z_score

__all__ = [
    "SimulationSpec",
    "StopRule",
    "MonteCarloHarness",
    "run_point",
    "sweep",
    "simulate_block",
    "BerRecord",
    "CSV_COLUMNS",
    "format_row",
    "write_csv",
    "ebn0_at_ber",
    "block_generator",
    "point_key",
    "confidence_interval",
    "binomial_sigma",
    "z_score",
]
