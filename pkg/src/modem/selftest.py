"""
GdmaLab 调制解调自检

对每种星座比较蒙特卡洛误符号率与理论值，输出 CSV 行。
"""

import csv
import io
from dataclasses import astuple, dataclass, fields
from typing import Iterable, List, Optional, Sequence

import numpy as np

from ..simulation.statistics import confidence_interval
from ..utils.logging import get_logger
from .channel import awgn, db_to_linear, noise_density
from .constellations import available_constellations, get_constellation
from .modulation import demap, map_bits
from .theory import theoretical_ser

logger = get_logger(__name__)

DEFAULT_SELFTEST_POINTS_DB = (0.0, 4.0, 8.0)


@dataclass(frozen=True)
class SelftestRow:
    modulation: str
    esn0_db: float
    symbols: int
    symbol_errors: int
    simulated_ser: float
    theoretical_ser: float
    ci_low: float
    ci_high: float

    @property
    def within_interval(self) -> bool:
        return self.ci_low <= self.theoretical_ser <= self.ci_high


def modem_selftest(
    esn0_points_db: Sequence[float] = DEFAULT_SELFTEST_POINTS_DB,
    n_symbols: int = 100_000,
    seed: int = 0,
    modulations: Optional[Iterable[str]] = None,
) -> List[SelftestRow]:
    """
    逐星座、逐信噪比点仿真

    Args:
        esn0_points_db: Es/N0 点（dB）
        n_symbols: 每点符号数
        seed: 随机种子
        modulations: 星座名，默认全部
    """
    names = list(modulations) if modulations is not None else available_constellations()
    rng = np.random.default_rng(seed)
    rows = []
    for name in names:
        constellation = get_constellation(name)
        k = constellation.bits_per_symbol
        for esn0_db in esn0_points_db:
            esn0 = db_to_linear(esn0_db)
            bits = rng.integers(0, 2, size=(n_symbols, k), dtype=np.uint8)
            received = awgn(map_bits(constellation, bits), noise_density(esn0), rng)
            decided = demap(constellation, received)
            errors = int(np.count_nonzero(np.any(decided != bits, axis=1)))
            low, high = confidence_interval(errors, n_symbols)
            rows.append(
                SelftestRow(
                    modulation=constellation.name,
                    esn0_db=float(esn0_db),
                    symbols=n_symbols,
                    symbol_errors=errors,
                    simulated_ser=errors / n_symbols,
                    theoretical_ser=theoretical_ser(constellation, esn0),
                    ci_low=low,
                    ci_high=high,
                )
            )
            logger.debug(
                f"selftest {constellation.name} @ {esn0_db:.2f} dB: "
                f"sim={errors / n_symbols:.3e}, theory={rows[-1].theoretical_ser:.3e}"
            )
    return rows


def selftest_csv(rows: Sequence[SelftestRow]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow([f.name for f in fields(SelftestRow)])
    for row in rows:
        values = astuple(row)
        writer.writerow(
            [
                values[0],
                f"{values[1]:.2f}",
                values[2],
                values[3],
                f"{values[4]:.5e}",
                f"{values[5]:.5e}",
                f"{values[6]:.5e}",
                f"{values[7]:.5e}",
            ]
        )
    return buffer.getvalue()
