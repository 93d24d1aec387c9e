"""
GdmaLab 误码记录与 CSV 输出
"""

import csv
import io
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import IO, List, Optional, Sequence, Union

CSV_COLUMNS = [
    "mode",
    "modulation",
    "transform",
    "n_users",
    "ebn0_db",
    "bits_observed",
    "bit_errors",
    "ber",
    "symbols_observed",
    "symbol_errors",
    "ser",
    "frames",
    "frame_errors",
    "fer",
    "ci_low",
    "ci_high",
    "seed",
]


@dataclass(frozen=True)
class BerRecord:
    """
    一个 (mode, modulation, Eb/N0) 点的统计结果

    ci_low / ci_high 是比特错误率的 95% Wilson 区间。
    """

    mode: str
    modulation: str
    transform: str
    n_users: int
    ebn0_db: float
    bits_observed: int
    bit_errors: int
    symbols_observed: int
    symbol_errors: int
    frames: int
    frame_errors: int
    ci_low: float
    ci_high: float
    seed: int
    budget_exhausted: bool = False
    fer_bound: Optional[float] = None
    undecodable: int = 0
    out_of_subfield: int = 0
    user_bit_errors: tuple = field(default_factory=tuple)

    @property
    def ber(self) -> float:
        return self.bit_errors / self.bits_observed if self.bits_observed else 0.0

    @property
    def ser(self) -> float:
        return self.symbol_errors / self.symbols_observed if self.symbols_observed else 0.0

    @property
    def fer(self) -> float:
        return self.frame_errors / self.frames if self.frames else 0.0

    @property
    def user_ber(self) -> List[float]:
        """各用户的比特错误率"""
        if not self.user_bit_errors or not self.frames:
            return []
        per_user_bits = self.bits_observed / len(self.user_bit_errors)
        return [e / per_user_bits for e in self.user_bit_errors]


def _format_db(value: float) -> str:
    return "inf" if math.isinf(value) else f"{value:.2f}"


def format_row(record: BerRecord) -> List[str]:
    """按 CSV_COLUMNS 顺序格式化一行，ber 为 6 位有效数字的科学计数法"""
    return [
        record.mode,
        record.modulation,
        record.transform,
        str(record.n_users),
        _format_db(record.ebn0_db),
        str(record.bits_observed),
        str(record.bit_errors),
        f"{record.ber:.5e}",
        str(record.symbols_observed),
        str(record.symbol_errors),
        f"{record.ser:.10f}",
        str(record.frames),
        str(record.frame_errors),
        f"{record.fer:.10f}",
        f"{record.ci_low:.10f}",
        f"{record.ci_high:.10f}",
        str(record.seed),
    ]


def write_csv(
    records: Sequence[BerRecord], target: Union[str, Path, IO[str], None] = None
) -> str:
    """
    写出 CSV

    Args:
        records: 记录
        target: 文件路径或文本流，None 时只返回字符串

    Returns:
        CSV 文本
    """
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for record in records:
        writer.writerow(format_row(record))
    text = buffer.getvalue()

    if isinstance(target, (str, Path)):
        path = Path(target)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text, encoding="utf-8")
    elif target is not None:
        target.write(text)
    return text


def ebn0_at_ber(records: Sequence[BerRecord], target: float) -> Optional[float]:
    """
    BER 曲线穿过 target 处的 Eb/N0（dB）

    相邻两点之间对 log10(BER) 做线性插值；曲线未穿过 target 时返回 None。
    右端点 BER 为 0 时取该点本身。
    """
    points = sorted(
        (r.ebn0_db, r.ber) for r in records if math.isfinite(r.ebn0_db)
    )
    for (x0, y0), (x1, y1) in zip(points, points[1:]):
        if y0 >= target > y1:
            if y1 <= 0.0:
                return x1
            if y0 == target:
                return x0
            ly0, ly1, lt = math.log10(y0), math.log10(y1), math.log10(target)
            return x0 + (x1 - x0) * (ly0 - lt) / (ly0 - ly1)
    return None
