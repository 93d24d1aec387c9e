"""
GdmaLab 比特流与符号流互转

单帧接口处理字符串，批量接口处理链路中的 numpy 数组。
"""

from dataclasses import dataclass
from typing import List, Sequence, Tuple

import numpy as np

from ..exceptions import NonInstantaneousCodeError, UnparseableBitsError
from ..utils.logging import get_logger
from .codes import OpportunisticCode

logger = get_logger(__name__)


@dataclass(frozen=True)
class EncodeResult:
    """
    编码结果

    Attributes:
        values: 符号整数编码
        pad: 末尾补零比特数
        opportunistic: 走机会信道的符号个数
    """

    values: Tuple[int, ...]
    pad: int
    opportunistic: int
    code: OpportunisticCode

    @property
    def symbols(self) -> List:
        return [self.code.field.element(v) for v in self.values]

    def power_labels(self) -> List[str]:
        return [self.code.field.power_label(v) for v in self.values]

    def __len__(self) -> int:
        return len(self.values)


def _require_instantaneous(code: OpportunisticCode):
    violation = code.prefix_violation
    if violation is not None:
        raise NonInstantaneousCodeError(code.name, violation[1], violation[0])


def encode_bits(bits: str, code: OpportunisticCode) -> EncodeResult:
    """
    贪心前缀解析

    末尾不足一个码字的片段补零到下一个码字边界，补零数记入 pad。

    Args:
        bits: 由 0/1 组成的字符串，允许含空格
        code: 前缀无关码

    Raises:
        NonInstantaneousCodeError: 码表不是前缀无关的
        UnparseableBitsError: 出现非 0/1 字符，或码表不完备导致无法解析

    Example:
        >>> encode_bits("1011001101111", builtin_code("A_prime")).power_labels()
        ['α³', 'α²', 'α', 'α⁵', 'α']
    """
    _require_instantaneous(code)
    table = code.symbol_of
    opportunistic = set(code.opportunistic_symbols)

    values: List[int] = []
    current = ""
    position = 0
    for char in bits:
        if char.isspace():
            continue
        if char not in "01":
            raise UnparseableBitsError(position, char)
        current += char
        position += 1
        if current in table:
            values.append(table[current])
            current = ""
        elif len(current) >= code.max_length:
            raise UnparseableBitsError(position - len(current), current)

    pad = 0
    if current:
        fragment = current
        while current not in table:
            if len(current) >= code.max_length:
                raise UnparseableBitsError(position - len(fragment), fragment)
            current += "0"
            pad += 1
        values.append(table[current])
        logger.debug(f"Padded trailing fragment {fragment!r} with {pad} zero bit(s)")

    return EncodeResult(
        values=tuple(values),
        pad=pad,
        opportunistic=sum(1 for v in values if v in opportunistic),
        code=code,
    )


def decode_symbols(symbols: Sequence, code: OpportunisticCode) -> str:
    """
    符号序列 -> 码字拼接

    Raises:
        NonInstantaneousCodeError: 码表不是前缀无关的
        UnknownSymbolError: 符号不在字母表中
    """
    _require_instantaneous(code)
    return "".join(code.word_of(symbol) for symbol in symbols)


def symbols_to_bits(code: OpportunisticCode, symbols: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """
    批量编码

    Args:
        symbols: (B, n) 整数编码

    Returns:
        (flat_bits, frame_lengths)：各帧比特依次拼接
    """
    symbols = np.atleast_2d(np.asarray(symbols, dtype=np.int64))
    lengths = code.lengths[symbols]
    words = code.word_bits[symbols]
    mask = np.arange(code.max_length) < lengths[..., None]
    return words[mask], lengths.sum(axis=1)


def bits_to_symbols(
    code: OpportunisticCode,
    bits: np.ndarray,
    starts: np.ndarray,
    lengths: np.ndarray,
    n_symbols: int,
) -> Tuple[np.ndarray, np.ndarray]:
    """
    批量解码，每帧一个游标前进 n_symbols 次

    窗口内没有匹配码字或码字越过帧尾时计为不可解码，该位置输出符号 0。

    Args:
        bits: 拼接后的比特
        starts: 各帧起点
        lengths: 各帧有效比特数
        n_symbols: 每帧符号数

    Returns:
        (symbols (B, n_symbols), undecodable (B,))
    """
    _require_instantaneous(code)
    span = code.max_length
    table_symbols, table_lengths = code.window_table
    padded = np.concatenate([np.asarray(bits, dtype=np.int64), np.zeros(span, dtype=np.int64)])
    weights = 1 << np.arange(span - 1, -1, -1)

    starts = np.asarray(starts, dtype=np.int64)
    ends = starts + np.asarray(lengths, dtype=np.int64)
    cursor = starts.copy()
    out = np.zeros((starts.size, n_symbols), dtype=np.int64)
    undecodable = np.zeros(starts.size, dtype=np.int64)
    offsets = np.arange(span)

    for step in range(n_symbols):
        index = cursor[:, None] + offsets[None, :]
        inside = index < ends[:, None]
        window = np.where(inside, padded[np.minimum(index, padded.size - 1)], 0)
        key = window @ weights
        symbol = table_symbols[key]
        width = table_lengths[key]

        bad = (symbol < 0) | (cursor + width > ends)
        out[:, step] = np.where(bad, 0, symbol)
        undecodable += bad
        cursor = cursor + np.where(symbol < 0, span, width)

    return out, undecodable
