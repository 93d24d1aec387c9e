"""
GdmaLab 机会码表

二进制串与伽罗瓦符号之间的前缀码。p^m 不是 2 的幂时，基本星座只有 2^s 个点，
其余 W = p^m - 2^s 个点靠在基本码字后追加一个机会比特区分。
"""

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Dict, List, Optional, Sequence, Tuple, Union

import numpy as np

from ..exceptions import NotPowerOfTwoError, UnknownCodeError, UnknownSymbolError
from ..fields.base import TableField
from ..fields.extension import ExtensionField
from ..fields.gaussian import GaussianField
from ..utils.logging import get_logger

logger = get_logger(__name__)

# GF(7) 由 x + 4 定义，α = 3；按整数编码给出码字
CODE_A_WORDS = {0: "000", 1: "001", 3: "11", 2: "010", 6: "110", 4: "100", 5: "101"}
CODE_A_PRIME_WORDS = {0: "000", 1: "010", 3: "11", 2: "100", 6: "101", 4: "001", 5: "011"}

# GI(3) 编码 re + 3·im；2+2j (ξ⁵) 取 0001 才能与 0000 共同补全 000 前缀
CODE_B_WORDS = {
    0: "0000",
    1: "011",
    4: "100",
    6: "010",
    7: "101",
    2: "110",
    8: "0001",
    3: "001",
    5: "111",
}

GF7_POLY = (1, 4)

_DIRECT_PATTERN = re.compile(r"^direct\(\s*(\d+)\s*,\s*(\d+)\s*\)$")

CODE_ALIASES = {
    "a": "A",
    "a'": "A_prime",
    "a_prime": "A_prime",
    "aprime": "A_prime",
    "a′": "A_prime",
    "b": "B",
}


@dataclass(frozen=True, eq=False)
class OpportunisticCode:
    """
    码表

    Attributes:
        name: 码名
        field: 符号所在的域
        words: words[v] 是整数编码为 v 的符号的码字
    """

    name: str
    field: TableField
    words: Tuple[str, ...]

    # ===== 基本参数 =====

    @property
    def size(self) -> int:
        return len(self.words)

    @property
    def alphabet(self) -> List:
        return [self.field.element(v) for v in range(self.size)]

    @property
    def s(self) -> int:
        """基本星座比特数，2^s <= |alphabet| < 2^(s+1)"""
        return self.size.bit_length() - 1

    @property
    def w(self) -> int:
        """追加点数"""
        return self.size - (1 << self.s)

    @cached_property
    def lengths(self) -> np.ndarray:
        lengths = np.array([len(word) for word in self.words], dtype=np.int64)
        lengths.setflags(write=False)
        return lengths

    @property
    def max_length(self) -> int:
        return int(self.lengths.max())

    @property
    def min_length(self) -> int:
        return int(self.lengths.min())

    @property
    def fixed_length(self) -> bool:
        return self.max_length == self.min_length

    @cached_property
    def kraft_sum(self) -> Fraction:
        return sum((Fraction(1, 2 ** len(word)) for word in self.words), Fraction(0))

    @property
    def complete(self) -> bool:
        return self.kraft_sum == 1

    @cached_property
    def prefix_violation(self) -> Optional[Tuple[str, str]]:
        """(短码字, 以其为前缀的码字)；前缀无关时为 None"""
        ordered = sorted(self.words, key=lambda w: (len(w), w))
        for i, short in enumerate(ordered):
            for long in ordered[i + 1 :]:
                if long.startswith(short):
                    return short, long
        return None

    @property
    def instantaneous(self) -> bool:
        return self.prefix_violation is None and len(set(self.words)) == self.size

    @property
    def opportunistic_symbols(self) -> List[int]:
        """码字比基本长度多一位的符号（整数编码）"""
        if self.fixed_length:
            return []
        return [v for v, word in enumerate(self.words) if len(word) > self.s]

    # ===== 查找 =====

    def _value_of(self, symbol) -> int:
        value = int(symbol.value) if hasattr(symbol, "value") else int(symbol)
        if hasattr(symbol, "field") and symbol.field != self.field:
            raise UnknownSymbolError(str(symbol), self.name)
        if not 0 <= value < self.size:
            raise UnknownSymbolError(str(symbol), self.name)
        return value

    def word_of(self, symbol) -> str:
        """
        符号 -> 码字

        Raises:
            UnknownSymbolError: 符号不在字母表中
        """
        return self.words[self._value_of(symbol)]

    @cached_property
    def symbol_of(self) -> Dict[str, int]:
        return {word: v for v, word in enumerate(self.words)}

    def format_word(self, symbol) -> str:
        """机会比特放在方括号中，如 10[1]"""
        value = self._value_of(symbol)
        word = self.words[value]
        if value in self.opportunistic_symbols:
            return f"{word[:-1]}[{word[-1]}]"
        return word

    # ===== 批量查表 =====

    @cached_property
    def word_bits(self) -> np.ndarray:
        """(size, max_length) 码字比特，右侧补零"""
        bits = np.zeros((self.size, self.max_length), dtype=np.uint8)
        for v, word in enumerate(self.words):
            bits[v, : len(word)] = [int(b) for b in word]
        bits.setflags(write=False)
        return bits

    @cached_property
    def window_table(self) -> Tuple[np.ndarray, np.ndarray]:
        """
        max_length 比特窗口 -> (符号, 码字长度)

        窗口按 MSB 在前解释为整数；没有码字为其前缀时符号为 -1、长度为 0。
        """
        span = self.max_length
        symbols = np.full(1 << span, -1, dtype=np.int64)
        lengths = np.zeros(1 << span, dtype=np.int64)
        for v, word in enumerate(self.words):
            shift = span - len(word)
            start = int(word, 2) << shift if word else 0
            symbols[start : start + (1 << shift)] = v
            lengths[start : start + (1 << shift)] = len(word)
        symbols.setflags(write=False)
        lengths.setflags(write=False)
        return symbols, lengths

    def describe(self) -> str:
        return (
            f"Code {self.name} over {self.field!r}: s={self.s}, W={self.w}, "
            f"kraft={self.kraft_sum}, instantaneous={self.instantaneous}"
        )

    def __repr__(self) -> str:
        return f"OpportunisticCode({self.name!r}, {self.field!r})"


def _from_mapping(name: str, field: TableField, mapping: Dict[int, str]) -> OpportunisticCode:
    words = tuple(mapping[v] for v in range(field.order))
    return OpportunisticCode(name=name, field=field, words=words)


def direct_code(p: int, m: int, field: Optional[ExtensionField] = None) -> OpportunisticCode:
    """
    p^m 为 2 的幂时的定长码：元素的 MSB 在前二进制表示

    Raises:
        NotPowerOfTwoError: p^m 不是 2 的幂
    """
    size = p**m
    if size & (size - 1):
        raise NotPowerOfTwoError(size)
    field = field if field is not None else ExtensionField(p, m)
    width = max(1, math.ceil(math.log2(size)))
    words = tuple(format(v, f"0{width}b") for v in range(size))
    return OpportunisticCode(name=f"direct({p},{m})", field=field, words=words)


def canonical_code_name(name: str) -> str:
    key = name.strip()
    return CODE_ALIASES.get(key.lower(), key)


def builtin_code(name: str) -> OpportunisticCode:
    """
    内置码表

    Args:
        name: A、A_prime（也接受 A'）、B 或 direct(p,m)

    Raises:
        UnknownCodeError: 未知名称
        NotPowerOfTwoError: direct 的 p^m 不是 2 的幂
    """
    canonical = canonical_code_name(name)
    if canonical == "A":
        return _from_mapping("A", ExtensionField(7, 1, GF7_POLY), CODE_A_WORDS)
    if canonical == "A_prime":
        return _from_mapping("A_prime", ExtensionField(7, 1, GF7_POLY), CODE_A_PRIME_WORDS)
    if canonical == "B":
        return _from_mapping("B", GaussianField(3), CODE_B_WORDS)

    match = _DIRECT_PATTERN.match(canonical.lower())
    if match:
        return direct_code(int(match.group(1)), int(match.group(2)))
    raise UnknownCodeError(name)


def code_for_field(field: TableField, name: Optional[str] = None) -> OpportunisticCode:
    """
    为链路选择码表；name 为 None 或 "auto" 时自动选择

    GF(2^m) 用 direct(2,m)，GI(3) 用 B，GF(7) 用 A′。

    Raises:
        UnknownCodeError: 无可用码表，或指定码表与域不符
    """
    if name is not None and name.lower() != "auto":
        code = builtin_code(name)
        if code.field != field:
            if code.name.startswith("direct") and isinstance(field, ExtensionField):
                return direct_code(field.p, field.m, field)
            raise UnknownCodeError(f"{code.name} does not fit {field!r}")
        return code

    if isinstance(field, ExtensionField) and field.p == 2:
        return direct_code(2, field.m, field)
    if isinstance(field, GaussianField) and field.q == 3:
        return builtin_code("B")
    if isinstance(field, ExtensionField) and field.p == 7 and field.m == 1:
        code = builtin_code("A_prime")
        if code.field == field:
            return code
    raise UnknownCodeError(f"auto code for {field!r}")


def list_codes() -> Sequence[str]:
    return ("A", "A_prime", "B", "direct(p,m)")
