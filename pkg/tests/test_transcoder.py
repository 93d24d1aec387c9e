"""
GdmaLab 转码模块单元测试
"""

from fractions import Fraction

import numpy as np
import pytest

from src.exceptions import (
    IncompleteCodeError,
    InvalidConstellationSizeError,
    NonInstantaneousCodeError,
    NotPowerOfTwoError,
    UnknownCodeError,
    UnknownSymbolError,
    UnparseableBitsError,
)
from src.fields.extension import ExtensionField
from src.transcoder.codes import (
    OpportunisticCode,
    builtin_code,
    canonical_code_name,
    code_for_field,
    direct_code,
)
from src.transcoder.rates import (
    Weighting,
    average_rate,
    format_h,
    frame_symbols,
    h_param,
)
from src.transcoder.stream import (
    bits_to_symbols,
    decode_symbols,
    encode_bits,
    symbols_to_bits,
)

EXAMPLE_BITS = "1011001101111"


class TestCodes:
    """测试码表构造"""

    def test_builtin_codes_are_complete(self):
        for name in ("A", "A_prime", "B"):
            assert builtin_code(name).kraft_sum == 1

    def test_prefix_property(self):
        """A 中 11 是 110 的前缀，A′ 与 B 是即时码"""
        assert builtin_code("A").prefix_violation == ("11", "110")
        assert builtin_code("A_prime").instantaneous
        assert builtin_code("B").instantaneous

    def test_code_a_refuses_stream_encoding(self):
        with pytest.raises(NonInstantaneousCodeError):
            encode_bits("0001", builtin_code("A"))
        with pytest.raises(NonInstantaneousCodeError):
            decode_symbols([0, 1], builtin_code("A"))

    def test_aliases(self):
        assert canonical_code_name("A'") == "A_prime"
        assert builtin_code("a′").name == "A_prime"

    def test_code_b_shape(self):
        code = builtin_code("B")
        assert code.size == 9
        assert code.s == 3
        assert code.w == 1
        assert sorted(code.opportunistic_symbols) == [0, 8]

    def test_code_b_opportunistic_word(self):
        """2+2j 的码字为 0001，与 0000 共享前缀 000"""
        code = builtin_code("B")
        two_two_j = code.field.element(2, 2)
        assert code.word_of(two_two_j) == "0001"
        assert code.format_word(two_two_j) == "000[1]"
        assert code.format_word(code.field.element(1, 1)) == "100"

    def test_direct_code(self):
        code = direct_code(2, 4)
        assert code.fixed_length
        assert code.word_of(11) == "1011"
        assert code.opportunistic_symbols == []

    def test_direct_code_requires_power_of_two(self):
        with pytest.raises(NotPowerOfTwoError):
            direct_code(3, 2)

    def test_direct_by_name(self):
        assert builtin_code("direct(2,3)").size == 8

    def test_unknown_code(self):
        with pytest.raises(UnknownCodeError):
            builtin_code("C")

    def test_code_for_field(self, gf16, gi3):
        assert code_for_field(gf16).name == "direct(2,4)"
        assert code_for_field(gi3).name == "B"
        assert code_for_field(ExtensionField(7, 1, (1, 4))).name == "A_prime"

    def test_code_for_field_mismatch(self, gf16):
        with pytest.raises(UnknownCodeError):
            code_for_field(gf16, "B")
        with pytest.raises(UnknownCodeError):
            code_for_field(ExtensionField(3, 2, (1, 2, 2)))

    def test_prefix_violation_detected(self, gf8):
        code = OpportunisticCode("bad", gf8, ("0", "01", "10", "11", "100", "101", "110", "111"))
        assert code.prefix_violation == ("0", "01")
        assert not code.instantaneous

    def test_unknown_symbol(self, gi3):
        with pytest.raises(UnknownSymbolError):
            builtin_code("A").word_of(gi3.one)
        with pytest.raises(UnknownSymbolError):
            builtin_code("A").word_of(7)


class TestStream:
    """测试比特流编解码"""

    def test_example_encoding(self):
        """A′ 下 1011001101111 -> α³ α² α α⁵ α"""
        result = encode_bits(EXAMPLE_BITS, builtin_code("A'"))
        assert result.power_labels() == ["α³", "α²", "α", "α⁵", "α"]
        assert result.pad == 0
        assert decode_symbols(result.values, result.code) == EXAMPLE_BITS

    def test_trailing_fragment_padded(self):
        result = encode_bits(EXAMPLE_BITS + "1", builtin_code("A'"))
        assert result.pad == 2
        assert len(result) == 6
        assert decode_symbols(result.values, result.code) == EXAMPLE_BITS + "100"

    def test_whitespace_ignored(self):
        code = builtin_code("B")
        assert encode_bits("011 100", code).values == encode_bits("011100", code).values

    def test_opportunistic_count(self):
        result = encode_bits("0000" "0001" "011", builtin_code("B"))
        assert result.opportunistic == 2
        assert [str(s) for s in result.symbols] == ["0", "2+2j", "1"]

    def test_bad_character(self):
        with pytest.raises(UnparseableBitsError):
            encode_bits("10a1", builtin_code("B"))

    def test_non_instantaneous_rejected(self, gf8):
        code = OpportunisticCode("bad", gf8, ("0", "01", "10", "11", "100", "101", "110", "111"))
        with pytest.raises(NonInstantaneousCodeError):
            encode_bits("0101", code)

    @pytest.mark.parametrize("name", ["A_prime", "B"])
    def test_random_roundtrip(self, name, rng):
        """随机比特串编码再拼回，等于原串加补零"""
        code = builtin_code(name)
        for length in rng.integers(1, 65, size=10_000):
            bits = "".join("01"[b] for b in rng.integers(0, 2, size=length))
            result = encode_bits(bits, code)
            assert decode_symbols(result.values, code) == bits + "0" * result.pad

    @pytest.mark.slow
    @pytest.mark.parametrize("name", ["A_prime", "B"])
    def test_empirical_rate(self, name):
        """10⁷ 个均匀比特的平均码率收敛到 uniform-bits 的 R"""
        n_bits = 10**7
        raw = np.random.default_rng(7).integers(0, 2, size=n_bits, dtype=np.uint8)
        bits = (raw + ord("0")).tobytes().decode("ascii")
        code = builtin_code(name)
        result = encode_bits(bits, code)
        empirical = (n_bits + result.pad) / len(result)
        assert empirical == pytest.approx(average_rate(code).r, rel=5e-3)

    def test_batch_roundtrip(self, rng):
        code = builtin_code("B")
        symbols = rng.integers(0, 9, size=(6, 8))
        bits, lengths = symbols_to_bits(code, symbols)
        assert bits.size == lengths.sum()
        starts = np.concatenate([[0], np.cumsum(lengths)[:-1]])
        decoded, undecodable = bits_to_symbols(code, bits, starts, lengths, 8)
        assert np.array_equal(decoded, symbols)
        assert not undecodable.any()

    def test_batch_truncated_frame_is_undecodable(self):
        """帧尾截断的码字记为不可解码，输出 0"""
        code = builtin_code("B")
        bits, lengths = symbols_to_bits(code, np.array([[8, 1]]))
        decoded, undecodable = bits_to_symbols(code, bits, np.array([0]), lengths - 1, 2)
        assert decoded[0, 0] == 8
        assert decoded[0, 1] == 0
        assert undecodable[0] == 1


class TestRates:
    """测试 R 与 h"""

    def test_rate_code_b_uniform_bits(self):
        report = average_rate(builtin_code("B"))
        assert report.r_bits_per_symbol == Fraction(25, 8)
        assert report.r == pytest.approx(3.125)
        assert report.p_dir == Fraction(7, 8)

    def test_rate_code_b_uniform_symbols(self):
        report = average_rate(builtin_code("B"), "uniform-symbols")
        assert report.weighting is Weighting.UNIFORM_SYMBOLS
        assert report.r_bits_per_symbol == Fraction(28, 9)

    def test_rate_code_a(self):
        assert average_rate(builtin_code("A")).r == pytest.approx(2.75)

    def test_direct_rate(self):
        assert average_rate(direct_code(2, 4)).r == pytest.approx(4.0)

    def test_incomplete_code(self, gf8):
        code = OpportunisticCode(
            "short", gf8, ("000", "001", "010", "011", "100", "101", "110", "1110")
        )
        assert not code.complete
        with pytest.raises(IncompleteCodeError):
            average_rate(code)

    @pytest.mark.parametrize(
        "m, expected",
        [
            (2, "3.125"),
            (4, "1.562"),
            (8, "1.042"),
            (16, "0.781"),
            (32, "0.625"),
            (64, "0.521"),
        ],
    )
    def test_h_table(self, m, expected):
        r = average_rate(builtin_code("B")).r
        assert format_h(h_param(r, m)) == expected

    def test_h_bad_constellation(self):
        with pytest.raises(InvalidConstellationSizeError):
            h_param(3.125, 1)

    def test_frame_symbols(self):
        assert frame_symbols(1.5625, 8) == pytest.approx(12.5)
