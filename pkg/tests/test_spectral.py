"""
GdmaLab 频谱模块单元测试

分圆陪集、压缩/还原、香农界与有效频谱码。
"""

from fractions import Fraction

import numpy as np
import pytest

from src.exceptions import (
    EnumerationTooLargeError,
    InvalidProbabilityError,
    InvalidSpectrumError,
    LengthMismatchError,
    NegativeSnrError,
    NonCoprimeLengthError,
    NonPositiveDurationError,
)
from src.link.bounds import frame_error_bound
from src.spectral.bounds import (
    check_bound,
    link_budget,
    minimum_snr,
    rate_within_capacity,
    shannon_bound,
)
from src.spectral.code_analysis import enumerate_valid_spectra, spectral_code_analysis
from src.spectral.cyclotomic import (
    compress,
    compress_batch,
    conjugacy_holds,
    cosets,
    expand,
    expand_batch,
    find_conjugacy_rule,
    format_cosets,
    format_gamma,
    gamma_cc,
)
from src.transforms.fourier import ffft
from src.transforms.signals import Spectrum


class TestCosets:
    """测试分圆陪集"""

    def test_cosets_15_2(self):
        partition = cosets(15, 2)
        assert partition.cosets == (
            (0,),
            (1, 2, 4, 8),
            (3, 6, 12, 9),
            (5, 10),
            (7, 14, 13, 11),
        )
        assert partition.leaders == (0, 1, 3, 5, 7)
        assert partition.nu == 5
        assert gamma_cc(partition) == 3

    def test_cosets_partition_everything(self):
        for n, p in [(7, 2), (8, 3), (26, 3), (24, 5)]:
            partition = cosets(n, p)
            members = sorted(k for c in partition.cosets for k in c)
            assert members == list(range(n))

    def test_gamma_is_exact(self):
        """N=8, p=3：乘子 3 时 ν = 5，乘子 -3 时 ν = 6"""
        assert cosets(8, 3).gamma_cc == Fraction(8, 5)
        assert cosets(8, 3, multiplier=-3).gamma_cc == Fraction(4, 3)

    def test_coset_of(self):
        assert cosets(15, 2).coset_of(12) == (3, 6, 12, 9)

    def test_non_coprime(self):
        with pytest.raises(NonCoprimeLengthError):
            cosets(6, 2)

    def test_format(self):
        text = format_cosets(cosets(15, 2))
        assert text.splitlines()[0] == "C0 = (0)"
        assert "C1 = (1, 2, 4, 8)" in text
        assert text.splitlines()[-2:] == ["nu = 5", "gamma_cc = 15/5 = 3"]

    def test_format_gamma(self):
        assert format_gamma(Fraction(3)) == "3"
        assert format_gamma(Fraction(4, 3)) == "1.33333"


class TestCompression:
    """测试压缩与还原"""

    def test_roundtrip(self, gf16, rng):
        partition = cosets(15, 2)
        for _ in range(20):
            spectrum = ffft(rng.integers(0, 2, size=15), gf16)
            compressed = compress(spectrum, partition, strict=True)
            assert len(compressed) == 5
            assert expand(compressed) == spectrum

    def test_batch_roundtrip(self, gf16, fourier15, rng):
        partition = cosets(15, 2)
        spectra = fourier15.forward(rng.integers(0, 2, size=(64, 15)))
        rebuilt = expand_batch(gf16, compress_batch(spectra, partition), partition)
        assert np.array_equal(rebuilt, spectra)
        assert np.all(conjugacy_holds(gf16, spectra, partition))

    def test_strict_rejects_invalid_spectrum(self, gf16):
        values = [0] * 15
        values[2] = 1  # V_1 = 0 但 V_2 = 1
        with pytest.raises(InvalidSpectrumError):
            compress(Spectrum(values, gf16), cosets(15, 2), strict=True)

    def test_length_mismatch(self, gf16):
        with pytest.raises(LengthMismatchError):
            compress(Spectrum([0] * 7, gf16), cosets(15, 2))

    def test_leader_error_spreads_over_coset(self, gf16, fourier15):
        """首元 V_1 出错只影响陪集 {1, 2, 4, 8} 的位置"""
        partition = cosets(15, 2)
        spectrum = fourier15.forward(np.ones(15, dtype=np.int64))
        leaders = compress_batch(spectrum, partition).copy()
        leaders[1] = gf16.add_table[leaders[1], gf16.alpha.value]
        rebuilt = expand_batch(gf16, leaders, partition)
        changed = set(np.nonzero(rebuilt != spectrum)[0].tolist())
        assert changed == {1, 2, 4, 8}


class TestConjugacyRule:
    """测试共轭规则搜索"""

    def test_fourier_uses_p(self, fourier15):
        partition = find_conjugacy_rule(fourier15)
        assert partition.multiplier == 2
        assert partition.nu == 5

    def test_hartley_uses_minus_p(self, hartley8):
        """FFHT N=8, p=3：规则 k -> -3k，ν = 6"""
        partition = find_conjugacy_rule(hartley8)
        assert partition.multiplier == 5
        assert partition.nu == 6
        assert partition.gamma_cc == Fraction(4, 3)

    def test_hartley_expand_roundtrip(self, gi3, hartley8, rng):
        partition = find_conjugacy_rule(hartley8)
        spectra = hartley8.forward(rng.integers(0, 3, size=(32, 8)))
        rebuilt = expand_batch(gi3, compress_batch(spectra, partition), partition)
        assert np.array_equal(rebuilt, spectra)


class TestBounds:
    """测试香农界与链路预算"""

    def test_shannon_bound(self):
        assert shannon_bound(7, 2) == pytest.approx(3.0)
        assert shannon_bound(8, 3) == pytest.approx(2.0)

    def test_negative_snr(self):
        with pytest.raises(NegativeSnrError):
            shannon_bound(-1, 2)

    def test_minimum_snr(self):
        assert minimum_snr(3, 2) == pytest.approx(7.0)

    def test_check_bound(self):
        report = check_bound(3, 7, 2, n_users=15, symbol_duration=1.0)
        assert report.satisfied
        assert report.min_snr_db == pytest.approx(8.451, abs=1e-3)
        assert report.rate_bits_per_s == pytest.approx(7.5)
        assert report.bandwidth_hz == pytest.approx(2.5)

    def test_check_bound_unsatisfied(self):
        report = check_bound(3, 6.5, 2)
        assert not report.satisfied
        assert report.rate_bits_per_s is None

    def test_link_budget(self):
        assert link_budget(15, 2, 1.0, 3) == pytest.approx((7.5, 2.5))

    def test_link_budget_bad_duration(self):
        with pytest.raises(NonPositiveDurationError):
            link_budget(15, 2, 0.0, 3)

    def test_rate_within_capacity(self):
        """γ 恰好在界上时 R = W·log₂(1 + SNR)"""
        rate, bandwidth = link_budget(15, 2, 1.0, 3)
        assert rate_within_capacity(rate, bandwidth, 7.0)
        assert not rate_within_capacity(rate, bandwidth, 6.0)

    def test_frame_error_bound(self):
        assert frame_error_bound(8, 1.042, 1e-3) == pytest.approx(0.008336)
        assert frame_error_bound(15, 3.125, 0.5) == 1.0
        assert frame_error_bound(15, 3.125, 0.0) == 0.0

    def test_frame_error_bound_bad_probability(self):
        with pytest.raises(InvalidProbabilityError):
            frame_error_bound(8, 1.0, 1.5)
        with pytest.raises(InvalidProbabilityError):
            frame_error_bound(8, 1.0, float("nan"))


class TestSpectralCode:
    """测试有效频谱码"""

    def test_gf8_code(self, gf8):
        """GF(8), N = 7：(7, 128, 1)，最小重量码字来自全 1 输入"""
        report = spectral_code_analysis(enumerate_valid_spectra(gf8))
        assert report.parameters == "(7, 128, 1)"
        assert report.linear
        assert report.linear_check == "exhaustive"
        assert list(report.witness_input) == [1] * 7
        assert list(report.witness_spectrum) == [1] + [0] * 6

    def test_shorter_length(self, gf16):
        report = spectral_code_analysis(enumerate_valid_spectra(gf16, n=5))
        assert report.size == 32
        assert report.linear

    def test_too_large(self, gf16):
        with pytest.raises(EnumerationTooLargeError):
            enumerate_valid_spectra(gf16, limit=1000)
