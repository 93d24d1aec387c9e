"""
GdmaLab 调制解调单元测试

星座几何、Gray 标签、AWGN 与理论误符号率。
"""

import math

import numpy as np
import pytest

from src.exceptions import (
    InvalidConstellationSizeError,
    InvalidProbabilityError,
    NegativeSnrError,
    UnknownConstellationError,
)
from src.modem.channel import ChannelConfig, awgn, db_to_linear, linear_to_db, noise_density
from src.modem.constellations import (
    available_constellations,
    get_constellation,
    gray,
    psk,
    square_qam,
)
from src.modem.modulation import (
    as_bit_array,
    bits_to_str,
    demodulate,
    modulate,
    modulate_frame,
    padding_for,
)
from src.modem.selftest import modem_selftest, selftest_csv
from src.modem.theory import q_function, theoretical_ser
from src.simulation.statistics import binomial_sigma, confidence_interval, z_score


class TestConstellations:
    """测试星座构造"""

    def test_registry(self):
        assert available_constellations() == ["bpsk", "qpsk", "8psk", "16qam", "32qam", "64qam"]

    @pytest.mark.parametrize("name", ["bpsk", "qpsk", "8psk", "16qam", "32qam", "64qam"])
    def test_unit_energy(self, name):
        assert get_constellation(name).average_energy == pytest.approx(1.0)

    @pytest.mark.parametrize("name, k", [("bpsk", 1), ("qpsk", 2), ("8psk", 3), ("32qam", 5)])
    def test_bits_per_symbol(self, name, k):
        assert get_constellation(name).bits_per_symbol == k

    @pytest.mark.parametrize("name", ["qpsk", "8psk", "16qam", "64qam"])
    def test_gray_labels(self, name):
        assert get_constellation(name).is_gray()

    def test_aliases(self):
        assert get_constellation("16-QAM") is get_constellation("16qam")
        assert get_constellation("2psk").name == "bpsk"

    def test_unknown(self):
        with pytest.raises(UnknownConstellationError):
            get_constellation("256qam")

    def test_bad_size(self):
        with pytest.raises(InvalidConstellationSizeError):
            psk(6)
        with pytest.raises(InvalidConstellationSizeError):
            square_qam(32)

    def test_cross_qam_shape(self):
        qam32 = get_constellation("32qam")
        assert qam32.size == 32
        assert len(set(qam32.labels)) == 32
        assert qam32.min_distance == pytest.approx(2.0 / math.sqrt(20.0))

    def test_gray_function(self):
        assert [gray(n) for n in range(4)] == [0, 1, 3, 2]


class TestModulation:
    """测试调制与解调"""

    def test_bpsk_mapping(self):
        samples = modulate("01", get_constellation("bpsk"))
        assert np.allclose(samples, [1.0, -1.0])

    def test_padding(self):
        qpsk = get_constellation("qpsk")
        samples, pad = modulate_frame("10110", qpsk)
        assert pad == 1
        assert samples.size == 3
        assert padding_for(6, get_constellation("8psk")) == 0

    @pytest.mark.parametrize("name", ["bpsk", "qpsk", "8psk", "16qam", "32qam", "64qam"])
    def test_noiseless_roundtrip(self, name, rng):
        constellation = get_constellation(name)
        bits = rng.integers(0, 2, size=constellation.bits_per_symbol * 50)
        assert np.array_equal(demodulate(modulate(bits, constellation), constellation), bits)

    def test_empty_input(self):
        bpsk = get_constellation("bpsk")
        assert modulate("", bpsk).size == 0
        assert demodulate(np.zeros(0), bpsk).size == 0

    def test_bit_helpers(self):
        assert list(as_bit_array("1 0 1")) == [1, 0, 1]
        assert bits_to_str(np.array([0, 1, 1])) == "011"


class TestChannel:
    """测试 AWGN 信道"""

    def test_db_conversions(self):
        assert db_to_linear(10.0) == pytest.approx(10.0)
        assert db_to_linear(float("inf")) == math.inf
        assert linear_to_db(100.0) == pytest.approx(20.0)
        assert linear_to_db(0.0) == -math.inf

    def test_noise_density(self):
        assert noise_density(4.0) == pytest.approx(0.25)
        assert noise_density(math.inf) == 0.0

    def test_noiseless_copy(self, rng):
        samples = np.array([1 + 1j, -1 - 1j])
        out = awgn(samples, 0.0, rng)
        assert np.array_equal(out, samples)
        assert out is not samples

    def test_noise_variance(self, rng):
        """每个实维度方差 N0/2"""
        noise = awgn(np.zeros(200_000), 0.5, rng)
        assert np.var(noise.real) == pytest.approx(0.25, rel=0.02)
        assert np.var(noise.imag) == pytest.approx(0.25, rel=0.02)

    def test_channel_config(self):
        config = ChannelConfig(ebn0_db=3.0, seed=1)
        assert config.n0(esn0_per_ebn0=2.0) == pytest.approx(1.0 / (2.0 * db_to_linear(3.0)))
        assert config.rng().integers(0, 100) == np.random.default_rng(1).integers(0, 100)


class TestTheory:
    """测试理论误符号率"""

    def test_q_function(self):
        assert float(q_function(0.0)) == pytest.approx(0.5)
        assert float(q_function(1.0)) == pytest.approx(0.158655, abs=1e-6)

    def test_bpsk_value(self):
        """Es/N0 = 4.32 dB 附近 BPSK 误符号率约为 1e-2"""
        assert theoretical_ser(get_constellation("bpsk"), db_to_linear(4.32)) == pytest.approx(
            1e-2, rel=0.02
        )

    def test_infinite_snr(self):
        assert theoretical_ser(get_constellation("16qam"), math.inf) == 0.0

    def test_negative_snr(self):
        with pytest.raises(NegativeSnrError):
            theoretical_ser(get_constellation("bpsk"), -1.0)

    @pytest.mark.parametrize("name", ["bpsk", "qpsk", "16qam", "64qam"])
    def test_exact_formulas_match_simulation(self, name):
        """闭式公式与仿真相差不超过 4σ"""
        rows = modem_selftest((0.0, 4.0, 8.0), n_symbols=100_000, seed=3, modulations=[name])
        for row in rows:
            sigma = binomial_sigma(row.theoretical_ser, row.symbols)
            assert abs(row.simulated_ser - row.theoretical_ser) <= 4 * sigma + 1e-6

    def test_approximate_formulas_at_high_snr(self):
        """8PSK 与十字 32-QAM 的近似式在高信噪比下贴合仿真"""
        (row,) = modem_selftest((12.0,), n_symbols=200_000, seed=5, modulations=["8psk"])
        assert row.simulated_ser == pytest.approx(row.theoretical_ser, rel=0.1)
        (row,) = modem_selftest((18.0,), n_symbols=200_000, seed=5, modulations=["32qam"])
        assert row.theoretical_ser / 1.5 <= row.simulated_ser <= row.theoretical_ser * 1.5

    def test_selftest_csv(self):
        rows = modem_selftest((6.0,), n_symbols=2_000, seed=0, modulations=["bpsk"])
        lines = selftest_csv(rows).splitlines()
        assert lines[0].startswith("modulation,esn0_db,symbols,symbol_errors")
        assert lines[1].startswith("bpsk,6.00,2000,")


class TestStatistics:
    """测试 Wilson 区间"""

    def test_z_score(self):
        assert z_score(0.95) == pytest.approx(1.959964, abs=1e-6)

    def test_bad_confidence(self):
        with pytest.raises(InvalidProbabilityError):
            z_score(1.0)

    def test_wilson_interval(self):
        low, high = confidence_interval(10, 100)
        assert low == pytest.approx(0.0552, abs=1e-4)
        assert high == pytest.approx(0.1744, abs=1e-4)

    def test_zero_errors(self):
        low, high = confidence_interval(0, 10**6)
        assert low == 0.0
        assert 0.0 < high < 1e-5

    def test_all_errors(self):
        low, high = confidence_interval(50, 50)
        assert high == 1.0
        assert low < 1.0

    def test_no_trials(self):
        with pytest.raises(InvalidProbabilityError):
            confidence_interval(0, 0)
