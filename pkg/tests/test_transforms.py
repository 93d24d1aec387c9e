"""
GdmaLab 变换单元测试

FFFT / FFHT 的正逆变换、线性与共轭性质。
"""

import numpy as np
import pytest

from src.exceptions import (
    ElementOutOfRangeError,
    EvenCharacteristicError,
    LengthMismatchError,
    NonInvertibleLengthError,
    SingularKernelMatrixError,
)
from src.fields.extension import ExtensionField
from src.fields.gaussian import GaussianField
from src.transforms.fourier import FourierTransform, ffft, fourier_transform, iffft
from src.transforms.hartley import CasKernel, ffht, iffht
from src.transforms.linear import (
    IdentityTransform,
    field_matmul,
    identity_matrix,
    invert_matrix,
)
from src.transforms.signals import Signal, Spectrum


class TestSignals:
    """测试 Signal / Spectrum 值对象"""

    def test_values_read_only(self, gf16):
        s = Signal([1, 0, 1], gf16)
        with pytest.raises(ValueError):
            s.values[0] = 0

    def test_decided_maps_out_of_subfield_to_zero(self, gf16):
        s = Signal([1, 5, 0, 3], gf16)
        assert not s.is_ground()
        assert list(s.out_of_subfield()) == [False, True, False, True]
        assert list(s.decided()) == [1, 0, 0, 0]

    def test_spectrum_weight_and_labels(self, gf16):
        spectrum = Spectrum([0, 2, 0, 8], gf16)
        assert spectrum.weight() == 2
        assert spectrum.power_labels() == ["0", "α", "0", "α³"]


class TestLinear:
    """测试域上矩阵运算"""

    def test_matmul_identity(self, gf16, rng):
        batch = rng.integers(0, 16, size=(4, 5))
        out = field_matmul(gf16, batch, identity_matrix(5))
        assert np.array_equal(out, batch)

    def test_invert_matrix(self, gf9):
        matrix = np.array([[1, 2], [0, 3]])
        inverse = invert_matrix(gf9, matrix)
        assert np.array_equal(field_matmul(gf9, matrix, inverse), identity_matrix(2))

    def test_singular_matrix(self, gf9):
        with pytest.raises(SingularKernelMatrixError):
            invert_matrix(gf9, np.array([[1, 1], [1, 1]]))

    def test_identity_transform(self, gf16):
        transform = IdentityTransform(gf16, 4)
        assert list(transform.forward([1, 0, 1, 1])) == [1, 0, 1, 1]
        with pytest.raises(LengthMismatchError):
            transform.forward([1, 0])


class TestFourier:
    """测试 FFFT"""

    def test_all_ones_signal(self, gf16):
        """全 1 信号：V_0 = 15 mod 2 = 1，其余为 0"""
        spectrum = ffft([1] * 15, gf16)
        assert list(spectrum.values) == [1] + [0] * 14

    def test_impulse_signal(self, gf16):
        """单位冲激的频谱为全 1"""
        spectrum = ffft([1] + [0] * 14, gf16)
        assert list(spectrum.values) == [1] * 15

    def test_roundtrip(self, gf16, rng):
        for _ in range(20):
            v = rng.integers(0, 2, size=15)
            assert np.array_equal(iffft(ffft(v, gf16)).values, v)

    def test_roundtrip_gf9(self, gf9, rng):
        v = rng.integers(0, 3, size=8)
        assert np.array_equal(iffft(ffft(v, gf9)).values, v)

    def test_linearity(self, gf16, fourier15, rng):
        a = rng.integers(0, 2, size=15)
        b = rng.integers(0, 2, size=15)
        lhs = fourier15.forward((a + b) % 2)
        rhs = gf16.add_table[fourier15.forward(a), fourier15.forward(b)]
        assert np.array_equal(lhs, rhs)

    def test_conjugacy_of_ground_signals(self, gf16, fourier15, rng):
        """V_{2k mod 15} = V_k²"""
        v = rng.integers(0, 2, size=15)
        spectrum = fourier15.forward(v)
        for k in range(15):
            assert spectrum[(2 * k) % 15] == gf16.power_value(int(spectrum[k]), 2)

    def test_shorter_kernel(self, gf16):
        """α³ 的阶为 5，得到长度 5 的变换"""
        transform = FourierTransform(gf16, gf16.alpha_power(3))
        assert transform.length == 5
        v = np.array([1, 0, 1, 1, 0])
        assert np.array_equal(transform.inverse(transform.forward(v)), v)

    def test_non_invertible_length(self):
        """N = 3 与 p = 3 不互素"""
        gf9 = ExtensionField(3, 2, (1, 2, 2))
        with pytest.raises(NonInvertibleLengthError):
            iffft(Spectrum([1, 2, 0], gf9))

    def test_length_mismatch(self, gf16):
        with pytest.raises(LengthMismatchError):
            ffft([1, 0, 1], gf16)

    def test_non_ground_input(self, gf16):
        with pytest.raises(ElementOutOfRangeError):
            ffft([2] + [0] * 14, gf16)

    def test_cached_instance(self, gf16):
        assert fourier_transform(gf16) is fourier_transform(gf16)


class TestHartley:
    """测试 FFHT"""

    def test_kernel_length(self, cas8):
        assert cas8.length == 8
        assert cas8.cas(0).value == 1

    def test_cas_is_cos_plus_sin(self, cas8):
        for i in range(8):
            assert cas8.cas(i) == cas8.cos(i) + cas8.sin(i)

    def test_self_inverse(self, gi3, hartley8):
        """M·M = N·I"""
        square = field_matmul(gi3, hartley8.forward_matrix, hartley8.forward_matrix)
        assert hartley8.self_inverse
        assert np.array_equal(square, identity_matrix(8) * (8 % 3))

    def test_roundtrip(self, cas8, rng):
        for _ in range(20):
            v = rng.integers(0, 3, size=8)
            assert np.array_equal(iffht(ffht(v, cas8), cas8).values, v)

    def test_conjugacy_uses_minus_p(self, gi3, hartley8, rng):
        """GF(3) 信号满足 H_{-3k mod 8} = H_k³"""
        v = rng.integers(0, 3, size=8)
        spectrum = hartley8.forward(v)
        cube = gi3.power_table(3)
        for k in range(8):
            assert spectrum[(-3 * k) % 8] == cube[spectrum[k]]

    def test_kernel_order_mismatch(self, gi3):
        with pytest.raises(LengthMismatchError):
            CasKernel(gi3, n=4, zeta=gi3.generator)

    def test_length_mismatch(self, cas8):
        with pytest.raises(LengthMismatchError):
            ffht([1, 2, 0], cas8)

    def test_non_ground_input(self, cas8):
        with pytest.raises(ElementOutOfRangeError):
            ffht([4] + [0] * 7, cas8)

    def test_even_characteristic_rejected(self):
        with pytest.raises(EvenCharacteristicError):
            CasKernel(GaussianField(2), n=3)
