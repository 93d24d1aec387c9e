"""
GdmaLab 高斯整数域单元测试
"""

import numpy as np
import pytest

from src.exceptions import (
    DivisionByZeroError,
    ElementOutOfRangeError,
    EvenCharacteristicError,
    FieldMismatchError,
    MinusOneIsResidueError,
    NonPrimeModulusError,
    ZeroElementError,
)
from src.fields.gaussian import (
    GaussianField,
    format_power,
    gaussian_power_table,
    gi_find_generator,
    gi_inv,
    gi_order,
    validate_gaussian_field,
)


class TestConstruction:
    """测试 GI(q) 构造条件"""

    def test_gi3_ok(self, gi3):
        assert gi3.order == 9
        assert repr(gi3) == "GI(3)"

    def test_gi7_ok(self):
        assert validate_gaussian_field(7).order == 49

    def test_minus_one_residue(self):
        """GF(5) 中 2² = -1"""
        with pytest.raises(MinusOneIsResidueError):
            GaussianField(5)

    def test_even_characteristic(self):
        with pytest.raises(EvenCharacteristicError):
            GaussianField(2)

    def test_non_prime(self):
        with pytest.raises(NonPrimeModulusError):
            GaussianField(9)


class TestArithmetic:
    """测试高斯整数运算"""

    def test_encoding(self, gi3):
        e = gi3.element(1, 2)
        assert e.value == 1 + 3 * 2
        assert gi3.element(7) == e

    def test_out_of_range(self, gi3):
        with pytest.raises(ElementOutOfRangeError):
            gi3.element(3, 0)
        with pytest.raises(ElementOutOfRangeError):
            gi3.element(9)

    def test_j_squared_is_minus_one(self, gi3):
        assert gi3.j * gi3.j == -gi3.one

    def test_conjugate_and_norm(self, gi3):
        e = gi3.element(1, 1)
        assert e.conjugate() == gi3.element(1, 2)
        assert e.norm() == 2
        assert (e * e.conjugate()).im == 0

    def test_every_nonzero_element_invertible(self, gi3):
        for e in gi3.elements()[1:]:
            assert e * gi_inv(e) == gi3.one

    def test_inverse_of_zero(self, gi3):
        with pytest.raises(DivisionByZeroError):
            gi3.zero.inverse()

    def test_negative_power(self, gi3):
        xi = gi3.element(1, 1)
        assert xi**-1 == xi.inverse()
        assert xi**-3 * xi**3 == gi3.one

    def test_scalar_multiplication(self, gi3):
        assert gi3.element(1, 2) * 2 == gi3.element(2, 1)

    def test_field_mismatch(self, gi3):
        with pytest.raises(FieldMismatchError):
            gi3.one + GaussianField(7).one

    def test_order_of_zero(self, gi3):
        with pytest.raises(ZeroElementError):
            gi_order(gi3.zero)

    def test_tables_match_objects(self, gi3):
        """查表乘法与对象乘法一致"""
        for a in gi3.elements():
            for b in gi3.elements():
                assert gi3.mul_table[a.value, b.value] == (a * b).value
                assert gi3.add_table[a.value, b.value] == (a + b).value


class TestPowers:
    """测试生成元与幂表"""

    def test_generator_is_one_plus_j(self, gi3):
        assert gi_find_generator(gi3) == gi3.element(1, 1)
        assert gi3.generator.order() == 8

    def test_power_table_gi3(self, gi3):
        powers = [str(x) for x in gaussian_power_table(gi3)]
        assert powers == ["1", "1+j", "2j", "1+2j", "2", "2+2j", "j", "2+j"]

    def test_powers_cover_units(self, gi3):
        values = {x.value for x in gaussian_power_table(gi3)}
        assert values == set(range(1, 9))

    def test_power_labels(self, gi3):
        assert gi3.element(2, 0).power_label() == "ξ⁴"
        assert gi3.generator.power_label() == "ξ"
        assert format_power(0) == "ξ⁰"

    def test_element_of_order(self, gi3):
        assert gi3.element_of_order(4).order() == 4
        assert gi3.element_of_order(8) == gi3.generator

    def test_gi7_group_is_cyclic(self):
        gi7 = GaussianField(7)
        assert gi7.generator.order() == 48
        logs = gi7.log_table[1:]
        assert np.all(logs >= 0)
        assert len(set(logs.tolist())) == 48
