"""Tests for monomials."""

import pytest

from symbolique.config import MAX_EXPONENT
from symbolique.core.monomial import Monomial, grlex_key
from symbolique.exceptions import MixedAmbientError, ParameterOutOfRangeError
from tests.conftest import mono


class TestArithmetic:
    """Tests for divisibility, lcm and products."""

    def test_lcm(self):
        assert mono("ab", 3).lcm(mono("bc", 3)) == mono("abc", 3)

    def test_gcd(self):
        assert mono("a^2b", 3).gcd(mono("ab^3c", 3)) == mono("ab", 3)

    def test_divides(self):
        assert mono("ab", 2).divides(mono("a^2b", 2))
        assert not mono("a^2b", 2).divides(mono("ab", 2))

    def test_product_and_power(self):
        assert mono("ab", 3) * mono("bc", 3) == mono("ab^2c", 3)
        assert mono("ab", 2) ** 3 == mono("a^3b^3", 2)

    def test_exact_division(self):
        assert mono("a^2bc", 3) / mono("ac", 3) == mono("ab", 3)
        with pytest.raises(ParameterOutOfRangeError):
            mono("ab", 3) / mono("c", 3)

    def test_mixed_ambient(self):
        with pytest.raises(MixedAmbientError):
            mono("ab", 2).lcm(mono("ab", 3))


class TestProperties:
    """Tests for degree, support and squarefreeness."""

    def test_support(self):
        assert mono("a^2c", 3).support == 0b101

    def test_degree(self):
        assert mono("a^2c", 3).degree == 3

    def test_squarefree(self):
        assert mono("abc", 3).is_squarefree()
        assert not mono("a^2", 3).is_squarefree()

    def test_one(self):
        assert Monomial.one(4).is_one()
        assert Monomial.one(4).degree == 0

    def test_from_support(self):
        assert Monomial.from_support(0b1010, 4) == mono("bd", 4)

    def test_exponent_range(self):
        Monomial((MAX_EXPONENT,))
        with pytest.raises(ParameterOutOfRangeError):
            Monomial((MAX_EXPONENT + 1,))
        with pytest.raises(ParameterOutOfRangeError):
            Monomial((-1, 0))


class TestFormatting:
    """Tests for human-readable output."""

    def test_letters(self):
        assert mono("a^2bc", 3).format() == "a^2bc"

    def test_indexed(self):
        m = Monomial((2, 1) + (0,) * 25)
        assert m.format() == "x1^2*x2"

    def test_one(self):
        assert str(Monomial.one(3)) == "1"


def test_grlex_order():
    squares = [mono("b^2", 2), mono("ab", 2), mono("a^2", 2), mono("a", 2)]
    ordered = sorted(squares, key=grlex_key)
    assert ordered == [mono("a", 2), mono("a^2", 2), mono("ab", 2), mono("b^2", 2)]
