from decimal import Decimal, getcontext
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from chromaspec import MixedRadicandError, Scalar, ScalarParseError, falling_factorial, scalar_cmp


def to_decimal(s: Scalar) -> Decimal:
    """High-precision numeric oracle, independent of Scalar.sign()."""
    getcontext().prec = 60
    a = Decimal(s.a.numerator) / Decimal(s.a.denominator)
    b = Decimal(s.b.numerator) / Decimal(s.b.denominator)
    return a + b * Decimal(s.d).sqrt()


rationals = st.fractions(min_value=-999, max_value=999, max_denominator=999)


def quad5(a, b):
    return Scalar(a, b, 5)


quads = st.builds(quad5, rationals, rationals)


class TestComparison:
    def test_simple_fractions(self):
        assert scalar_cmp(Fraction(1, 2), Fraction(1, 3)) > 0

    def test_reflexive_on_quadratic(self):
        a = Scalar.parse("3/2+1/2*sqrt(5)")
        assert scalar_cmp(a, a) == 0

    def test_sqrt5_vs_nine_quarters(self):
        # squaring rule: 5 < 81/16, so sqrt(5) < 9/4
        assert Fraction(5) < Fraction(81, 16)
        assert scalar_cmp(Scalar.sqrt_of(5), Fraction(9, 4)) < 0
        # numeric cross-check
        assert to_decimal(Scalar.sqrt_of(5)) < Decimal(9) / Decimal(4)

    def test_mixed_radicands_rejected(self):
        with pytest.raises(MixedRadicandError):
            scalar_cmp(Scalar.sqrt_of(2), Scalar.sqrt_of(5))

    @given(quads, quads)
    def test_sign_matches_decimal_oracle(self, x, y):
        diff = x - y
        numeric = to_decimal(x) - to_decimal(y)
        if numeric == 0:
            assert diff.sign() == 0
        else:
            # 60-digit precision leaves no room for a wrong sign at this scale
            assert diff.sign() == (1 if numeric > 0 else -1)


class TestFieldAxioms:
    @given(quads, quads, quads)
    def test_add_associative_commutative(self, x, y, z):
        assert (x + y) + z == x + (y + z)
        assert x + y == y + x

    @given(quads, quads, quads)
    def test_mul_associative_distributive(self, x, y, z):
        assert (x * y) * z == x * (y * z)
        assert x * (y + z) == x * y + x * z

    @given(quads)
    def test_additive_inverse(self, x):
        assert x + (-x) == 0

    @given(quads)
    def test_multiplicative_inverse(self, x):
        if x:
            assert x * x.inverse() == 1
            assert x / x == 1

    @given(quads, quads)
    def test_sub_mul_round_trip(self, x, y):
        assert (x - y) + y == x
        if y:
            assert (x / y) * y == x

    @given(quads, st.integers(min_value=0, max_value=6))
    def test_power_is_repeated_product(self, x, k):
        prod = Scalar.of(1)
        for _ in range(k):
            prod = prod * x
        assert x**k == prod


class TestCanonicalForm:
    def test_square_factor_extracted(self):
        assert Scalar(Fraction(0), Fraction(1), 8) == Scalar(Fraction(0), Fraction(2), 2)

    def test_perfect_square_radicand_folds(self):
        assert Scalar(Fraction(1), Fraction(3), 4) == 7
        assert Scalar(Fraction(1), Fraction(3), 1) == 4

    def test_zero_b_drops_d(self):
        assert Scalar(Fraction(2), Fraction(0), 5).d == 0

    def test_negative_radicand_rejected(self):
        with pytest.raises(ValueError):
            Scalar(Fraction(0), Fraction(1), -5)

    @given(quads)
    def test_equal_values_equal_hash(self, x):
        y = (x + 7) - 7
        assert x == y and hash(x) == hash(y)

    def test_int_equality_and_hash_agree(self):
        assert Scalar.of(2) == 2 and hash(Scalar.of(2)) == hash(2)
        assert Scalar.sqrt_of(5) != 5


class TestTextFormat:
    @pytest.mark.parametrize(
        "text",
        ["0", "5", "-1", "3/2", "-7/3", "sqrt(5)", "-sqrt(2)", "1/2*sqrt(5)",
         "3/2+1/2*sqrt(5)", "2-sqrt(2)", "-1/3-2/5*sqrt(3)"],
    )
    def test_parse_round_trip(self, text):
        s = Scalar.parse(text)
        assert Scalar.parse(str(s)) == s

    @given(quads)
    def test_format_parse_inverse(self, x):
        assert Scalar.parse(str(x)) == x

    @pytest.mark.parametrize("bad", ["", "1.5", "x", "3/2+", "sqrt(-1)", "1+1", "sqrt(5)+1"])
    def test_rejects_garbage(self, bad):
        with pytest.raises(ScalarParseError):
            Scalar.parse(bad)

    def test_canonical_output(self):
        assert str(Scalar.parse("3/2+1/2*sqrt(5)")) == "3/2+1/2*sqrt(5)"
        assert str(Scalar.parse("2-sqrt(2)")) == "2-sqrt(2)"
        assert str(Scalar.of(Fraction(4, 2))) == "2"


class TestFallingFactorial:
    def test_integer_point(self):
        assert falling_factorial(5, 3) == 60

    def test_half_integer_point(self):
        # direct product oracle: (3/2)(1/2)
        assert falling_factorial(Fraction(3, 2), 2) == Fraction(3, 4)

    def test_vanishing_factor(self):
        assert falling_factorial(2, 3) == 0

    def test_empty_product(self):
        assert falling_factorial(Fraction(7, 9), 0) == 1

    @given(rationals, st.integers(min_value=0, max_value=5))
    def test_matches_direct_product(self, s, m):
        prod = Fraction(1)
        for i in range(m):
            prod *= s - i
        assert falling_factorial(s, m) == prod
