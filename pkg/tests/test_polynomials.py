from fractions import Fraction

from hypothesis import given, strategies as st

from chromaspec import Poly, Scalar, falling_factorial, falling_factorial_poly, poly_eval

X3_MINUS = Poly((0, 2, -3, 1))  # x^3 - 3x^2 + 2x


def test_eval_at_three():
    assert poly_eval(X3_MINUS, 3) == 6


def test_eval_at_minus_one():
    assert poly_eval(X3_MINUS, -1) == -6


def test_eval_at_half():
    assert poly_eval(Poly((0, -1, 1)), Fraction(1, 2)) == Fraction(-1, 4)


def test_eval_at_quadratic_point():
    x = Scalar.parse("3/2+1/2*sqrt(5)")
    # x^2 - x at the golden-ratio-squared point, worked by hand: x(x-1)
    assert poly_eval(Poly((0, -1, 1)), x) == x * (x - 1)


small_polys = st.builds(
    lambda cs: Poly(tuple(cs)), st.lists(st.integers(-9, 9), max_size=5)
)
points = st.fractions(min_value=-99, max_value=99, max_denominator=99)


@given(small_polys, small_polys, points)
def test_eval_is_ring_homomorphism(p, r, s):
    assert poly_eval(p * r, s) == poly_eval(p, s) * poly_eval(r, s)
    assert poly_eval(p + r, s) == poly_eval(p, s) + poly_eval(r, s)


@given(small_polys, st.integers(-5, 5), points)
def test_shift_argument(p, m, s):
    assert poly_eval(p.shift_argument(m), s) == poly_eval(p, Fraction(s) - m)


@given(st.integers(0, 6), points)
def test_falling_factorial_poly_matches_scalar(m, s):
    assert poly_eval(falling_factorial_poly(m), s) == falling_factorial(s, m)


def test_degree_and_trim():
    assert Poly((0, 1, 0, 0)).degree == 1
    assert Poly(()).is_zero() and Poly((0, 0)).is_zero()
    assert Poly.zero().degree == -1


def test_str():
    assert str(X3_MINUS) == "x^3 - 3*x^2 + 2*x"
    assert str(Poly.zero()) == "0"
    assert str(Poly((-1, 1))) == "x - 1"
