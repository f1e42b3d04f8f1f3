"""Exact polynomial / rational function arithmetic."""

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from qmult.exact import (
    NotExpandableError,
    Polynomial,
    RationalFunction,
    format_rational,
    leading_term,
    nonnegative_on_ray,
    parse_rational,
    poly_arith,
    poly_shift,
    series_coefficients,
)

T = Polynomial.t()


def poly(*coeffs):
    return Polynomial(tuple(Fraction(c) for c in coeffs))


rationals = st.fractions(min_value=-50, max_value=50, max_denominator=8)
polynomials = st.lists(rationals, max_size=7).map(lambda cs: Polynomial(tuple(cs)))


class TestPolynomial:
    def test_product_difference_of_squares(self):
        assert (T + 1) * (T - 1) == poly(-1, 0, 1)

    def test_zero_plus_zero_has_degree_minus_one(self):
        zero = poly_arith(Polynomial(), Polynomial(), "add")
        assert zero.degree == -1
        assert zero.is_zero()

    def test_product_checked_by_evaluation(self):
        # (2t+1)(2t+2) = 4t^2 + 6t + 2, confirmed at three points.
        product = poly_arith(poly(1, 2), poly(2, 2), "mul")
        assert product == poly(2, 6, 4)
        for x in (0, 1, 7):
            assert product(x) == (2 * x + 1) * (2 * x + 2)

    def test_trailing_zeros_trimmed(self):
        assert poly(1, 2, 0, 0) == poly(1, 2)
        assert poly(1, 2, 0, 0).degree == 1

    def test_pow_matches_repeated_multiplication(self):
        p = poly(1, 1)
        assert p**3 == p * p * p
        assert p**0 == poly(1)

    @given(polynomials)
    def test_shift_by_zero_is_identity(self, g):
        assert poly_shift(g, 0) == g

    @given(polynomials, rationals, rationals)
    def test_shift_composes_additively(self, g, a, b):
        assert poly_shift(poly_shift(g, a), b) == poly_shift(g, a + b)

    def test_shift_square(self):
        assert poly_shift(poly(0, 0, 1), 1) == poly(1, 2, 1)

    def test_shift_difference_drops_degree(self):
        g = T
        assert poly_shift(g, 1) - g == poly(1)

    def test_shift_linear_checked_at_two_points(self):
        shifted = poly_shift(poly(1, 2), 1)
        assert shifted == poly(3, 2)
        for x in (0, 1):
            assert shifted(x) == 2 * (x + 1) + 1


class TestLeadingTerm:
    def test_linear(self):
        assert leading_term(poly(1, 4)) == (1, 4)

    def test_zero(self):
        assert leading_term(Polynomial()) == (-1, 0)

    def test_fractional_leading_coefficient(self):
        g = Polynomial((Fraction(0), Fraction(-1), Fraction(0), Fraction(1, 2)))
        assert leading_term(g) == (3, Fraction(1, 2))


class TestSeriesCoefficients:
    def test_inverse_cube_binomials(self):
        f = RationalFunction(poly(1), poly(1, -1) ** 3)
        assert series_coefficients(f, 4) == [1, 3, 6, 10, 15]

    def test_even_support_family(self):
        f = RationalFunction(poly(0, 0, 1), poly(1, 0, -1) ** 2)
        assert series_coefficients(f, 8) == [0, 0, 1, 0, 2, 0, 3, 0, 4]

    def test_zero_numerator(self):
        f = RationalFunction(Polynomial(), poly(1, -1))
        assert series_coefficients(f, 5) == [0] * 6

    def test_zero_constant_denominator_rejected(self):
        with pytest.raises(NotExpandableError):
            RationalFunction(poly(1), poly(0, 1))

    @given(polynomials, polynomials, st.integers(min_value=0, max_value=200))
    def test_remultiplication_recovers_numerator(self, p, q, n_max):
        if q.coefficient(0) == 0:
            q = q + 1
        f = RationalFunction(p, q)
        coeffs = series_coefficients(f, n_max)
        product = Polynomial(tuple(coeffs)) * f.den
        assert all(
            product.coefficient(j) == f.num.coefficient(j) for j in range(n_max + 1)
        )


class TestRationalFunction:
    def test_equality_by_cross_multiplication(self):
        a = RationalFunction(poly(0, 1), poly(1, -1))
        b = RationalFunction(poly(0, 2), poly(2, -2))
        assert a == b

    def test_equality_with_common_factor(self):
        # t/(1-t) vs t(1+t)/((1-t)(1+t)): equal without any gcd computation.
        a = RationalFunction(poly(0, 1), poly(1, -1))
        b = RationalFunction(poly(0, 1) * poly(1, 1), poly(1, -1) * poly(1, 1))
        assert a == b

    def test_division_by_zero_constant_term_rejected(self):
        a = RationalFunction.const(1)
        b = RationalFunction(poly(0, 1), poly(1))
        with pytest.raises(NotExpandableError):
            a / b

    def test_denominator_normalized_to_unit_constant_term(self):
        f = RationalFunction(poly(4), poly(2, 2))
        assert f.den.coefficient(0) == 1
        assert f.num == poly(2)


class TestRationalSerialization:
    def test_format_integer(self):
        assert format_rational(Fraction(5)) == "5"

    def test_format_fraction(self):
        assert format_rational(Fraction(-2, 3)) == "-2/3"

    def test_parse_both_forms(self):
        assert parse_rational("5") == 5
        assert parse_rational("5/1") == 5
        assert parse_rational("-6/4") == Fraction(-3, 2)

    @given(rationals)
    def test_round_trip(self, q):
        assert parse_rational(format_rational(q)) == q


class TestNonnegativeOnRay:
    def test_eventually_positive(self):
        # t^2 - 10t: negative at small positive t, nonnegative from 10 on.
        p = poly(0, -10, 1)
        assert nonnegative_on_ray(p, 10, 1) is None
        assert nonnegative_on_ray(p, 1, 1) is not None

    def test_eventually_negative_reports_witness(self):
        p = poly(0, 0, -1)
        bad = nonnegative_on_ray(p, 0, 1)
        assert bad is not None and p(bad) < 0

    def test_negative_direction(self):
        p = poly(0, -1)  # -t: nonnegative for t <= 0
        assert nonnegative_on_ray(p, 0, -1) is None
        assert nonnegative_on_ray(p, 5, -1) is not None

    def test_zero_polynomial(self):
        assert nonnegative_on_ray(Polynomial(), 0, 1) is None
