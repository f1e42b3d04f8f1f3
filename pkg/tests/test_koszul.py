"""Koszul reduction, chains, triangles, and the multiplicity axioms."""

from fractions import Fraction

import pytest

from qmult.exact import Polynomial
from qmult.koszul import (
    KoszulError,
    axioms_check,
    koszul_triangle,
    reduce,
    reduce_chain,
)
from qmult.lengths import LengthFunction, QuasiPolynomial, Tail, from_series
from qmult.multiplicity import (
    MultiplicityError,
    euler_characteristic,
    multiplicity_neg,
    multiplicity_pos,
)
from qmult.series import parse_series


def poly(*coeffs):
    return Polynomial(tuple(Fraction(c) for c in coeffs))


def xy_fixture(r):
    values = tuple(r if n >= 2 and n % 2 == 0 else 0 for n in range(-2, 13))
    return LengthFunction(
        2, -2, values, Tail.quasipoly(QuasiPolynomial(2, (poly(r), poly()), 2)), Tail.vanishing()
    )


def zero_fixture():
    return LengthFunction(2, 0, (0,), Tail.vanishing(), Tail.vanishing())


def jst_fixture(c):
    return from_series(parse_series(f"t^{c}/(1-t^2)^{c}"), 2, 80)


def neg_growth_fixture():
    """lambda(2m) = -m for m <= 0, zero elsewhere: negative complexity 2."""
    values = tuple((-n // 2 if n % 2 == 0 and n <= 0 else 0) for n in range(-30, 5))
    return LengthFunction(
        2,
        -30,
        values,
        Tail.vanishing(),
        Tail.quasipoly(QuasiPolynomial(2, (poly(0, -1), poly()), -8)),
    )


class TestReduce:
    def test_even_square_family(self):
        lf = jst_fixture(2)
        reduced = reduce(lf, "positive")
        for m in range(0, 20):
            assert reduced(2 * m) == 1
            assert reduced(2 * m + 1) == 0
        assert reduced.complexity("positive") == 1
        assert multiplicity_pos(reduced, 1).e_delta == 1

    def test_constant_support_reduces_to_finite(self):
        lf = xy_fixture(3)
        reduced = reduce(lf, "positive")
        assert reduced.pos_tail.is_vanishing
        assert reduced.complexity("positive") == 0

    def test_zero_function(self):
        assert reduce(zero_fixture(), "positive") == zero_fixture()

    def test_complexity_drop(self):
        for lf in (jst_fixture(3), jst_fixture(4), xy_fixture(1)):
            cx = lf.complexity("positive")
            assert reduce(lf, "positive").complexity("positive") == cx - 1

    def test_rejects_decreasing_data(self):
        # A lone spike cannot come from an everywhere-injective action.
        lf = LengthFunction(2, 0, (1,), Tail.vanishing(), Tail.vanishing())
        with pytest.raises(KoszulError) as info:
            reduce(lf, "positive")
        assert 0 in info.value.violations

    def test_negative_regime_mirror(self):
        lf = neg_growth_fixture()
        reduced = reduce(lf, "negative")
        assert lf.complexity("negative") == 2
        assert reduced.complexity("negative") == 1
        # one backward step negates the stabilized multiplicity
        assert multiplicity_neg(lf, 2).e_delta == 1
        assert multiplicity_neg(reduced, 1).e_delta == -1

    def test_negative_regime_values(self):
        lf = neg_growth_fixture()
        reduced = reduce(lf, "negative")
        for n in range(-25, 0):
            assert reduced(n) == lf(n + 1) - lf(n + 3)

    def test_negative_regime_rejects_growth_upward(self):
        lf = jst_fixture(2)
        with pytest.raises(KoszulError):
            reduce(lf, "negative")


class TestReduceChain:
    def test_even_square_family_chain(self):
        chain = reduce_chain(jst_fixture(2), 2, "positive")
        assert chain.multiplicities == (1, 1, 1)
        assert [f.complexity("positive") for f in chain.functions] == [2, 1, 0]
        assert euler_characteristic(chain.functions[-1]) == 1

    def test_xy_chain_terminal_euler(self):
        for r in (1, 2, 5):
            chain = reduce_chain(xy_fixture(r), 1, "positive")
            assert chain.multiplicities == (r, r)
            assert euler_characteristic(chain.functions[-1]) == r

    def test_zero_chain(self):
        chain = reduce_chain(zero_fixture(), 0, "positive")
        assert chain.multiplicities == (0,)

    def test_odd_support_chain(self):
        chain = reduce_chain(jst_fixture(3), 3, "positive")
        assert chain.multiplicities == (-1, -1, -1, -1)
        assert chain.invariant_values == (-1, -1, -1, -1)

    def test_negative_chain_alternates(self):
        chain = reduce_chain(neg_growth_fixture(), 2, "negative")
        assert chain.multiplicities == (1, -1, 1)
        assert chain.invariant_values == (1, 1, 1)
        assert euler_characteristic(chain.functions[-1]) == 1

    def test_s_below_complexity_rejected(self):
        with pytest.raises(MultiplicityError):
            reduce_chain(jst_fixture(3), 2, "positive")

    def test_two_sided_base_rejected(self):
        values = tuple(3 if n % 2 == 0 else 0 for n in range(-10, 11))
        tail = lambda: Tail.quasipoly(QuasiPolynomial(2, (poly(3), poly()), 0))  # noqa: E731
        lf = LengthFunction(2, -10, values, tail(), tail())
        with pytest.raises(MultiplicityError):
            reduce_chain(lf, 1, "positive")


class TestKoszulTriangle:
    def test_shape(self):
        lf = xy_fixture(2)
        a, b, c = koszul_triangle(lf)
        assert a == lf
        assert b == lf.shift(2)
        assert c == reduce(lf, "positive")

    def test_zero(self):
        a, b, c = koszul_triangle(zero_fixture())
        assert a == b == c == zero_fixture()

    def test_additivity_on_triangle(self):
        for lf in (jst_fixture(2), jst_fixture(3), xy_fixture(3)):
            a, b, c = koszul_triangle(lf)
            s = max(
                a.complexity("positive"),
                b.complexity("positive"),
                c.complexity("positive"),
            )
            eb = multiplicity_pos(b, s).e_delta
            ea = multiplicity_pos(a, s).e_delta
            ec = multiplicity_pos(c, s).e_delta
            assert eb == ea + ec


class TestAxioms:
    def corpus(self):
        return {
            "xy_2": xy_fixture(2),
            "jst_2": jst_fixture(2),
            "jst_3": jst_fixture(3),
            "point": LengthFunction(2, 0, (1, 1), Tail.vanishing(), Tail.vanishing()),
        }

    def test_delta_convention_satisfies_axioms(self):
        f = lambda lf, s: multiplicity_pos(lf, s).e_delta  # noqa: E731
        report = axioms_check(f, self.corpus())
        assert report.ok, report.failures()

    def test_coefficient_convention_fails_reduction_axiom(self):
        f = lambda lf, s: multiplicity_pos(lf, s).e_coeff  # noqa: E731
        report = axioms_check(f, {"jst_2": jst_fixture(2)})
        failed = {(axiom) for _, axiom, ok, _ in report.entries if not ok}
        assert "reduction step" in failed  # 2 != 1: the factor-d split
        assert "uniqueness" in failed

    def test_empty_fixture_set_vacuous(self):
        f = lambda lf, s: multiplicity_pos(lf, s).e_delta  # noqa: E731
        report = axioms_check(f, {})
        assert report.ok
        assert report.entries == ()
