"""Multiplicities of graded length functions.

The Herbrand difference of a period-d length function is

    h(n) = sum_{i=0}^{d-1} (-1)^{n+i} lambda(n+i)

For a function whose positive tail is quasi-polynomial with polynomials
g_0..g_{d-1} and complexity cx = 1 + max deg g_i, the (s-1)-fold index-d
difference of h stabilizes for every s >= cx >= 1.  Two conventions for the
resulting multiplicity are supported, and every report carries both:

* ``delta``:        the stabilized value of D^{s-1} h itself, computed
                    symbolically from the tail polynomials (per residue class
                    j, h(dm+j) is eventually a polynomial in the block index
                    m, and stepping by d in the degree is stepping by 1 in m);
                    equals (s-1)! * sum_i (-1)^i a_i.
* ``coefficient``:  (s-1)! * d^(s-1) * sum_i (-1)^i a_i, where a_i is the
                    degree s-1 coefficient of g_i.

The two differ by the factor d^(s-1); both stabilization chains are internally
consistent, so neither is "the" value: callers pick a convention and the
library never resolves the split silently.  On the negative side (tails toward
-infinity, operator D-) the delta value additionally differs from the
coefficient formula by a sign (-1)^(s-1); the delta convention is the literal
stabilized value in both directions.

When the relevant complexity is 0 and the opposite tail vanishes, the
multiplicity of index 0 is the finite Euler characteristic
sum_n (-1)^n lambda(n), and both conventions agree.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import factorial
from typing import Sequence

from .differences import delta as delta_op
from .differences import delta_neg as delta_neg_op
from .differences import faulhaber_sum
from .exact import Polynomial, format_rational
from .lengths import LengthFunction, ModelError, Tail


class MultiplicityError(ValueError):
    """A multiplicity was requested outside its domain of definition."""


class Convention(Enum):
    DELTA = "delta"
    COEFFICIENT = "coefficient"

    @staticmethod
    def parse(value: "Convention | str") -> "Convention":
        if isinstance(value, Convention):
            return value
        return Convention(value)


def _sign(n: int) -> int:
    """(-1)^n for any integer n (integer powers of -1 go float when n < 0)."""
    return -1 if n % 2 else 1


def herbrand(lf: LengthFunction, n: int) -> int:
    """Alternating sum of lambda over the window [n, n+d)."""
    return sum(_sign(n + i) * lf(n + i) for i in range(lf.d))


def _residue_profiles(polys: Sequence[Polynomial], d: int) -> list[Polynomial]:
    """Eventual block polynomials of the Herbrand difference.

    For n = d*m + j in the tail region, h(n) equals
    sum_{k >= j} (-1)^k g_k(m) + sum_{k < j} (-1)^k g_k(m+1)
    as a polynomial in m (the k < j summands spill into the next block).
    """
    out = []
    for j in range(d):
        acc = Polynomial()
        for k in range(d):
            term = polys[k] if k >= j else polys[k].shift(1)
            acc = acc + term * ((-1) ** k)
        out.append(acc)
    return out


def _as_int(x: Fraction, what: str) -> int:
    if x.denominator != 1:
        raise ModelError(f"{what} is {x}, not an integer")
    return int(x)


@dataclass(frozen=True)
class MultiplicityReport:
    """Everything a multiplicity computation established, both conventions."""

    side: str  # "positive" | "negative"
    s: int
    cx: int
    cx_neg: int
    e_delta: int
    e_coeff: int
    leading: tuple[Fraction, ...]
    polys: tuple[Polynomial, ...]
    polys_neg: tuple[Polynomial, ...]
    stabilization_index: int | None
    convention: Convention | None = None

    def value(self, convention: Convention | str | None = None) -> int:
        conv = convention if convention is not None else self.convention
        if conv is None:
            if self.e_delta == self.e_coeff:
                return self.e_delta
            raise MultiplicityError(
                "conventions disagree "
                f"(delta={self.e_delta}, coefficient={self.e_coeff}); pick one"
            )
        conv = Convention.parse(conv)
        return self.e_delta if conv is Convention.DELTA else self.e_coeff

    def to_json_dict(self) -> dict:
        return {
            "side": self.side,
            "s": self.s,
            "cx": self.cx,
            "cx_neg": self.cx_neg,
            "e_delta": self.e_delta,
            "e_coeff": self.e_coeff,
            "leading": [format_rational(a) for a in self.leading],
            "polys": [p.to_json() for p in self.polys],
            "polys_neg": [p.to_json() for p in self.polys_neg],
            "stabilization_index": self.stabilization_index,
        }


def _tail_polys(lf: LengthFunction, side: str) -> tuple[Polynomial, ...]:
    tail = lf.pos_tail if side == "positive" else lf.neg_tail
    if tail.qp is None:
        return ()
    return tail.qp.polys


def euler_characteristic(lf: LengthFunction) -> int:
    """Alternating sum of lambda over its (finite) support."""
    if not lf.is_finite_support():
        raise MultiplicityError("Euler characteristic needs finite support")
    return sum(
        _sign(lf.core_start + k) * v for k, v in enumerate(lf.core_values)
    )


def _euler_report(lf: LengthFunction, s: int, side: str, conv: Convention | None) -> MultiplicityReport:
    e = euler_characteristic(lf) if s == 0 else 0
    return MultiplicityReport(
        side=side,
        s=s,
        cx=lf.complexity("positive"),
        cx_neg=lf.complexity("negative"),
        e_delta=e,
        e_coeff=e,
        leading=(),
        polys=_tail_polys(lf, "positive"),
        polys_neg=_tail_polys(lf, "negative"),
        stabilization_index=None,
        convention=conv,
    )


def multiplicity_pos(
    lf: LengthFunction, s: int, convention: Convention | str | None = None
) -> MultiplicityReport:
    """The index-s multiplicity at +infinity.

    Requires s >= cx.  For cx >= 1 the delta value is computed symbolically
    from the tail polynomials and confirmed numerically on a window of 3d
    consecutive degrees; for cx = 0 (where the negative tail must vanish) the
    s = 0 value is the Euler characteristic and every s >= 1 value is 0.
    """
    conv = None if convention is None else Convention.parse(convention)
    cx = lf.complexity("positive")
    if s < cx:
        raise MultiplicityError(f"s={s} is below the complexity {cx}")

    if cx == 0:
        if not lf.neg_tail.is_vanishing:
            raise MultiplicityError(
                "complexity 0 with a non-vanishing negative tail: "
                "the Euler characteristic is undefined"
            )
        return _euler_report(lf, s, "positive", conv)

    qp = lf.pos_tail.qp
    assert qp is not None
    leading = tuple(p.coefficient(s - 1) for p in qp.polys)
    alternating = sum(
        ((-1) ** i * a for i, a in enumerate(leading)), Fraction(0)
    )

    # Symbolic stabilized value of D^{s-1} h: unit-step differences of the
    # per-residue block polynomials, which must collapse to one constant.
    constants = []
    for profile in _residue_profiles(qp.polys, lf.d):
        diffed = profile
        for _ in range(s - 1):
            diffed = diffed.forward_difference()
        if diffed.degree > 0:
            raise ModelError(
                f"D^{s - 1} h did not stabilize on residue profile {profile}"
            )
        constants.append(diffed(0))
    if len(set(constants)) != 1:
        raise ModelError(f"residue classes disagree after differencing: {constants}")
    e_delta = _as_int(constants[0], "stabilized difference")
    e_coeff = _as_int(
        factorial(s - 1) * Fraction(lf.d) ** (s - 1) * alternating, "coefficient formula"
    )
    if e_coeff != lf.d ** (s - 1) * e_delta:
        raise ModelError(
            f"convention bridge failed: coefficient {e_coeff} != "
            f"d^(s-1) * delta {lf.d ** (s - 1) * e_delta}"
        )

    # Numeric confirmation on 3d consecutive degrees in the certified region.
    h = lambda n: herbrand(lf, n)  # noqa: E731
    v = qp.valid_from
    for n in range(v, v + 3 * lf.d):
        got = delta_op(h, s - 1, lf.d, n)
        if got != e_delta:
            raise ModelError(
                f"numeric stabilization check failed at n={n}: {got} != {e_delta}"
            )

    # Honest boundary of the verified stable range.
    n = v - 1
    floor = lf.core_start - 2 * lf.d
    while n >= floor and delta_op(h, s - 1, lf.d, n) == e_delta:
        n -= 1
    stabilization = n + 1

    return MultiplicityReport(
        side="positive",
        s=s,
        cx=cx,
        cx_neg=lf.complexity("negative"),
        e_delta=e_delta,
        e_coeff=e_coeff,
        leading=leading,
        polys=qp.polys,
        polys_neg=_tail_polys(lf, "negative"),
        stabilization_index=stabilization,
        convention=conv,
    )


def multiplicity_neg(
    lf: LengthFunction, s: int, convention: Convention | str | None = None
) -> MultiplicityReport:
    """The index-s multiplicity at -infinity (mirror of :func:`multiplicity_pos`).

    The delta value is the literal stabilized value of D-^{s-1} h for n << 0,
    which relates to the coefficient formula by the extra sign (-1)^(s-1); at
    s = 1 the two sides agree, and on finite support e_0 equals the positive
    Euler characteristic.
    """
    conv = None if convention is None else Convention.parse(convention)
    cx_neg = lf.complexity("negative")
    if s < cx_neg:
        raise MultiplicityError(f"s={s} is below the negative complexity {cx_neg}")

    if cx_neg == 0:
        if not lf.pos_tail.is_vanishing:
            raise MultiplicityError(
                "negative complexity 0 with a non-vanishing positive tail: "
                "the Euler characteristic is undefined"
            )
        return _euler_report(lf, s, "negative", conv)

    qp = lf.neg_tail.qp
    assert qp is not None
    leading = tuple(p.coefficient(s - 1) for p in qp.polys)
    alternating = sum(
        ((-1) ** i * a for i, a in enumerate(leading)), Fraction(0)
    )

    constants = []
    for profile in _residue_profiles(qp.polys, lf.d):
        diffed = profile
        for _ in range(s - 1):
            diffed = diffed.forward_difference()
        if diffed.degree > 0:
            raise ModelError(
                f"D-^{s - 1} h did not stabilize on residue profile {profile}"
            )
        constants.append(diffed(0))
    if len(set(constants)) != 1:
        raise ModelError(f"residue classes disagree after differencing: {constants}")
    e_delta = _as_int((-1) ** (s - 1) * constants[0], "stabilized difference")
    e_coeff = _as_int(
        factorial(s - 1) * Fraction(lf.d) ** (s - 1) * alternating, "coefficient formula"
    )
    if e_coeff != (-1) ** (s - 1) * lf.d ** (s - 1) * e_delta:
        raise ModelError(
            f"negative convention bridge failed: coefficient {e_coeff} != "
            f"(-1)^(s-1) d^(s-1) * delta"
        )

    # Numeric confirmation: all lambda arguments must sit at or below the
    # anchor, so back the window off by the operator's reach.
    h = lambda n: herbrand(lf, n)  # noqa: E731
    reach = lf.d * (s - 1) + (s - 1) + (lf.d - 1)
    n_hi = qp.valid_from - reach
    for n in range(n_hi - 3 * lf.d + 1, n_hi + 1):
        got = delta_neg_op(h, s - 1, lf.d, n)
        if got != e_delta:
            raise ModelError(
                f"numeric stabilization check failed at n={n}: {got} != {e_delta}"
            )

    n = n_hi + 1
    ceiling = lf.core_end + 2 * lf.d
    while n <= ceiling and delta_neg_op(h, s - 1, lf.d, n) == e_delta:
        n += 1
    stabilization = n - 1

    return MultiplicityReport(
        side="negative",
        s=s,
        cx=lf.complexity("positive"),
        cx_neg=cx_neg,
        e_delta=e_delta,
        e_coeff=e_coeff,
        leading=leading,
        polys=_tail_polys(lf, "positive"),
        polys_neg=qp.polys,
        stabilization_index=stabilization,
        convention=conv,
    )


def limit_estimate(
    lf: LengthFunction, s: int, n: int, constant: str = "paper"
) -> Fraction:
    """Finite-n multiplicity estimate: C * (sum_{j=0}^n (-1)^j lambda(j)) / n^s.

    ``constant="paper"`` uses C = s! d^(2s-1), which converges to the
    coefficient-convention value; ``constant="corrected"`` uses C = s! d^s,
    which converges to the delta-convention value.  The alternating partial
    sum is evaluated with closed-form Faulhaber sums on the quasi-polynomial
    tail, so the cost is independent of n apart from the core window.
    """
    if s < 1:
        raise MultiplicityError("limit estimates need s >= 1")
    if n < 1:
        raise MultiplicityError("limit estimates need n >= 1")
    if constant == "paper":
        factor = Fraction(factorial(s) * lf.d ** (2 * s - 1))
    elif constant == "corrected":
        factor = Fraction(factorial(s) * lf.d**s)
    else:
        raise ValueError(f"unknown constant {constant!r}")

    direct_end = min(n, lf.core_end)
    total = Fraction(
        sum((-1) ** j * lf(j) for j in range(0, direct_end + 1))
    )
    if n > lf.core_end and lf.pos_tail.qp is not None:
        qp = lf.pos_tail.qp
        for i, g in enumerate(qp.polys):
            if g.is_zero():
                continue
            m_lo = -((lf.core_end + 1 - i) // -lf.d)  # ceil
            m_hi = (n - i) // lf.d
            if m_hi >= m_lo:
                total += (-1) ** i * faulhaber_sum(g, m_lo, m_hi)
    return factor * total / Fraction(n) ** s


def theta_invariant(tor_lengths: LengthFunction) -> int:
    """Stabilized even/odd difference of homologically indexed lengths.

    The input holds lambda(n) = (length in homological degree n), supported in
    n >= 0 with eventually constant even and odd values; it is reindexed
    cohomologically (n -> -n) and the result a_even - a_odd is certified
    against the index-1 negative multiplicity of the reindexed function.
    """
    if tor_lengths.d != 2:
        raise MultiplicityError("theta needs period d = 2")
    if not tor_lengths.neg_tail.is_vanishing:
        raise MultiplicityError("homological input must vanish in negative degrees")
    reindexed = tor_lengths.reflect()
    if reindexed.neg_tail.qp is None:
        theta = 0
    else:
        polys = reindexed.neg_tail.qp.polys
        if any(p.degree > 0 for p in polys):
            raise MultiplicityError(
                "lengths do not stabilize: even/odd values must be eventually constant"
            )
        theta = _as_int(polys[0](0) - polys[1](0), "theta")
    check = multiplicity_neg(reindexed, 1, Convention.DELTA).e_delta
    if check != theta:
        raise ModelError(f"theta {theta} disagrees with e_1 {check}")
    return theta


def serre_intersection(tor_lengths: Sequence[int]) -> int:
    """Alternating sum of a finite sequence of homological lengths.

    Certified against the Euler characteristic of the cohomologically
    reindexed length function.
    """
    values = [int(v) for v in tor_lengths]
    if any(v < 0 for v in values):
        raise MultiplicityError("lengths must be nonnegative")
    total = sum((-1) ** k * v for k, v in enumerate(values))
    if values:
        reindexed = LengthFunction(
            2, -(len(values) - 1), tuple(reversed(values)), Tail.vanishing(), Tail.vanishing()
        )
        if euler_characteristic(reindexed) != total:
            raise ModelError("alternating sum disagrees with the Euler characteristic")
    return total


@dataclass(frozen=True)
class WindowResult:
    """Outcome of a vanishing-window scan."""

    status: str  # "confirmed" | "window_not_found" | "violated"
    window_start: int | None = None
    violation: int | None = None


def vanishing_window_check(lf: LengthFunction, m0: int, parity: str) -> WindowResult:
    """Test the vanishing pattern: when the top multiplicity is 0, does a run
    of d/2 zero values at one parity at or after m0 force lambda = 0 from m0 on?

    Scans for the run exactly (zeros of the tail polynomials are confined by
    a root bound, so the scan window is finite), then checks the conclusion
    and reports the first violation when the implication fails on this data.
    """
    if parity not in ("even", "odd"):
        raise ValueError("parity must be 'even' or 'odd'")
    s = lf.complexity("positive")
    top = multiplicity_pos(lf, s).e_delta
    if top != 0:
        raise MultiplicityError(f"vanishing check needs e^s = 0, got {top}")

    qp = lf.pos_tail.qp
    horizon = 0
    if qp is not None:
        for p in qp.polys:
            if p.is_zero() or p.degree == 0:
                continue
            _, lead = p.leading_term()
            bound = 1 + max(abs(c / lead) for c in p.coeffs[:-1])
            horizon = max(horizon, int(bound) + 1)
        scan_end = max(m0, lf.core_end, qp.valid_from + lf.d * (horizon + 2)) + 2 * lf.d
    else:
        scan_end = max(m0, lf.core_end) + 2 * lf.d

    want = 0 if parity == "even" else 1
    start = m0 if m0 % 2 == want % 2 else m0 + 1
    run_at: int | None = None
    for n in range(start, scan_end + 1, 2):
        if all(lf(n + 2 * j) == 0 for j in range(lf.d // 2)):
            run_at = n
            break
    if run_at is None:
        return WindowResult("window_not_found")

    for k in range(m0, scan_end + 2 * lf.d + 1):
        if lf(k) != 0:
            return WindowResult("violated", window_start=run_at, violation=k)
    if qp is not None:
        # A nonzero tail polynomial would have produced a nonzero value
        # strictly inside the scanned range.
        raise ModelError("tail scan inconsistent with zero values")
    return WindowResult("confirmed", window_start=run_at)
