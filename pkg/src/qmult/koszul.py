"""Koszul reduction of length functions and iterated reduction chains.

The positive-regime reduction replaces lambda by

    lambda'(n) = lambda(n + d) - lambda(n)        (everywhere)

modeling a degree-d element acting injectively in every degree; the
negative-regime mirror is lambda'(n) = lambda(n + 1) - lambda(n + d + 1).
Either formula is applied globally and the input is rejected (with the
violating degrees) when the difference goes negative anywhere, since then no
globally injective (resp. surjective) action is consistent with the data.
Tail polynomials transform exactly: g_i -> g_i(t+1) - g_i(t) in the positive
regime, so the complexity drops by exactly one per step while it is positive.

Along a positive chain the delta-convention multiplicities
e^s, e^{s-1}, ..., e^0 are equal, ending in the Euler characteristic of the
fully reduced function.  Along a negative chain each step negates the value
(the backward operator satisfies D-^{s-1} h' = -D-^s h), so the recorded
invariant is (-1)^k * value_k; both the raw values and the invariant are kept.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Mapping

from .exact import nonnegative_on_ray
from .lengths import LengthFunction, ModelError, QuasiPolynomial, Tail
from .multiplicity import (
    MultiplicityError,
    euler_characteristic,
    multiplicity_neg,
    multiplicity_pos,
)


class KoszulError(ValueError):
    """The reduction would produce a negative length somewhere."""

    def __init__(self, message: str, violations: tuple[int, ...] = ()):
        self.violations = violations
        super().__init__(message)


def _reduced_tail(tail: Tail, regime: str, side: str, d: int) -> Tail:
    if tail.qp is None:
        return Tail.vanishing()
    qp = tail.qp
    if regime == "positive":
        polys = tuple(p.forward_difference() for p in qp.polys)
        anchor = qp.valid_from if side == "pos" else qp.valid_from - d
    else:
        rotated = []
        for i in range(d):
            if i < d - 1:
                g = qp.polys[i + 1]
                rotated.append(g - g.shift(1))
            else:
                g = qp.polys[0]
                rotated.append(g.shift(1) - g.shift(2))
        polys = tuple(rotated)
        anchor = qp.valid_from - 1 if side == "pos" else qp.valid_from - d - 1
    return Tail.quasipoly(QuasiPolynomial(d, polys, anchor))


def reduce(lf: LengthFunction, regime: str = "positive") -> LengthFunction:
    """One Koszul reduction step.

    Raises :class:`KoszulError` listing the violating degrees when the
    globally applied difference formula goes negative, i.e. when the data is
    not consistent with an everywhere-injective (or -surjective) action.
    """
    if regime not in ("positive", "negative"):
        raise ValueError("regime must be 'positive' or 'negative'")
    d = lf.d
    if regime == "positive":
        fn: Callable[[int], int] = lambda n: lf(n + d) - lf(n)  # noqa: E731
    else:
        fn = lambda n: lf(n + 1) - lf(n + d + 1)  # noqa: E731

    pos = _reduced_tail(lf.pos_tail, regime, "pos", d)
    neg = _reduced_tail(lf.neg_tail, regime, "neg", d)

    # Window that the constructor would materialize; scan it for negativity
    # first so the failure comes back as a Koszul rejection with witnesses.
    lo = lf.core_start - (d + 1)
    hi = lf.core_end + (d + 1)
    for tail, side in ((pos, 1), (neg, -1)):
        if tail.qp is not None and not tail.qp.is_zero():
            pad = d * (tail.qp.max_degree + 2)
            if side == 1:
                hi = max(hi, tail.qp.valid_from + pad)
                lo = min(lo, tail.qp.valid_from)
            else:
                lo = min(lo, tail.qp.valid_from - pad)
                hi = max(hi, tail.qp.valid_from)
    violations = [n for n in range(lo, hi + 1) if fn(n) < 0]

    # Beyond the window the reduced tails govern; certify their sign exactly.
    for tail, direction in ((pos, 1), (neg, -1)):
        if tail.qp is None:
            continue
        anchor = hi + 1 if direction == 1 else lo - 1
        for i, p in enumerate(tail.qp.polys):
            if direction == 1:
                m0 = -((anchor - i) // -d)
            else:
                m0 = (anchor - i) // d
            bad = nonnegative_on_ray(p, m0, direction)
            if bad is not None:
                violations.append(d * bad + i)
    if violations:
        word = "injective" if regime == "positive" else "surjective"
        raise KoszulError(
            f"not eventually {word} in model: reduction goes negative at "
            f"n in {sorted(violations)[:8]}",
            violations=tuple(sorted(violations)),
        )

    return LengthFunction.from_values(d, fn, lo, hi, pos, neg)


@dataclass(frozen=True)
class KoszulStep:
    """One reduction step: the regime, the result, and the certified window."""

    regime: str
    result: LengthFunction
    certified_window: tuple[int, int]


@dataclass(frozen=True)
class KoszulChain:
    """An iterated reduction with its per-step multiplicities.

    ``multiplicities[k]`` is the delta-convention multiplicity of index s-k of
    the k-th function (ending in the Euler characteristic when the chain runs
    all the way down).  ``invariant_values`` rewrites them with the sign
    (+1 positive regime, (-1)^k negative regime) under which the chain is
    constant; constancy is enforced at construction time.
    """

    base: LengthFunction
    regime: str
    s: int
    steps: tuple[KoszulStep, ...]
    multiplicities: tuple[int, ...]

    @property
    def functions(self) -> list[LengthFunction]:
        return [self.base] + [step.result for step in self.steps]

    @property
    def invariant_values(self) -> tuple[int, ...]:
        if self.regime == "positive":
            return self.multiplicities
        return tuple((-1) ** k * v for k, v in enumerate(self.multiplicities))

    def to_json_dict(self) -> dict:
        return {
            "regime": self.regime,
            "s": self.s,
            "functions": [f.to_json_dict() for f in self.functions],
            "multiplicities": list(self.multiplicities),
            "invariant_values": list(self.invariant_values),
        }


def reduce_chain(lf: LengthFunction, s: int, regime: str = "positive") -> KoszulChain:
    """Apply ``reduce`` s times, recording multiplicities along the way.

    Requires s at or above the relevant complexity, so the final function has
    complexity 0 and its recorded multiplicity is the plain Euler
    characteristic.  Positive chains must be constant; negative chains must
    alternate in sign; either failure is a model inconsistency.
    """
    side = "positive" if regime == "positive" else "negative"
    mult = multiplicity_pos if regime == "positive" else multiplicity_neg
    if s < lf.complexity(side):
        raise MultiplicityError(
            f"s={s} is below the {side} complexity {lf.complexity(side)}"
        )
    # The terminal value is an Euler characteristic, which compares to the
    # chain only when the opposite tail of the base vanishes.
    opposite = lf.neg_tail if regime == "positive" else lf.pos_tail
    if not opposite.is_vanishing:
        raise MultiplicityError(
            f"a {regime} chain needs the opposite tail of the base to vanish"
        )
    values = [mult(lf, s).e_delta]
    steps: list[KoszulStep] = []
    current = lf
    for k in range(s):
        current = reduce(current, regime)
        steps.append(
            KoszulStep(regime, current, (current.core_start, current.core_end))
        )
        values.append(mult(current, s - k - 1).e_delta)
    if steps and steps[-1].result.complexity(side) != 0:
        raise ModelError("chain did not reach complexity 0")
    expected_sign = 1 if regime == "positive" else -1
    for k in range(1, len(values)):
        if values[k] != expected_sign * values[k - 1]:
            raise ModelError(
                f"chain multiplicities broke the reduction identity: {values}"
            )
    return KoszulChain(lf, regime, s, tuple(steps), tuple(values))


def koszul_triangle(
    lf: LengthFunction,
) -> tuple[LengthFunction, LengthFunction, LengthFunction]:
    """The triangle-realizable triple (lf, lf shifted by d, reduced lf)."""
    return (lf, lf.shift(lf.d), reduce(lf, "positive"))


@dataclass(frozen=True)
class AxiomsReport:
    """Outcome of checking the multiplicity axioms over a fixture set."""

    entries: tuple[tuple[str, str, bool, str], ...]  # fixture, axiom, ok, detail

    @property
    def ok(self) -> bool:
        return all(entry[2] for entry in self.entries)

    def failures(self) -> list[tuple[str, str, str]]:
        return [(f, a, detail) for f, a, ok, detail in self.entries if not ok]


def axioms_check(
    f: Callable[[LengthFunction, int], int],
    fixtures: Mapping[str, LengthFunction],
) -> AxiomsReport:
    """Check that f behaves like the multiplicity on every fixture.

    The three axioms: (1) f vanishes above the complexity; (2) at complexity 0
    f is the alternating sum; (3) one reduction step lowers the index by one
    without changing the value.  Any function satisfying all three is pinned
    down by structural recursion, so the report also compares f against that
    recursion's value.
    """
    entries: list[tuple[str, str, bool, str]] = []

    def axiom_value(lf: LengthFunction, s: int) -> int:
        cx = lf.complexity("positive")
        if s > cx:
            return 0
        if cx == 0:
            return euler_characteristic(lf)
        return axiom_value(reduce(lf, "positive"), s - 1)

    for name, lf in sorted(fixtures.items()):
        cx = lf.complexity("positive")
        try:
            ok = f(lf, cx + 1) == 0 and f(lf, cx + 2) == 0
            entries.append((name, "vanishing above complexity", ok, f"cx={cx}"))
        except Exception as err:  # record, never abort the report
            entries.append((name, "vanishing above complexity", False, str(err)))
        if cx == 0:
            try:
                want = euler_characteristic(lf)
                got = f(lf, 0)
                entries.append(
                    (name, "alternating sum at complexity 0", got == want, f"{got} vs {want}")
                )
            except Exception as err:
                entries.append((name, "alternating sum at complexity 0", False, str(err)))
        else:
            try:
                got = f(lf, cx)
                reduced = f(reduce(lf, "positive"), cx - 1)
                entries.append(
                    (name, "reduction step", got == reduced, f"{got} vs {reduced}")
                )
            except Exception as err:
                entries.append((name, "reduction step", False, str(err)))
        try:
            want = axiom_value(lf, cx)
            got = f(lf, cx)
            entries.append((name, "uniqueness", got == want, f"{got} vs {want}"))
        except Exception as err:
            entries.append((name, "uniqueness", False, str(err)))
    return AxiomsReport(tuple(entries))
