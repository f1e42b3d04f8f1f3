"""Graded length functions: total functions Z -> N with declared tail behavior.

A :class:`LengthFunction` is the numerical shadow of a graded Hom module: an
explicit core window of values plus a declared tail on each side, either
``vanishing`` (identically zero beyond the core) or ``quasipoly`` (a period-d
quasi-polynomial).  A quasi-polynomial of period d is a tuple of polynomials
g_0..g_{d-1} with value g_{n mod d}(n // d); residues use floor division, so
the indexing is unambiguous for negative degrees.

Tails must overlap the core on at least max_degree + 2 points per residue
class and agree there exactly.  That overlap also certifies integrality of the
tail everywhere (a polynomial that is integral on deg + 1 consecutive integers
is integral on all of Z); nonnegativity along the rest of the ray is certified
by exact sign analysis.  Quasi-polynomial tails whose polynomials are all zero
are normalized to ``vanishing``.

Fitting (:func:`fit_quasipoly`) recovers the tail of a sampled function by
Newton forward differences per residue class, working from the high end of the
window; the reported ``valid_from`` is the honest boundary found by scanning
back down, never an assumed one.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Mapping, Sequence

from .differences import binomial_polynomial
from .exact import (
    Polynomial,
    RationalFunction,
    nonnegative_on_ray,
    series_coefficients,
)


class ModelError(ValueError):
    """A length-function model is internally inconsistent or misused."""


class FitError(ValueError):
    """No quasi-polynomial stabilization within the sampled window."""

    def __init__(self, message: str, residue: int | None = None, best_degree: int | None = None):
        self.residue = residue
        self.best_degree = best_degree
        super().__init__(message)


@dataclass(frozen=True)
class QuasiPolynomial:
    """Period-d quasi-polynomial with an anchor for its validity range.

    ``valid_from`` is in the degree variable n.  Used as a positive tail the
    claim is value(n) for all n >= valid_from; used as a negative tail the
    claim is for all n <= valid_from (the JSON schema writes the latter anchor
    as ``valid_to`` to keep fixture files readable).
    """

    d: int
    polys: tuple[Polynomial, ...]
    valid_from: int

    def __post_init__(self) -> None:
        if self.d < 2 or self.d % 2 != 0:
            raise ModelError(f"period must be an even integer >= 2, got {self.d}")
        if len(self.polys) != self.d:
            raise ModelError(f"expected {self.d} polynomials, got {len(self.polys)}")

    def __call__(self, n: int) -> Fraction:
        return self.polys[n % self.d](n // self.d)

    @property
    def max_degree(self) -> int:
        return max(p.degree for p in self.polys)

    def is_zero(self) -> bool:
        return all(p.is_zero() for p in self.polys)


@dataclass(frozen=True)
class Tail:
    """One side of a length function: vanishing, or a quasi-polynomial."""

    qp: QuasiPolynomial | None = None

    @staticmethod
    def vanishing() -> Tail:
        return Tail(None)

    @staticmethod
    def quasipoly(qp: QuasiPolynomial) -> Tail:
        return Tail(qp)

    @property
    def kind(self) -> str:
        return "vanishing" if self.qp is None else "quasipoly"

    @property
    def is_vanishing(self) -> bool:
        return self.qp is None


def _check_tail(
    lf: "LengthFunction", tail: Tail, side: str
) -> None:
    qp = tail.qp
    if qp is None:
        return
    if qp.d != lf.d:
        raise ModelError(f"{side} tail period {qp.d} != function period {lf.d}")
    need = lf.d * (qp.max_degree + 2)
    if side == "pos":
        lo, hi = qp.valid_from, lf.core_end
        if not (lf.core_start <= qp.valid_from <= lf.core_end - need):
            raise ModelError(
                f"pos tail must overlap the core on {qp.max_degree + 2} blocks per "
                f"residue: need valid_from in [{lf.core_start}, {lf.core_end - need}], "
                f"got {qp.valid_from}"
            )
    else:
        lo, hi = lf.core_start, qp.valid_from
        if not (lf.core_start + need <= qp.valid_from <= lf.core_end):
            raise ModelError(
                f"neg tail must overlap the core on {qp.max_degree + 2} blocks per "
                f"residue: need valid_to in [{lf.core_start + need}, {lf.core_end}], "
                f"got {qp.valid_from}"
            )
    for n in range(lo, hi + 1):
        expected = lf.core_values[n - lf.core_start]
        if qp(n) != expected:
            raise ModelError(
                f"{side} tail disagrees with the core at n={n}: "
                f"tail gives {qp(n)}, core holds {expected}"
            )
    # Nonnegativity out along the ray, certified by exact sign analysis.
    direction = 1 if side == "pos" else -1
    for i, p in enumerate(qp.polys):
        if direction == 1:
            m0 = -((qp.valid_from - i) // -lf.d)  # ceil division
        else:
            m0 = (qp.valid_from - i) // lf.d
        bad = nonnegative_on_ray(p, m0, direction)
        if bad is not None:
            raise ModelError(
                f"{side} tail polynomial for residue {i} goes negative at block {bad} "
                f"(degree n={lf.d * bad + i})"
            )


@dataclass(frozen=True, eq=False)
class LengthFunction:
    """A total function Z -> N: explicit core window plus declared tails.

    Values are immutable after construction and all operations are pure, so
    instances can be shared freely.  Equality is semantic (equal values on all
    of Z), not structural.
    """

    d: int
    core_start: int
    core_values: tuple[int, ...]
    pos_tail: Tail
    neg_tail: Tail

    def __post_init__(self) -> None:
        if self.d < 2 or self.d % 2 != 0:
            raise ModelError(f"period must be an even integer >= 2, got {self.d}")
        if not self.core_values:
            raise ModelError("core window must be nonempty")
        values = tuple(int(v) for v in self.core_values)
        if any(v < 0 for v in values):
            raise ModelError("length values must be nonnegative")
        object.__setattr__(self, "core_values", values)
        # All-zero quasi-polynomial tails mean the same thing as vanishing.
        for name in ("pos_tail", "neg_tail"):
            tail = getattr(self, name)
            if tail.qp is not None and tail.qp.is_zero():
                object.__setattr__(self, name, Tail.vanishing())
        _check_tail(self, self.pos_tail, "pos")
        _check_tail(self, self.neg_tail, "neg")

    @property
    def core_end(self) -> int:
        return self.core_start + len(self.core_values) - 1

    def __call__(self, n: int) -> int:
        """Evaluate at any integer degree."""
        if self.core_start <= n <= self.core_end:
            return self.core_values[n - self.core_start]
        tail = self.pos_tail if n > self.core_end else self.neg_tail
        if tail.qp is None:
            return 0
        value = tail.qp(n)
        if value.denominator != 1 or value < 0:
            raise ModelError(f"tail evaluates to {value} at n={n}; not a length")
        return int(value)

    def complexity(self, side: str = "positive") -> int:
        """1 + max degree of the tail polynomials on the given side (0 if vanishing)."""
        tail = self._tail(side)
        if tail.qp is None:
            return 0
        return 1 + tail.qp.max_degree

    def _tail(self, side: str) -> Tail:
        if side == "positive":
            return self.pos_tail
        if side == "negative":
            return self.neg_tail
        raise ValueError(f"side must be 'positive' or 'negative', got {side!r}")

    def is_finite_support(self) -> bool:
        return self.pos_tail.is_vanishing and self.neg_tail.is_vanishing

    def support(self) -> list[int]:
        """Degrees with nonzero value; only meaningful for finite support."""
        if not self.is_finite_support():
            raise ModelError("support is infinite")
        return [
            self.core_start + k for k, v in enumerate(self.core_values) if v != 0
        ]

    def shift(self, k: int) -> LengthFunction:
        """The translate n -> self(n + k)."""

        def move(tail: Tail) -> Tail:
            if tail.qp is None:
                return tail
            qp = tail.qp
            polys = []
            for i in range(self.d):
                u = i + k
                q, r = divmod(u, self.d)  # floor division
                polys.append(qp.polys[r].shift(q))
            return Tail.quasipoly(QuasiPolynomial(self.d, tuple(polys), qp.valid_from - k))

        return LengthFunction(
            self.d,
            self.core_start - k,
            self.core_values,
            move(self.pos_tail),
            move(self.neg_tail),
        )

    def reflect(self) -> LengthFunction:
        """The reversal n -> self(-n); swaps the two tails."""

        def flip(tail: Tail) -> Tail:
            if tail.qp is None:
                return tail
            qp = tail.qp
            polys = [qp.polys[0].compose_linear(-1, 0)]
            for i in range(1, self.d):
                polys.append(qp.polys[self.d - i].compose_linear(-1, -1))
            return Tail.quasipoly(QuasiPolynomial(self.d, tuple(polys), -qp.valid_from))

        return LengthFunction(
            self.d,
            -self.core_end,
            tuple(reversed(self.core_values)),
            flip(self.neg_tail),
            flip(self.pos_tail),
        )

    def __add__(self, other: LengthFunction) -> LengthFunction:
        """Pointwise sum; models a direct sum of pairs."""
        if not isinstance(other, LengthFunction):
            return NotImplemented
        if self.d != other.d:
            raise ModelError(f"cannot add length functions with periods {self.d} and {other.d}")

        def combine(a: Tail, b: Tail, other_end: int, side: str) -> Tail:
            if a.qp is None and b.qp is None:
                return Tail.vanishing()
            if a.qp is not None and b.qp is not None:
                polys = tuple(pa + pb for pa, pb in zip(a.qp.polys, b.qp.polys))
                anchor = (
                    max(a.qp.valid_from, b.qp.valid_from)
                    if side == "pos"
                    else min(a.qp.valid_from, b.qp.valid_from)
                )
                return Tail.quasipoly(QuasiPolynomial(self.d, polys, anchor))
            qp = a.qp if a.qp is not None else b.qp
            assert qp is not None
            # The vanishing side contributes nothing beyond its own core.
            anchor = (
                max(qp.valid_from, other_end + 1)
                if side == "pos"
                else min(qp.valid_from, other_end - 1)
            )
            return Tail.quasipoly(QuasiPolynomial(self.d, qp.polys, anchor))

        pos = combine(
            self.pos_tail,
            other.pos_tail,
            other.core_end if self.pos_tail.qp is not None else self.core_end,
            "pos",
        )
        neg = combine(
            self.neg_tail,
            other.neg_tail,
            other.core_start if self.neg_tail.qp is not None else self.core_start,
            "neg",
        )
        return LengthFunction.from_values(
            self.d,
            lambda n: self(n) + other(n),
            min(self.core_start, other.core_start),
            max(self.core_end, other.core_end),
            pos,
            neg,
        )

    @staticmethod
    def from_values(
        d: int,
        fn: Callable[[int], int],
        lo: int,
        hi: int,
        pos_tail: Tail,
        neg_tail: Tail,
    ) -> LengthFunction:
        """Assemble a length function, widening the core to meet tail overlap."""
        if pos_tail.qp is not None and not pos_tail.qp.is_zero():
            hi = max(hi, pos_tail.qp.valid_from + d * (pos_tail.qp.max_degree + 2))
            lo = min(lo, pos_tail.qp.valid_from)
        if neg_tail.qp is not None and not neg_tail.qp.is_zero():
            lo = min(lo, neg_tail.qp.valid_from - d * (neg_tail.qp.max_degree + 2))
            hi = max(hi, neg_tail.qp.valid_from)
        values = tuple(fn(n) for n in range(lo, hi + 1))
        return LengthFunction(d, lo, values, pos_tail, neg_tail)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LengthFunction):
            return NotImplemented
        if self.d != other.d:
            return False

        def tail_polys(t: Tail) -> tuple[Polynomial, ...] | None:
            return None if t.qp is None else t.qp.polys

        if tail_polys(self.pos_tail) != tail_polys(other.pos_tail):
            return False
        if tail_polys(self.neg_tail) != tail_polys(other.neg_tail):
            return False
        lo = min(self.core_start, other.core_start)
        hi = max(self.core_end, other.core_end)
        return all(self(n) == other(n) for n in range(lo, hi + 1))

    __hash__ = None  # type: ignore[assignment]  # semantic equality, not hashable

    def __repr__(self) -> str:
        return (
            f"LengthFunction(d={self.d}, core=[{self.core_start}..{self.core_end}], "
            f"pos={self.pos_tail.kind}, neg={self.neg_tail.kind})"
        )

    # -- JSON interchange ---------------------------------------------------

    def to_json_dict(self) -> dict:
        def tail_dict(tail: Tail, side: str) -> dict:
            if tail.qp is None:
                return {"kind": "vanishing"}
            key = "valid_from" if side == "pos" else "valid_to"
            return {
                "kind": "quasipoly",
                key: tail.qp.valid_from,
                "polys": [p.to_json() for p in tail.qp.polys],
            }

        return {
            "d": self.d,
            "core": {"start": self.core_start, "values": list(self.core_values)},
            "pos_tail": tail_dict(self.pos_tail, "pos"),
            "neg_tail": tail_dict(self.neg_tail, "neg"),
        }

    @staticmethod
    def from_json_dict(data: dict) -> LengthFunction:
        _require_keys(data, {"d", "core", "pos_tail", "neg_tail"}, "length function")
        core = data["core"]
        _require_keys(core, {"start", "values"}, "core")

        def tail_from(obj: dict, side: str, d: int) -> Tail:
            anchor_key = "valid_from" if side == "pos" else "valid_to"
            if not isinstance(obj, dict) or "kind" not in obj:
                raise ModelError(f"{side}_tail must be an object with a 'kind'")
            if obj["kind"] == "vanishing":
                _require_keys(obj, {"kind"}, f"{side}_tail")
                return Tail.vanishing()
            if obj["kind"] == "quasipoly":
                _require_keys(obj, {"kind", anchor_key, "polys"}, f"{side}_tail")
                polys = tuple(Polynomial.from_json(p) for p in obj["polys"])
                return Tail.quasipoly(QuasiPolynomial(d, polys, int(obj[anchor_key])))
            raise ModelError(f"unknown tail kind {obj['kind']!r}")

        d = int(data["d"])
        return LengthFunction(
            d,
            int(core["start"]),
            tuple(int(v) for v in core["values"]),
            tail_from(data["pos_tail"], "pos", d),
            tail_from(data["neg_tail"], "neg", d),
        )


def _require_keys(obj: dict, allowed: set[str], what: str) -> None:
    if not isinstance(obj, dict):
        raise ModelError(f"{what} must be a JSON object")
    unknown = set(obj) - allowed
    if unknown:
        raise ModelError(f"unknown fields in {what}: {sorted(unknown)}")
    missing = allowed - set(obj)
    if missing:
        raise ModelError(f"missing fields in {what}: {sorted(missing)}")


def evaluate(lf: LengthFunction, n: int) -> int:
    """Function form of ``lf(n)``."""
    return lf(n)


def complexity(lf: LengthFunction, side: str = "positive") -> int:
    """Function form of ``lf.complexity(side)``."""
    return lf.complexity(side)


def shift(lf: LengthFunction, k: int) -> LengthFunction:
    """Function form of ``lf.shift(k)``."""
    return lf.shift(k)


def pointwise_sum(lf1: LengthFunction, lf2: LengthFunction) -> LengthFunction:
    """Function form of ``lf1 + lf2``."""
    return lf1 + lf2


def _newton_interpolate(points: Sequence[tuple[int, Fraction]]) -> Polynomial:
    """Interpolating polynomial through consecutive-argument points.

    Points must have consecutive integer abscissas m0, m0+1, ...; uses the
    forward-difference Newton form anchored at m0.
    """
    m0 = points[0][0]
    row = [Fraction(v) for _, v in points]
    poly = Polynomial()
    for k in range(len(points)):
        poly = poly + binomial_polynomial(k).shift(-m0) * row[0]
        row = [row[j + 1] - row[j] for j in range(len(row) - 1)]
        if not row:
            break
    return poly


def fit_quasipoly(samples: Mapping[int, int | Fraction], d: int) -> QuasiPolynomial:
    """Fit a period-d quasi-polynomial to samples on a contiguous window.

    Per residue class, interpolates the lowest degree that the top of the
    block-indexed sequence supports and verifies it against at least deg + 2
    further points below; the returned ``valid_from`` is found by scanning the
    whole window downward from the top, so it is honest rather than minimal.

    Raises :class:`FitError` (carrying the residue class and the best
    candidate degree) when no stabilization is visible in the window.
    """
    if d < 2 or d % 2 != 0:
        raise ModelError(f"period must be an even integer >= 2, got {d}")
    if not samples:
        raise FitError("no samples")
    keys = sorted(samples)
    lo, hi = keys[0], keys[-1]
    if keys != list(range(lo, hi + 1)):
        raise FitError("samples must cover a contiguous window")

    polys: list[Polynomial] = []
    for i in range(d):
        blocks = [(m, Fraction(samples[d * m + i])) for m in range(-(-(lo - i) // d), (hi - i) // d + 1)]
        if len(blocks) < 3:
            raise FitError(
                f"residue class {i} has only {len(blocks)} samples", residue=i, best_degree=None
            )
        fitted: Polynomial | None = None
        best = -1
        r = 0
        while r + 1 + (r + 2) <= len(blocks):
            best = r
            top = blocks[len(blocks) - (r + 1) :]
            candidate = _newton_interpolate(top)
            check = blocks[len(blocks) - (r + 1) - (r + 2) : len(blocks) - (r + 1)]
            if all(candidate(m) == v for m, v in check):
                fitted = candidate
                break
            r += 1
        if fitted is None:
            raise FitError(
                f"no polynomial stabilization in residue class {i} "
                f"(tried degrees up to {best})",
                residue=i,
                best_degree=best,
            )
        polys.append(fitted)

    qp = QuasiPolynomial(d, tuple(polys), lo)
    valid_from = lo
    for n in range(hi, lo - 1, -1):
        if qp(n) != Fraction(samples[n]):
            valid_from = n + 1
            break
    return QuasiPolynomial(d, tuple(polys), valid_from)


def from_series(f: RationalFunction, d: int, probe: int) -> LengthFunction:
    """Expand a Hilbert series and fit its positive tail.

    The series is supported in degrees n >= 0, so the negative tail vanishes.
    ``probe`` must be large enough for the fit to stabilize and to leave the
    required core/tail overlap; otherwise a :class:`FitError` asking for a
    larger probe is raised.
    """
    if d < 2 or d % 2 != 0:
        raise ModelError(f"period must be an even integer >= 2, got {d}")
    if probe < 3 * d:
        raise FitError(f"probe window [0, {probe}] is too small; increase probe")
    coeffs = series_coefficients(f, probe)
    values = []
    for n, c in enumerate(coeffs):
        if c.denominator != 1 or c < 0:
            raise ModelError(f"series coefficient at n={n} is {c}; not a length")
        values.append(int(c))
    try:
        qp = fit_quasipoly(dict(enumerate(values)), d)
    except FitError as err:
        raise FitError(
            f"increase probe: {err}", residue=err.residue, best_degree=err.best_degree
        ) from None
    if qp.is_zero():
        pos = Tail.vanishing()
    else:
        need = qp.valid_from + d * (qp.max_degree + 2)
        if need > probe:
            raise FitError(
                f"increase probe: stabilization at n={qp.valid_from} leaves too "
                f"little overlap (need probe >= {need})",
                best_degree=qp.max_degree,
            )
        pos = Tail.quasipoly(qp)
    return LengthFunction(d, 0, tuple(values), pos, Tail.vanishing())
