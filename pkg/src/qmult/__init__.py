"""Exact multiplicity theory for graded length functions.

The library works with the numerical shadow of a pair of objects in a graded
setting: a total length function on the integers with quasi-polynomial (or
vanishing) tails.  On top of that model it computes Hilbert quasi-polynomials
and complexity, Herbrand differences, positive and negative multiplicities
under both stabilization conventions, Koszul reduction chains, theta and
intersection-multiplicity specializations, and a closed-form limit estimator.
All arithmetic is exact.
"""

from __future__ import annotations

from .differences import (
    alternating_binomial_moment,
    delta,
    delta_neg,
    faulhaber_sum,
    shifted_binomial_moment,
    summation_polynomial,
)
from .exact import (
    NotExpandableError,
    Polynomial,
    RationalFunction,
    format_rational,
    parse_rational,
    series_coefficients,
)
from .koszul import (
    AxiomsReport,
    KoszulChain,
    KoszulError,
    KoszulStep,
    axioms_check,
    koszul_triangle,
    reduce_chain,
)
from .lengths import (
    FitError,
    LengthFunction,
    ModelError,
    QuasiPolynomial,
    Tail,
    fit_quasipoly,
    from_series,
)
from .multiplicity import (
    Convention,
    MultiplicityError,
    MultiplicityReport,
    WindowResult,
    euler_characteristic,
    herbrand,
    limit_estimate,
    multiplicity_neg,
    multiplicity_pos,
    serre_intersection,
    theta_invariant,
    vanishing_window_check,
)
from .series import (
    SeriesSemanticError,
    SeriesSyntaxError,
    parse_expression,
    parse_series,
)

__version__ = "0.1.0"

__all__ = [
    "AxiomsReport",
    "Convention",
    "FitError",
    "KoszulChain",
    "KoszulError",
    "KoszulStep",
    "LengthFunction",
    "ModelError",
    "MultiplicityError",
    "MultiplicityReport",
    "NotExpandableError",
    "Polynomial",
    "QuasiPolynomial",
    "RationalFunction",
    "SeriesSemanticError",
    "SeriesSyntaxError",
    "Tail",
    "WindowResult",
    "alternating_binomial_moment",
    "axioms_check",
    "delta",
    "delta_neg",
    "euler_characteristic",
    "faulhaber_sum",
    "fit_quasipoly",
    "format_rational",
    "from_series",
    "herbrand",
    "koszul_triangle",
    "limit_estimate",
    "multiplicity_neg",
    "multiplicity_pos",
    "parse_expression",
    "parse_rational",
    "parse_series",
    "reduce_chain",
    "serre_intersection",
    "series_coefficients",
    "shifted_binomial_moment",
    "summation_polynomial",
    "theta_invariant",
    "vanishing_window_check",
]
