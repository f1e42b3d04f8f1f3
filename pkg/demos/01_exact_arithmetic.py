"""Exact arithmetic: polynomials, rational functions, power series.

Everything in the library is built on fractions.Fraction, so there is no
rounding anywhere: expanding a rational function to a million terms gives the
same numbers a hand computation would.
"""

from fractions import Fraction

from qmult import Polynomial, RationalFunction, parse_series, series_coefficients

t = Polynomial.t()

# Polynomials are dense tuples of rationals, constant term first.
p = (2 * t + 1) * (2 * t + 2)
print("(2t+1)(2t+2)        =", p)  # 4*t^2 + 6*t + 2
print("degree, leading      =", p.leading_term())

# The zero polynomial reports degree -1; that convention threads through
# everything built on top (complexity of a vanishing tail is 0 because of it).
print("zero degree          =", Polynomial().degree)

# shift(c) expands g(t + c) exactly.
g = t**2
print("g(t+1)               =", g.shift(1))

# Rational functions normalize the denominator's constant term to 1 and
# compare by cross-multiplication; no gcd is ever computed.
a = RationalFunction(t, Polynomial((1, -1)))
b = RationalFunction(t * (t + 1), Polynomial((1, -1)) * (t + 1))
print("t/(1-t) == t(1+t)/((1-t)(1+t)):", a == b)

# Series expansion uses the linear recurrence given by the denominator,
# costing O(n * deg den) exact operations.
f = parse_series("1/(1-t)^3")
print("1/(1-t)^3 up to t^6  =", [int(c) for c in series_coefficients(f, 6)])

f = parse_series("t^2/(1-t^2)^2")
print("t^2/(1-t^2)^2        =", [int(c) for c in series_coefficients(f, 10)])

# Coefficients can be any rationals when the input has them.
f = parse_series("1/(2-t)")
print("1/(2-t)              =", [str(c) for c in series_coefficients(f, 4)])
assert series_coefficients(f, 0)[0] == Fraction(1, 2)
