"""Multiplicities and the two stabilization conventions.

The Herbrand difference h(n) alternating-sums lambda over a window of d
consecutive degrees.  For s at or above the complexity, the (s-1)-fold
index-d difference of h stabilizes; that stabilized value is the delta
convention.  The coefficient convention is (s-1)! d^(s-1) sum_i (-1)^i a_i
with a_i the degree s-1 coefficients of the Hilbert polynomials.  The two
differ by the factor d^(s-1), and this library keeps both first-class rather
than silently picking one.
"""

from qmult import from_series, herbrand, multiplicity_pos, parse_series

# The family t^c/(1-t^2)^c (intersecting coordinate subspaces) makes the
# split visible at c = 2: lambda(2m) = m, lambda(odd) = 0.
lf = from_series(parse_series("t^2/(1-t^2)^2"), d=2, probe=80)

print("h at 4..9      :", [herbrand(lf, n) for n in range(4, 10)])
# h(2m) = m and h(2m+1) = m+1, so the first index-2 difference of h is
# identically 1 -- while the coefficient formula gives 1! * 2^1 * (1-0) = 2.

report = multiplicity_pos(lf, 2)
print("cx             :", report.cx)
print("e_delta        :", report.e_delta)  # stabilized difference: 1
print("e_coeff        :", report.e_coeff)  # coefficient formula:   2
print("leading a_i    :", [str(a) for a in report.leading])
print("stabilized at  :", report.stabilization_index)

# At s = 1 the factor d^(s-1) is 1 and the conventions agree.
even3 = from_series(parse_series("3*t^2/(1-t^2)"), d=2, probe=40)
r1 = multiplicity_pos(even3, 1)
print("s=1 family     : e_delta =", r1.e_delta, ", e_coeff =", r1.e_coeff)

# Above the complexity every multiplicity vanishes, under both conventions.
r3 = multiplicity_pos(lf, 3)
print("s above cx     :", r3.e_delta, r3.e_coeff)

# Shifting the input by one degree flips the sign; shifting by d fixes it.
print("shift by 1     :", multiplicity_pos(lf.shift(1), 2).e_delta)
print("shift by d     :", multiplicity_pos(lf.shift(2), 2).e_delta)
