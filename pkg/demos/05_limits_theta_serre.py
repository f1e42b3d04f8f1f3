"""The limit estimator and the classical specializations.

The multiplicity is also a limit of normalized alternating partial sums.  The
partial sums are evaluated in closed form (Faulhaber summation polynomials on
the quasi-polynomial tail), so n = 10^6 costs the same as n = 10^2.  Two
normalizing constants are provided: s! d^(2s-1) converges to the coefficient
convention, s! d^s to the delta convention.
"""

import json

from qmult import (
    LengthFunction,
    from_series,
    limit_estimate,
    parse_series,
    serre_intersection,
    theta_invariant,
)

lf = from_series(parse_series("t^2/(1-t^2)^2"), d=2, probe=80)

for n in (10**3, 10**4, 10**5, 10**6):
    paper = limit_estimate(lf, 2, n, "paper")
    corrected = limit_estimate(lf, 2, n, "corrected")
    print(f"n={n:>8}: paper ~ {float(paper):.6f}   corrected ~ {float(corrected):.6f}")
# paper -> 2 (= e_coeff), corrected -> 1 (= e_delta)

# Hochster-style theta: homologically indexed lengths with eventually
# constant even/odd values.  theta is the stabilized difference, and equals
# the index-1 multiplicity at minus infinity of the reindexed function.
tor = LengthFunction.from_json_dict(
    json.loads(
        """
        {"d": 2,
         "core": {"start": 0, "values": [5, 2, 5, 2, 5, 2, 5, 2, 5, 2, 5]},
         "pos_tail": {"kind": "quasipoly", "valid_from": 0, "polys": [["5"], ["2"]]},
         "neg_tail": {"kind": "vanishing"}}
        """
    )
)
print("theta          :", theta_invariant(tor))

# Intersection multiplicity over a regular base: the finite alternating sum
# of homological lengths, certified against the Euler characteristic of the
# reindexed length function.
print("intersection   :", serre_intersection([3, 1]))
print("intersection   :", serre_intersection([2, 2]))
