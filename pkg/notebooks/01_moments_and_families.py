"""Moments from Pearson data.

A classical family is pinned down by five rationals (a, b, c, d, e): the
polynomials phi = a x^2 + b x + c and psi = d x + e.  Given mu_0, the
three-term recurrence

    (n a + d) mu_{n+1} + (n b + e) mu_n + n c mu_{n-1} = 0

produces every other moment, exactly.
"""

from fractions import Fraction

from classicalseq import (FIXTURES, MomentSequence, classify_family, derive_sigma,
                          generate_moments, jacobi, laguerre, verify_recurrence)

print("Fixture moments, mu_0..mu_8")
for name, fx in FIXTURES.items():
    m = generate_moments(fx.pearson, fx.mu0, 4)
    tag = classify_family(fx.pearson)
    print(f"  {name:9s} {tag.family.value:8s} {[str(v) for v in m]}")

# Parameters are ordinary rationals, so a Jacobi weight with alpha = 1/2,
# beta = 3/2 needs nothing special.
jac = jacobi(Fraction(1, 2), Fraction(3, 2))
print("\nJacobi(1/2, 3/2) data:", [str(x) for x in jac.as_tuple()])
print("  moments:", [str(v) for v in generate_moments(jac, 1, 3)])

# Multiplying the functional by phi gives the sigma sequence.  For Laguerre
# with phi = x, sigma_n is just mu_{n+1}.
lag = generate_moments(laguerre(0), 1, 4)
sig = derive_sigma(lag)
print("\nLaguerre mu   :", [str(v) for v in lag])
print("Laguerre sigma:", [str(v) for v in sig])
print("sigma satisfies the shifted recurrence:", verify_recurrence(sig))

# A hand-edited list is accepted as data, but the recurrence check notices.
edited = MomentSequence((1, 1, 2, 6, 25), laguerre(0))
print("edited list passes the recurrence:", verify_recurrence(edited))
