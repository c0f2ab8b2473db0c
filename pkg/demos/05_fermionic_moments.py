"""
Moments of the fermionic integral
=================================

The integral at q = -1 is pinned down by I(f(. + 1)) + I(f) = 2 f(0).
For f(x) = r^x x^n this yields a triangular recurrence for the moments, and
the polynomial family is a rescaling of those moments.
"""

from fractions import Fraction

from unifamily import TwistedParams, fermionic_partial_sums, paper_operator_moments
from unifamily import standard_fermionic_moments, verify_functional_equation, witt_cross_check

# Signed integrand (-1)^(x+1) r^x x^n: the moments generate 2/(r e^t - 1).
print("J(r=2):", [str(v) for v in paper_operator_moments(2, 5).moments])

# Plain integrand r^x x^n: generates 2/(r e^t + 1).  At r = 1 these are E_n(0).
print("M(r=1):", [str(v) for v in standard_fermionic_moments(1, 5).moments])

# Moment path against series path: a^-b 2^-k J_n = y_(n+k) / (k! C(n+k, k)).
print(witt_cross_check(TwistedParams.make(k=2, a=2, beta=Fraction(1, 2), w=(3, 1), h=2), 0, 6))

# The shift-n functional equation follows from the defining one.
print(verify_functional_equation(Fraction(3, 5), range(6), shifts=(1, 2, 3)))

# Literal alternating sums over [0, p^N) converge p-adically to M_n when
# r = 1 mod p.  The valuation of the error grows at least like N.
trace = fermionic_partial_sums(5, 5, 6, 0)
print("limit", trace.limit, "valuations", trace.valuations)

# It need not grow monotonically: extra cancellation can happen early.
print("p=5, r=-4, n=3:", fermionic_partial_sums(5, 4, -4, 3).valuations)
