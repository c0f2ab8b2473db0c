"""
Classical numbers as special cases
==================================

One generating function, 2 (t/2)^k e^(xt) / (beta^b e^t - a^b), covers the
Bernoulli, Euler and Genocchi families.  This script picks the parameters
that produce each of them and prints the first few values.
"""

from fractions import Fraction

from unifamily import TwistedParams, UnifiedParams, paper_operator_moments, twisted_numbers
from unifamily import unified_numbers, unified_polynomials

# k = 1 and a = b = beta = 1 gives t/(e^t - 1): the Bernoulli numbers.
bernoulli = UnifiedParams(k=1, a=1, b=1, beta=1)
for n, value in enumerate(unified_numbers(bernoulli, 12)):
    print(f"B_{n} = {value}")

# The polynomials follow from the numbers by the Appell rule.
for n, poly in enumerate(unified_polynomials(bernoulli, 4)):
    print(f"B_{n}(x) = {poly}")

# A twist by w = -1 flips the sign of e^t and gives -t/(e^t + 1), which is
# -1/2 times the Genocchi generating function.
genocchi = TwistedParams.make(k=1, w=(2, 1))
print("-G_n/2:", [str(v) for v in twisted_numbers(genocchi, 8)])

# With k = 0 and beta = 2 the numbers are 2 (-1)^n sum_m m^n / 2^m.
print("beta = 2:", [str(v) for v in unified_numbers(UnifiedParams(0, 1, 1, 2), 5)])

# The moment recurrence at r = -1 reproduces -E_n(0) for the Euler polynomials.
print("-E_n(0):", [str(v) for v in paper_operator_moments(-1, 8).moments])

# Half-integer parameters work the same way: everything stays exact.
print("a = 3/2:", [str(v) for v in unified_numbers(UnifiedParams(1, Fraction(3, 2), 1, 2), 4)])
