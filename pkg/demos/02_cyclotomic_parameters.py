"""
Roots of unity as parameters
============================

beta and the twist w may be roots of unity.  Values then live in a
cyclotomic field and are stored as exact coordinates over a power basis.
"""

from unifamily import TwistedParams, UnifiedParams, complex_embed, make_root_of_unity
from unifamily import twisted_numbers, unified_numbers, verify_symmetry

zeta3 = make_root_of_unity(3, 1)
print("zeta_3 =", zeta3, "and zeta_3^2 + zeta_3 + 1 =", zeta3 ** 2 + zeta3 + 1)

# beta = zeta_3 with k = 1.  The printed form uses z3 for the generator.
params = UnifiedParams(k=1, a=1, b=1, beta=zeta3)
for n, value in enumerate(unified_numbers(params, 4)):
    print(f"y_{n} = {value}    ~ {complex(complex_embed(value)):.6f}")

# Twisting the degenerate point by zeta_3 removes the pole entirely:
# the denominator is zeta_3 e^t - 1, which does not vanish at t = 0.
twisted = TwistedParams.make(k=0, w=(3, 1))
print("twisted y_0 =", twisted_numbers(twisted, 0)[0])

# The reflection formula relates (beta, a) to (1/beta, 1/a) at 1 - x and holds
# exactly in Q(zeta_3).
report = verify_symmetry(params, x=1, n_max=10)
print(report)
