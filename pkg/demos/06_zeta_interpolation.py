"""
Zeta values at negative integers
================================

Summing the twisted series over h-tuples gives a zeta-type function whose
values at s = -n are the scaled family coefficients.
"""

from fractions import Fraction

from unifamily import TwistedParams, ZetaQuery, interpolation_check, zeta_eval

tp = TwistedParams.make(k=0, beta=Fraction(1, 2), h=2)
for s in (0, -1, -2, 1.5, complex(0.5, 2)):
    result = zeta_eval(ZetaQuery(s, tp, M=200))
    print(f"zeta({s}) = {complex(result.value):.12g}   tail <= {result.tail_bound:.1e}")

# The comparison with exact values; n = 0 needs the all-zero tuple added back.
report = interpolation_check(tp, range(0, 7))
for inst in report.instances:
    print(inst.n, inst.rhs, inst.extra)

# With a != 1 the series carries a factor a^(-bh).  Dropping it breaks the match.
tp = TwistedParams.make(k=1, a=2, beta=Fraction(1, 2))
print(interpolation_check(tp, range(1, 4)).status,
      interpolation_check(tp, range(1, 4), strict_paper=True).status)
