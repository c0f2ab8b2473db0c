"""
Higher-order families and convolution identities
================================================

Raising the twisted kernel to the power h gives the order-h family.  Its
coefficients are multinomial convolutions of the order-1 moments.
"""

from unifamily import TwistedParams, multiple_twisted_polys
from unifamily import verify_multinomial_convolution, verify_sum_of_powers

# (t/(2e^t - 1))^2 = t^2 - 4t^3 + 10t^4 + ..., so y^(2) = [0, 0, 2, -24, 240].
tp = TwistedParams.make(k=1, beta=2, h=2)
print([str(v) for v in multiple_twisted_polys(tp, 0, 4)])

# The convolution identity with single moments inside the product holds exactly.
report = verify_multinomial_convolution(tp, 8)
print(report)

# Each instance also records the variant with order-h values inside the product.
# That variant only coincides with the identity when h = 1.
for inst in report.instances[:4]:
    print(inst.n, inst.lhs, inst.rhs, "variant:", inst.extra["printed_rhs"], inst.extra["printed_ok"])
print(report.notes)

# With x carried by the last factor.
print(verify_sum_of_powers(TwistedParams.make(k=1, beta=2, h=3, w=(3, 1)), 1, 6))
