"""
Multiplication formulas and Dirichlet characters
================================================

The distribution formula rewrites y_n at (beta, a) as a sum over d shifted
values at (beta^d, a^d).  A character chi mod d weights the same sum.
"""

from fractions import Fraction

from unifamily import DirichletCharacter, UnifiedParams, char_numbers
from unifamily import verify_char_distribution, verify_distribution

bernoulli = UnifiedParams(1, 1, 1, 1)

# d = 3 is the classical B_n(x) = 3^(n-1) sum_j B_n((x+j)/3).
print(verify_distribution(bernoulli, 3, Fraction(1, 5), 10))

# Characters come from a small text table: modulus, root order, then j e lines.
chi = DirichletCharacter.from_text(
    """
    d=3
    m=2
    1 0
    2 1
    """
)
params = UnifiedParams(0, 1, 1, 2)
print("char numbers:", [str(v) for v in char_numbers(chi, params, 4)])
print(verify_char_distribution(chi, params, 0, 8))

# The principal character mod 1 gives back the plain family.
print("principal mod 1:", [str(v) for v in char_numbers(DirichletCharacter.principal(1), params, 3)])

# Tables are checked: chi(1) = 1, every unit listed, multiplicativity.
try:
    DirichletCharacter.from_text("d=5\nm=4\n1 0\n2 1\n3 1\n4 2\n")
except ValueError as exc:
    print("rejected:", exc)
