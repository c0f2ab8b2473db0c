"""Exact arithmetic for the unified Bernoulli/Euler/Genocchi polynomial family.

The family is defined by the generating function

    2 (t/2)^k e^(x t) / (beta^b e^t - a^b) = sum_n y_(n,beta)(x: k, a, b) t^n / n!

with twisted (w beta^b in the denominator), multiple (h-th power) and
Dirichlet-character variants.  Values live in cyclotomic fields and are
computed exactly; every identity checker returns a
:class:`~unifamily.report.VerificationReport`.
"""

from .errors import (
    ConvergenceError,
    ExpressionParseError,
    InsufficientTruncationError,
    PoleError,
    RegularityError,
    SeriesZeroDivisionError,
    SingularOperatorError,
    UnifamilyError,
)
from .exactnum import Cyclotomic, RootOfUnity, complex_embed, cyclo_invert, make_root_of_unity, vp
from .padic import (
    fermionic_partial_sums,
    paper_operator_moments,
    standard_fermionic_moments,
    verify_functional_equation,
    witt_cross_check,
)
from .report import VerificationReport
from .series import TruncatedLaurentSeries, extract_y, series_div, series_mul, series_pow
from .twisted import (
    TwistedParams,
    multiple_twisted_numbers,
    multiple_twisted_polys,
    twisted_numbers,
    twisted_values,
    verify_multinomial_convolution,
    verify_sum_of_powers,
)
from .unified import (
    DirichletCharacter,
    UnifiedParams,
    char_numbers,
    char_values,
    unified_numbers,
    unified_polynomials,
    unified_values,
    verify_binomial_convolution,
    verify_char_distribution,
    verify_distribution,
    verify_symmetry,
)
from .zeta import ZetaQuery, interpolation_check, zeta_eval

__version__ = "0.1.0"
