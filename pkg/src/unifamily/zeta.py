"""Multiple twisted zeta function and its values at negative integers.

The h-fold sum over (n_1, ..., n_h) depends only on m = n_1 + ... + n_h, so
it collapses to

    pref * sum_{m >= 1} C(m+h-1, h-1) rho^m m^(-s),    rho = w (beta/a)^b,

with ``pref = 2^(h(1-k)) (-1)^h a^(-bh)``.  The factor a^(-bh) comes from
1/(w beta^b e^t - a^b) = -a^(-b) sum (rho e^t)^n; ``strict_paper=True``
drops it, which is only consistent with the exact values when a^b = 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import mpmath

from .errors import ConvergenceError
from .exactnum import complex_embed
from .report import VerificationReport
from .twisted import TwistedParams, multiple_twisted_numbers, scaled_moments

__all__ = [
    "ZetaQuery",
    "ZetaResult",
    "zeta_eval",
    "zeta_brute_force",
    "interpolation_check",
    "excluded_term",
]

_S_LIMIT = 10 ** 6
_TAIL_SCAN_LIMIT = 10 ** 6


@dataclass(frozen=True)
class ZetaQuery:
    s: complex
    tp: TwistedParams
    M: int = 200
    precision: int = 30
    strict_paper: bool = False

    def __post_init__(self):
        if self.M < 1:
            raise ValueError("number of terms must be positive")
        if self.precision < 1:
            raise ValueError("precision must be positive")


@dataclass(frozen=True)
class ZetaResult:
    value: mpmath.mpc
    tail_bound: float
    terms_used: int


def _prefactor(tp, strict_paper):
    k, h = tp.k, tp.h
    pref = Fraction(2) ** (h * (1 - k)) * (-1) ** h
    if not strict_paper:
        pref /= tp.base.a_b ** h
    return pref


def excluded_term(tp, strict_paper=False):
    """Contribution of the all-zero tuple (0^0 = 1) missing from the zeta sum at s = 0."""
    return _prefactor(tp, strict_paper)


def _abs_ratio(tp, precision):
    """|rho| with an exact comparison against 1 whenever |rho|^2 is rational."""
    rho = tp.ratio
    norm2 = rho * rho.conjugate()
    if norm2.is_rational():
        q = norm2.to_rational()
        with mpmath.workdps(precision + 10):
            return q < 1, mpmath.sqrt(mpmath.mpf(q.numerator) / q.denominator)
    with mpmath.workdps(precision + 10):
        val = abs(complex_embed(rho, precision))
        return val < 1, val


def _tail_bound(abs_rho, h, sigma, M, scale):
    """Certified bound on sum_{m > M} C(m+h-1,h-1) |rho|^m m^sigma, times scale.

    Terms t_m have ratio t_(m+1)/t_m <= q_m = |rho| (m+h)/(m+1) ((m+1)/m)^max(sigma,0),
    which decreases in m; once q_m < 1 the rest is bounded by t_m/(1 - q_m).
    """
    sig_pos = max(sigma, 0)

    def term(m):
        return mpmath.binomial(m + h - 1, h - 1) * abs_rho ** m * mpmath.power(m, sigma)

    def ratio_bound(m):
        return abs_rho * mpmath.mpf(m + h) / (m + 1) * (mpmath.mpf(m + 1) / m) ** sig_pos

    acc = mpmath.mpf(0)
    m = M + 1
    while True:
        q = ratio_bound(m)
        if q < 1:
            acc += term(m) / (1 - q)
            break
        acc += term(m)
        m += 1
        if m - M > _TAIL_SCAN_LIMIT:
            return math.inf
    return float(acc * scale)


def zeta_eval(q):
    """Evaluate the unified multiple twisted zeta function by the collapsed sum."""
    tp = q.tp
    s = complex(q.s)
    if abs(s) > _S_LIMIT:
        raise ValueError(f"|s| = {abs(s):.3g} exceeds the overflow guard {_S_LIMIT}")
    inside, abs_rho = _abs_ratio(tp, q.precision)
    if not inside:
        raise ConvergenceError(
            f"|w (beta/a)^b| = {mpmath.nstr(abs_rho, 10)} >= 1: the zeta series diverges"
        )
    h = tp.h
    pref = _prefactor(tp, q.strict_paper)
    with mpmath.workdps(q.precision + 10):
        rho = complex_embed(tp.ratio, q.precision)
        ms = mpmath.mpc(-s.real, -s.imag)
        terms = []
        power = mpmath.mpc(1)
        for m in range(1, q.M + 1):
            power *= rho
            terms.append(math.comb(m + h - 1, h - 1) * power * mpmath.power(m, ms))
        pref_mp = mpmath.mpf(pref.numerator) / pref.denominator
        value = pref_mp * mpmath.fsum(terms)
        tail = _tail_bound(abs_rho, h, -s.real, q.M, abs(pref_mp))
    return ZetaResult(value, tail, q.M)


def zeta_brute_force(tp, s, M, precision=30, strict_paper=False):
    """Literal h-fold sum over tuples with 0 < n_1 + ... + n_h <= M (small M only)."""
    import itertools

    h = tp.h
    pref = _prefactor(tp, strict_paper)
    with mpmath.workdps(precision + 10):
        rho = complex_embed(tp.ratio, precision)
        ms = -mpmath.mpc(s)
        terms = []
        for tup in itertools.product(range(M + 1), repeat=h):
            m = sum(tup)
            if m == 0 or m > M:
                continue
            terms.append(rho ** m * mpmath.power(m, ms))
        return mpmath.mpf(pref.numerator) / pref.denominator * mpmath.fsum(terms)


def interpolation_check(tp, n_range, M=200, tol=1e-9, precision=30, strict_paper=False):
    """Compare zeta(-n) with y^(h)_(n+kh)(k,a,b) / ((kh)! C(n+kh,kh)) for n in n_range.

    At n = 0 the zeta sum misses the all-zero tuple, so the comparison is
    made after adding :func:`excluded_term` back; the instance records it.
    """
    n_range = list(n_range)
    k, h = tp.k, tp.h
    report = VerificationReport(
        "zeta-interp",
        {**tp.as_dict(), "M": M, "tol": tol, "strict_paper": strict_paper},
    )
    if strict_paper and tp.base.a_b != 1:
        report.notes.append(
            "strict-paper mode omits a^(-bh); the interpolation is only claimed for a^b = 1"
        )
    top = max(n_range) if n_range else 0
    exact = scaled_moments(multiple_twisted_numbers(tp, top + k * h), k * h)
    correction = excluded_term(tp, strict_paper)
    for n in n_range:
        res = zeta_eval(ZetaQuery(complex(-n, 0), tp, M, precision, strict_paper))
        with mpmath.workdps(precision + 10):
            target = complex_embed(exact[n], precision)
            value = res.value
            extra = {}
            if n == 0:
                value = value + mpmath.mpf(correction.numerator) / correction.denominator
                extra["correction"] = str(correction)
            diff = float(abs(value - target))
        bound = max(tol, res.tail_bound)
        report.add(
            n,
            mpmath.nstr(res.value, precision),
            exact[n],
            ok=diff <= bound,
            difference=diff,
            tail_bound=res.tail_bound,
            **extra,
        )
    return report
