"""Fermionic integral at q = -1: moment operators, partial sums, Witt checks.

Two objects live here and are kept apart on purpose.

* The *paper-signed operator*: the functional-equation solution for the
  integrand (-1)^(x+1) r^x x^n.  Its moments J_n satisfy
  ``J_n - r sum_j C(n,j) J_j = -2 [n = 0]`` and generate ``2/(r e^t - 1)``.
  This is what the Witt-type formulas for the unified family use.
* The *standard fermionic integral* of r^x x^n, whose moments M_n satisfy
  ``M_n + r sum_j C(n,j) M_j = 2 [n = 0]``.  Only for this integrand do the
  alternating partial sums over [0, p^N) actually converge to the moments
  (when r = 1 mod p); for the signed integrand the sign cancels the
  alternation and the literal limit is 0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import ConvergenceError, SingularOperatorError
from .exactnum import INF, Cyclotomic, as_cyclotomic, cyclo_invert, vp
from .report import VerificationReport
from .series import binomial_convolve
from .twisted import TwistedParams, multiple_twisted_polys, scaled_moments

__all__ = [
    "MomentTable",
    "PartialSumTrace",
    "paper_operator_moments",
    "standard_fermionic_moments",
    "fermionic_partial_sums",
    "verify_functional_equation",
    "witt_cross_check",
    "shifted_moments",
]

PAPER = "paper-signed"
STANDARD = "standard-fermionic"

_ZERO = Cyclotomic.rational(0)
_ONE = Cyclotomic.rational(1)


@dataclass(frozen=True, eq=False)
class MomentTable:
    ratio: Cyclotomic
    mode: str
    moments: tuple

    def residuals(self):
        """Left side minus right side of the defining recurrence, per n."""
        r = self.ratio
        sign = -1 if self.mode == PAPER else 1
        out = []
        for n, m in enumerate(self.moments):
            acc = _ZERO
            for j in range(n + 1):
                acc = acc + self.moments[j] * math.comb(n, j)
            lhs = m + r * acc * sign
            target = (2 * sign) if n == 0 else 0
            out.append(lhs - target)
        return out

    def satisfies_recurrence(self):
        return all(x.is_zero() for x in self.residuals())

    def __len__(self):
        return len(self.moments)

    def __getitem__(self, n):
        return self.moments[n]


def paper_operator_moments(r, n_max):
    """J_0..J_n_max for the signed integrand (-1)^(x+1) r^x x^n."""
    r = as_cyclotomic(r)
    if r == _ONE:
        raise SingularOperatorError(
            "r = 1: the recurrence reads 0 * J_0 = -2, so the moment problem has no solution "
            "(only the series-level t^k prefactor rescues this case)"
        )
    factor = r / (1 - r)
    moments = [2 / (r - 1)]
    for n in range(1, n_max + 1):
        acc = _ZERO
        for j in range(n):
            acc = acc + moments[j] * math.comb(n, j)
        moments.append(factor * acc)
    return MomentTable(r, PAPER, tuple(moments))


def standard_fermionic_moments(r, n_max):
    """M_0..M_n_max for the integrand r^x x^n."""
    r = as_cyclotomic(r)
    if r == -_ONE:
        raise SingularOperatorError("r = -1: the recurrence reads 0 * M_0 = 2")
    inv = cyclo_invert(1 + r)
    moments = [2 * inv]
    for n in range(1, n_max + 1):
        acc = _ZERO
        for j in range(n):
            acc = acc + moments[j] * math.comb(n, j)
        moments.append(-(r * acc) * inv)
    return MomentTable(r, STANDARD, tuple(moments))


def shifted_moments(moments, x):
    """Moments of (x + y)^n from moments of y^n: sum_j C(n,j) M_j x^(n-j)."""
    x = Fraction(x)
    out = []
    for n in range(len(moments)):
        acc = _ZERO
        for j in range(n + 1):
            acc = acc + moments[j] * (math.comb(n, j) * x ** (n - j))
        out.append(acc)
    return out


# ---------------------------------------------------------------------------
# literal partial sums


@dataclass(frozen=True)
class PartialSumTrace:
    p: int
    r: Fraction
    n: int
    limit: Fraction
    depths: tuple
    sums: tuple
    valuations: tuple
    offset: float = field(default=0)

    def is_monotone(self):
        return all(a <= b for a, b in zip(self.valuations, self.valuations[1:]))


def _is_prime(p):
    return p >= 2 and all(p % q for q in range(2, math.isqrt(p) + 1))


def fermionic_partial_sums(p, N_max, r, n, strict=True):
    """S_N = sum_{x < p^N} r^x x^n (-1)^x for N = 1..N_max, with v_p(S_N - M_n).

    With r rational and p odd, (-r)^(p^N) tends to -1 exactly when
    r^(p^N) -> 1, i.e. when v_p(r - 1) >= 1; then
    v_p(S_N - M_n) grows at least like N - offset, and ``offset`` is the
    smallest such constant on the computed range.  ``strict=False`` skips the
    convergence check so non-convergent traces can be inspected.
    """
    r = Fraction(r)
    if not _is_prime(p) or p == 2:
        raise ValueError("p must be an odd prime")
    if N_max < 1 or n < 0:
        raise ValueError("need N_max >= 1 and n >= 0")
    if strict and vp(r - 1, p) < 1:
        raise ConvergenceError(
            f"v_{p}(r - 1) = {vp(r - 1, p)} < 1 for r = {r}: r^(p^N) does not tend to 1 "
            "and the alternating sums do not converge to the moment"
        )
    limit = standard_fermionic_moments(r, n)[n].to_rational()
    sums, vals = [], []
    total = Fraction(0)
    x = 0
    power = Fraction(1)
    for N in range(1, N_max + 1):
        upto = p ** N
        while x < upto:
            term = power * x ** n
            total += -term if x & 1 else term
            power *= r
            x += 1
        sums.append(total)
        vals.append(vp(total - limit, p))
    finite = [N - v for N, v in zip(range(1, N_max + 1), vals) if v != INF]
    offset = max(finite) if finite else 0
    return PartialSumTrace(
        p, r, n, limit, tuple(range(1, N_max + 1)), tuple(sums), tuple(vals), offset
    )


# ---------------------------------------------------------------------------
# functional equation


def _operator_image(moments, r, m, shift, signed):
    """I(f(. + shift)) for f(x) = s(x) r^x x^m, from the moment table."""
    acc = _ZERO
    for j in range(m + 1):
        acc = acc + moments[j] * (math.comb(m, j) * shift ** (m - j))
    acc = acc * r ** shift
    if signed and shift % 2:
        acc = -acc
    return acc


def verify_functional_equation(r, m_list, shifts=(1, 2, 3), mode=PAPER):
    """I(f_n) + (-1)^(n-1) I(f) = 2 sum_{x<n} f(x) (-1)^(n-1-x), f(x) = s(x) r^x x^m.

    ``s(x)`` is (-1)^(x+1) in paper-signed mode and 1 in standard mode;
    n = 1 is the defining equation I(f_1) + I(f) = 2 f(0).
    """
    r = as_cyclotomic(r)
    m_list = list(m_list)
    signed = mode == PAPER
    top = max(m_list) if m_list else 0
    table = paper_operator_moments(r, top) if signed else standard_fermionic_moments(r, top)
    report = VerificationReport(
        "funceq", {"r": str(r), "mode": mode, "shifts": list(shifts), "m": m_list}
    )
    for m in m_list:
        for n in shifts:
            lhs = _operator_image(table.moments, r, m, n, signed)
            lhs = lhs + (table[m] if (n - 1) % 2 == 0 else -table[m])
            rhs = _ZERO
            for x in range(n):
                fx = r ** x * (x ** m)  # 0^0 = 1
                if signed and x % 2 == 0:
                    fx = -fx
                if (n - 1 - x) % 2:
                    fx = -fx
                rhs = rhs + fx
            report.add(m, lhs, rhs * 2, shift=n)
    return report


# ---------------------------------------------------------------------------
# Witt-type cross-check


def witt_cross_check(tp, x, n_max):
    """Moment path against series path for the twisted family.

    Checks, for n = 0..n_max,

    * numbers:      a^-b 2^-k J_n            = y_(n+k)(k,a,b) / (k! C(n+k,k))
    * polynomials:  a^-b 2^-k J_n(x)         = y_(n+k)(x:k,a,b) / (k! C(n+k,k))
    * order h:      a^-hb 2^-hk (J * ... * J(x))_n = y^(h)_(n+kh)(x) / ((kh)! C(n+kh,kh))

    where J are the signed-integrand operator moments at r = w (beta/a)^b, J(x) their
    x-shift and * the binomial convolution.  The right sides come from
    series division and never touch the moment recurrence.
    """
    if not tp.regular:
        raise SingularOperatorError(
            f"r = w (beta/a)^b = 1 for {tp.as_dict()}: Bernoulli-type parameters have no "
            "moment representation; the series exists only thanks to the t^k prefactor"
        )
    x = Fraction(x)
    k, h = tp.k, tp.h
    a_b = tp.base.a_b
    report = VerificationReport("witt", {**tp.as_dict(), "x": str(x)})
    J = paper_operator_moments(tp.ratio, n_max).moments
    Jx = shifted_moments(J, x)
    single_scale = Fraction(1, 2 ** k) / a_b

    tp1 = tp.with_h(1)
    y_num = scaled_moments(multiple_twisted_polys(tp1, 0, n_max + k), k)
    y_pol = scaled_moments(multiple_twisted_polys(tp1, x, n_max + k), k)
    for n in range(n_max + 1):
        report.add(n, J[n] * single_scale, y_num[n], part="numbers")
    for n in range(n_max + 1):
        report.add(n, Jx[n] * single_scale, y_pol[n], part="polynomials")

    conv = Jx
    for _ in range(h - 1):
        conv = binomial_convolve(J, conv)
    multi_scale = single_scale ** h
    y_multi = scaled_moments(multiple_twisted_polys(tp, x, n_max + k * h), k * h)
    for n in range(n_max + 1):
        report.add(n, conv[n] * multi_scale, y_multi[n], part=f"order-{h}")
    report.notes.append(
        "moments are the functional-equation operator for (-1)^(x+1) r^x x^n; "
        "the literal alternating-sum limit of that integrand is 0, see fermionic_partial_sums"
    )
    return report
