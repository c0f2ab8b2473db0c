"""Truncated Laurent series in t over cyclotomic coefficients.

A series stores a tight valuation ``v`` and coefficients ``c_0..c_T`` for
``sum c_i t^(v+i)``; everything beyond ``t^(v+T)`` is unknown.  The
absolute precision ``v + T`` is what propagates through arithmetic: a
product or quotient keeps the smaller relative order of its operands, a sum
keeps the smaller absolute precision.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .errors import InsufficientTruncationError, PoleError, SeriesZeroDivisionError
from .exactnum import Cyclotomic, as_cyclotomic, cyclo_invert

__all__ = [
    "TruncatedLaurentSeries",
    "exp_linear",
    "series_mul",
    "series_div",
    "series_pow",
    "extract_y",
    "default_truncation",
    "binomial_convolve",
]

_ZERO = Cyclotomic.rational(0)
_ONE = Cyclotomic.rational(1)


def default_truncation(n_max, k=0, h=1):
    """Coefficients needed for index n_max plus four guard terms."""
    return n_max + k * h + 4


class TruncatedLaurentSeries:
    __slots__ = ("_valuation", "_coeffs")

    def __init__(self, coeffs, valuation=0):
        coeffs = [as_cyclotomic(c) for c in coeffs]
        lead = 0
        while lead < len(coeffs) and coeffs[lead].is_zero():
            lead += 1
        if lead == len(coeffs):
            # canonical zero: valuation 0, zeros through the known precision
            prec = valuation + len(coeffs) - 1
            self._valuation = 0
            self._coeffs = (_ZERO,) * max(prec + 1, 0)
        else:
            self._valuation = valuation + lead
            self._coeffs = tuple(coeffs[lead:])

    @classmethod
    def constant(cls, c, T):
        return cls([c] + [_ZERO] * T)

    @classmethod
    def monomial(cls, c, power, T):
        """c * t^power, known through relative order T."""
        return cls([c] + [_ZERO] * T, valuation=power)

    @property
    def valuation(self):
        return self._valuation

    @property
    def coeffs(self):
        return self._coeffs

    @property
    def truncation_order(self):
        return len(self._coeffs) - 1

    @property
    def precision(self):
        """Highest power of t whose coefficient is known."""
        return self._valuation + len(self._coeffs) - 1

    def is_zero(self):
        return all(c.is_zero() for c in self._coeffs)

    def coeff(self, power):
        """Coefficient of t^power (zero below the valuation)."""
        if power > self.precision:
            raise InsufficientTruncationError(
                f"coefficient of t^{power} requested but series is known only through t^{self.precision}"
            )
        i = power - self._valuation
        if i < 0:
            return _ZERO
        return self._coeffs[i]

    def truncate(self, precision):
        """Drop coefficients above t^precision."""
        if precision >= self.precision:
            return self
        keep = precision - self._valuation + 1
        return TruncatedLaurentSeries(self._coeffs[: max(keep, 0)], self._valuation)

    def shift(self, k):
        """Multiply by t^k."""
        if self.is_zero():
            return TruncatedLaurentSeries([_ZERO] * (len(self._coeffs) + k))
        return TruncatedLaurentSeries(self._coeffs, self._valuation + k)

    def scale(self, c):
        c = as_cyclotomic(c)
        return TruncatedLaurentSeries([c * x for x in self._coeffs], self._valuation)

    def __add__(self, other):
        if not isinstance(other, TruncatedLaurentSeries):
            other = TruncatedLaurentSeries.constant(other, max(self.precision, 0))
        lo = min(self._valuation, other._valuation)
        hi = min(self.precision, other.precision)
        return TruncatedLaurentSeries(
            [self.coeff(p) + other.coeff(p) for p in range(lo, hi + 1)], lo
        )

    __radd__ = __add__

    def __neg__(self):
        return TruncatedLaurentSeries([-c for c in self._coeffs], self._valuation)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, TruncatedLaurentSeries):
            return series_mul(self, other)
        return self.scale(other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, TruncatedLaurentSeries):
            return series_div(self, other)
        return self.scale(cyclo_invert(as_cyclotomic(other)))

    def __pow__(self, h):
        return series_pow(self, h)

    def __eq__(self, other):
        if not isinstance(other, TruncatedLaurentSeries):
            return NotImplemented
        return self._valuation == other._valuation and self._coeffs == other._coeffs

    __hash__ = None

    def __repr__(self):
        terms = ", ".join(str(c) for c in self._coeffs)
        return f"TruncatedLaurentSeries([{terms}], valuation={self._valuation})"


def exp_linear(c, T):
    """Truncation of exp(c t) through t^T."""
    if T < 0:
        raise ValueError("truncation order must be non-negative")
    c = as_cyclotomic(c)
    coeffs = [_ONE]
    term = _ONE
    for n in range(1, T + 1):
        term = term * c / n
        coeffs.append(term)
    return TruncatedLaurentSeries(coeffs)


def _convolve(a, b, length):
    out = []
    for n in range(length):
        acc = _ZERO
        for i in range(max(0, n - len(b) + 1), min(n, len(a) - 1) + 1):
            x = a[i]
            y = b[n - i]
            if x.is_zero() or y.is_zero():
                continue
            acc = acc + x * y
        out.append(acc)
    return out


def series_mul(f, g):
    """Cauchy product; valuations add and the smaller relative order is kept."""
    T = min(f.truncation_order, g.truncation_order)
    if f.is_zero() or g.is_zero():
        prec = min(f.precision + g.valuation, g.precision + f.valuation)
        return TruncatedLaurentSeries([_ZERO] * max(prec + 1, 0))
    return TruncatedLaurentSeries(
        _convolve(f.coeffs, g.coeffs, T + 1), f.valuation + g.valuation
    )


def series_div(num, den):
    """num / den by back-substitution on the unit part of den."""
    if not den.coeffs:
        raise InsufficientTruncationError(
            "denominator has no known coefficients; its valuation cannot be established"
        )
    if den.is_zero():
        raise SeriesZeroDivisionError(
            f"denominator vanishes through t^{den.precision}; raise the truncation order "
            "if it is not identically zero"
        )
    T = min(num.truncation_order, den.truncation_order)
    if num.is_zero():
        prec = num.precision - den.valuation
        return TruncatedLaurentSeries([_ZERO] * max(prec + 1, 0))
    a, d = num.coeffs, den.coeffs
    inv0 = cyclo_invert(d[0])
    q = []
    for n in range(T + 1):
        acc = a[n]
        for j in range(1, min(n, len(d) - 1) + 1):
            if not d[j].is_zero() and not q[n - j].is_zero():
                acc = acc - d[j] * q[n - j]
        q.append(acc * inv0)
    return TruncatedLaurentSeries(q, num.valuation - den.valuation)


def series_pow(f, h):
    """f^h for a positive integer h, by repeated squaring."""
    if not isinstance(h, int) or h < 1:
        raise ValueError("power must be a positive integer")
    result = None
    base = f
    while h:
        if h & 1:
            result = base if result is None else series_mul(result, base)
        h >>= 1
        if h:
            base = series_mul(base, base)
    return result


def extract_y(f, n):
    """n! times the coefficient of t^n: the exponential-generating-function term."""
    if not f.is_zero() and f.valuation < 0:
        raise PoleError(f"series has a pole of order {-f.valuation} at t = 0")
    if n < 0:
        raise ValueError("index must be non-negative")
    if n > f.precision:
        raise InsufficientTruncationError(
            f"y_{n} needs t^{n} but the series is known only through t^{f.precision}"
        )
    return f.coeff(n) * math.factorial(n)


def from_rationals(values, valuation=0):
    """Convenience constructor from rational-like values."""
    return TruncatedLaurentSeries([Fraction(v) for v in values], valuation)


def binomial_convolve(a, b):
    """c_n = sum_j C(n, j) a_j b_(n-j): the product of two exponential generating functions."""
    n_terms = min(len(a), len(b))
    out = []
    for n in range(n_terms):
        acc = _ZERO
        for j in range(n + 1):
            x, y = a[j], b[n - j]
            if x.is_zero() or y.is_zero():
                continue
            acc = acc + x * y * math.comb(n, j)
        out.append(acc)
    return out
