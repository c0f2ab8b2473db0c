"""Twisted and multiple twisted families.

Twisting by a root of unity w replaces the denominator with
``w beta^b e^t - a^b``; the order-h family takes the h-th power of that
kernel, optionally times e^(x t).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from .errors import PoleError, RegularityError
from .exactnum import Cyclotomic, RootOfUnity
from .report import VerificationReport
from .series import (
    binomial_convolve,
    default_truncation,
    exp_linear,
    extract_y,
    series_mul,
    series_pow,
)
from .unified import UnifiedParams, generating_kernel

__all__ = [
    "TwistedParams",
    "twisted_numbers",
    "twisted_values",
    "multiple_twisted_polys",
    "multiple_twisted_numbers",
    "scaled_moments",
    "verify_multinomial_convolution",
    "verify_sum_of_powers",
]

_ONE = Cyclotomic.rational(1)


@dataclass(frozen=True, eq=False)
class TwistedParams:
    base: UnifiedParams
    w: RootOfUnity = RootOfUnity(1, 0)
    h: int = 1

    def __post_init__(self):
        if not isinstance(self.h, int) or self.h < 1:
            raise ValueError("h must be a positive integer")

    @classmethod
    def make(cls, k=0, a=1, b=1, beta=1, w=(1, 0), h=1):
        if not isinstance(w, RootOfUnity):
            w = RootOfUnity(*w)
        return cls(UnifiedParams(k, a, b, beta), w, h)

    @property
    def k(self):
        return self.base.k

    @cached_property
    def w_value(self):
        return self.w.value

    @cached_property
    def ratio(self):
        """w (beta/a)^b."""
        return self.w_value * self.base.ratio

    @property
    def regular(self):
        return self.ratio != _ONE

    def with_h(self, h):
        return TwistedParams(self.base, self.w, h)

    def as_dict(self):
        return {**self.base.as_dict(), "w": str(self.w), "h": self.h}


def _kernel(tp, T):
    if not tp.regular and tp.k == 0:
        raise PoleError(
            f"w beta^b = a^b (w={tp.w}, beta={tp.base.beta}, a={tp.base.a}, b={tp.base.b}) "
            "with k = 0: the twisted kernel has a pole at t = 0"
        )
    return generating_kernel(tp.k, None, tp.w_value * tp.base.beta_b, tp.base.a_b, T)


def multiple_series(tp, T, x=None):
    """(2 (t/2)^k / (w beta^b e^t - a^b))^h e^(x t) through the available precision."""
    f = series_pow(_kernel(tp, T), tp.h)
    if x is not None and Fraction(x) != 0:
        f = series_mul(f, exp_linear(Fraction(x), T))
    return f


def _truncation(tp, n_max, T):
    return default_truncation(n_max, tp.k, tp.h) if T is None else T


def twisted_numbers(tp, n_max, T=None):
    """y_(n,w,beta)(k, a, b) for n = 0..n_max; requires h = 1."""
    if tp.h != 1:
        raise ValueError("twisted_numbers is the h = 1 family; use multiple_twisted_numbers")
    return multiple_twisted_polys(tp, 0, n_max, T)


def twisted_values(tp, x, n_max, T=None):
    """y_(n,w,beta)(x: k, a, b) for n = 0..n_max (h = 1)."""
    return multiple_twisted_polys(tp.with_h(1), x, n_max, T)


def multiple_twisted_polys(tp, x, n_max, T=None):
    """y^(h)_(n,w,beta)(x: k, a, b) for n = 0..n_max."""
    f = multiple_series(tp, _truncation(tp, n_max, T), x)
    return [extract_y(f, n) for n in range(n_max + 1)]


def multiple_twisted_numbers(tp, n_max, T=None):
    return multiple_twisted_polys(tp, 0, n_max, T)


def scaled_moments(values, shift):
    """values[l + shift] / (shift! C(l + shift, shift)) = values[l + shift] * l!/(l + shift)!."""
    out = []
    for l in range(len(values) - shift):
        out.append(values[l + shift] * Fraction(math.factorial(l), math.factorial(l + shift)))
    return out


def _fold_convolve(sequences):
    acc = sequences[0]
    for seq in sequences[1:]:
        acc = binomial_convolve(acc, seq)
    return acc


def _require_regular(tp):
    if not tp.regular:
        raise RegularityError(
            f"w (beta/a)^b = 1 for {tp.as_dict()}: the single moments are undefined "
            "(the kernel has a pole that only the t^k prefactor cancels)"
        )


def verify_multinomial_convolution(tp, n_max):
    """Order-h moment at n equals the multinomial convolution of single moments.

    The single moment is m_l = y_(l+k,w,beta)(k,a,b) / (k! C(l+k,k)).  Each
    instance also records the form that puts order-h values
    y^(h)_(l+kh) / ((kh)! C(l+kh,kh)) inside the product, under
    ``printed_rhs``/``printed_ok``.
    """
    _require_regular(tp)
    k, h = tp.k, tp.h
    report = VerificationReport("multinomial", tp.as_dict())
    single = scaled_moments(twisted_numbers(tp.with_h(1), n_max + k), k)
    multi = scaled_moments(multiple_twisted_numbers(tp, n_max + k * h), k * h)
    rhs = _fold_convolve([single] * h)
    printed = _fold_convolve([multi] * h)
    agree = 0
    for n in range(n_max + 1):
        p_ok = printed[n] == multi[n]
        agree += p_ok
        report.add(n, multi[n], rhs[n], printed_rhs=printed[n], printed_ok=p_ok)
    report.notes.append(
        f"literal form with order-h factors agrees at {agree}/{n_max + 1} indices"
    )
    return report


def verify_sum_of_powers(tp, x, n_max):
    """As :func:`verify_multinomial_convolution` with x carried by the last factor."""
    _require_regular(tp)
    x = Fraction(x)
    k, h = tp.k, tp.h
    report = VerificationReport("sum-powers", {**tp.as_dict(), "x": str(x)})
    single = scaled_moments(twisted_numbers(tp.with_h(1), n_max + k), k)
    single_x = scaled_moments(twisted_values(tp, x, n_max + k), k)
    multi = scaled_moments(multiple_twisted_numbers(tp, n_max + k * h), k * h)
    multi_x = scaled_moments(multiple_twisted_polys(tp, x, n_max + k * h), k * h)
    rhs = _fold_convolve([single] * (h - 1) + [single_x])
    printed = _fold_convolve([multi] * (h - 1) + [multi_x])
    agree = 0
    for n in range(n_max + 1):
        p_ok = printed[n] == multi_x[n]
        agree += p_ok
        report.add(n, multi_x[n], rhs[n], printed_rhs=printed[n], printed_ok=p_ok)
    report.notes.append(
        f"literal form with order-h factors agrees at {agree}/{n_max + 1} indices"
    )
    return report
