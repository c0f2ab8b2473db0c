"""The unified Bernoulli/Euler/Genocchi family and its character version.

The numbers ``y_n(k, a, b; beta)`` are n! times the Taylor coefficients of

    2 (t/2)^k / (beta^b e^t - a^b),

and the polynomials ``y_n(x)`` come from the same kernel times e^(x t).
Special cases: (k=1, a=b=beta=1) gives the Bernoulli numbers, (k=0,
a=b=beta=1, beta -> -1) the Euler-type numbers, (k=1, beta=-1) the
Genocchi numbers up to a factor -1/2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property

from .errors import PoleError, RegularityError
from .exactnum import Cyclotomic, as_cyclotomic, cyclo_invert, make_root_of_unity
from .report import VerificationReport
from .series import (
    TruncatedLaurentSeries,
    default_truncation,
    exp_linear,
    extract_y,
    series_div,
    series_mul,
)

__all__ = [
    "UnifiedParams",
    "PolyInX",
    "DirichletCharacter",
    "generating_kernel",
    "unified_numbers",
    "unified_polynomials",
    "unified_values",
    "char_numbers",
    "char_values",
    "verify_symmetry",
    "verify_distribution",
    "verify_binomial_convolution",
    "verify_char_distribution",
]

_ONE = Cyclotomic.rational(1)


@dataclass(frozen=True, eq=False)
class UnifiedParams:
    k: int
    a: Fraction
    b: int
    beta: Cyclotomic

    def __post_init__(self):
        object.__setattr__(self, "a", Fraction(self.a))
        object.__setattr__(self, "beta", as_cyclotomic(self.beta))
        if not isinstance(self.k, int) or self.k < 0:
            raise ValueError("k must be a non-negative integer")
        if self.a <= 0:
            raise ValueError("a must be a positive rational")
        if not isinstance(self.b, int) or self.b < 1:
            raise ValueError("b must be a positive integer")
        if self.beta.is_zero():
            raise ValueError("beta must be nonzero")

    @cached_property
    def ratio(self):
        """(beta/a)^b."""
        return (self.beta / self.a) ** self.b

    @property
    def regular(self):
        return self.ratio != _ONE

    @cached_property
    def beta_b(self):
        return self.beta ** self.b

    @cached_property
    def a_b(self):
        return self.a ** self.b

    def power(self, d):
        """Parameters (k, a^d, b, beta^d) used by the distribution formulas."""
        return UnifiedParams(self.k, self.a ** d, self.b, self.beta ** d)

    def inverse(self):
        """Parameters (k, 1/a, b, 1/beta) used by the reflection formula."""
        return UnifiedParams(self.k, 1 / self.a, self.b, cyclo_invert(self.beta))

    def as_dict(self):
        return {"k": self.k, "a": str(self.a), "b": self.b, "beta": str(self.beta)}

    def __eq__(self, other):
        if not isinstance(other, UnifiedParams):
            return NotImplemented
        return (self.k, self.a, self.b) == (other.k, other.a, other.b) and self.beta == other.beta

    __hash__ = None


class PolyInX:
    """Polynomial in x with cyclotomic coefficients, lowest degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        coeffs = [as_cyclotomic(c) for c in coeffs]
        while coeffs and coeffs[-1].is_zero():
            coeffs.pop()
        self.coeffs = tuple(coeffs)

    @property
    def degree(self):
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def leading(self):
        return self.coeffs[-1] if self.coeffs else Cyclotomic.rational(0)

    def __call__(self, x):
        acc = Cyclotomic.rational(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other):
        if not isinstance(other, PolyInX):
            return NotImplemented
        return self.coeffs == other.coeffs

    __hash__ = None

    def __repr__(self):
        return f"PolyInX([{', '.join(str(c) for c in self.coeffs)}])"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c.is_zero():
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            cs = str(c)
            if not c.is_rational():
                cs = f"({cs})"
            if mono:
                parts.append(mono if c == 1 else f"{cs}*{mono}")
            else:
                parts.append(cs)
        return " + ".join(reversed(parts)).replace("+ -", "- ")


# ---------------------------------------------------------------------------
# Dirichlet characters


@dataclass(frozen=True)
class DirichletCharacter:
    """A character mod d given by chi(j) = zeta_m^e on the units.

    ``exponents`` maps each unit residue j (0 <= j < d) to e; non-units are
    implicitly zero.  Construction validates completeness, chi(1) = 1 and
    multiplicativity.
    """

    modulus: int
    root_order: int
    exponents: dict = field(hash=False)

    def __post_init__(self):
        d, m = self.modulus, self.root_order
        if d < 1 or m < 1:
            raise ValueError("modulus and root order must be positive")
        exps = {}
        for j, e in self.exponents.items():
            j = int(j)
            if not 0 <= j < d:
                raise ValueError(f"residue {j} out of range for modulus {d}")
            if math.gcd(j, d) != 1:
                raise ValueError(f"residue {j} is not a unit mod {d}; non-units are implicitly 0")
            exps[j] = int(e) % m
        units = [j for j in range(d) if math.gcd(j, d) == 1]
        missing = [j for j in units if j not in exps]
        if missing:
            raise ValueError(f"character table is missing units {missing}")
        if exps[1 % d] != 0:
            raise ValueError("chi(1) must equal 1")
        for i in units:
            for j in units:
                if (exps[i] + exps[j]) % m != exps[(i * j) % d]:
                    raise ValueError(f"not multiplicative: chi({i})chi({j}) != chi({i * j % d})")
        object.__setattr__(self, "exponents", exps)

    def __call__(self, j):
        e = self.exponents.get(j % self.modulus)
        if e is None:
            return Cyclotomic.rational(0)
        return make_root_of_unity(self.root_order, e)

    @classmethod
    def principal(cls, d):
        return cls(d, 1, {j: 0 for j in range(d) if math.gcd(j, d) == 1})

    @classmethod
    def from_text(cls, text):
        """Parse the table format: ``d=<mod>``, ``m=<order>``, then ``<j> <e>`` lines."""
        lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
        lines = [ln for ln in lines if ln]
        if len(lines) < 2 or not lines[0].startswith("d=") or not lines[1].startswith("m="):
            raise ValueError("character table must start with 'd=<modulus>' and 'm=<root order>' lines")
        try:
            d = int(lines[0][2:])
            m = int(lines[1][2:])
            exps = {}
            for ln in lines[2:]:
                j, e = ln.split()
                if int(j) in exps:
                    raise ValueError(f"residue {j} listed twice")
                exps[int(j)] = int(e)
        except ValueError as exc:
            raise ValueError(f"malformed character table: {exc}") from None
        return cls(d, m, exps)

    @classmethod
    def from_file(cls, path):
        with open(path, encoding="utf-8") as fh:
            return cls.from_text(fh.read())

    def to_text(self):
        rows = [f"d={self.modulus}", f"m={self.root_order}"]
        rows += [f"{j} {e}" for j, e in sorted(self.exponents.items())]
        return "\n".join(rows) + "\n"

    def as_dict(self):
        return {
            "modulus": self.modulus,
            "root_order": self.root_order,
            "table": {str(j): e for j, e in sorted(self.exponents.items())},
        }


# ---------------------------------------------------------------------------
# generating functions


def generating_kernel(k, numerator, c, a_b, T, x=None):
    """numerator * 2 (t/2)^k e^(x t) / (c e^t - a_b), known through t^(T-2+k) at worst.

    ``numerator`` is a series or None (meaning 1).  The denominator has a
    simple zero at t = 0 exactly when c = a_b.
    """
    den = exp_linear(1, T).scale(c) - Cyclotomic.rational(a_b)
    num = TruncatedLaurentSeries.constant(2, T) if numerator is None else numerator.scale(2)
    if x is not None and Fraction(x) != 0:
        num = series_mul(num, exp_linear(Fraction(x), T))
    return series_div(num, den).shift(k).scale(Fraction(1, 2 ** k))


def _check_pole(params):
    if not params.regular and params.k == 0:
        raise PoleError(
            f"beta^b = a^b (beta={params.beta}, a={params.a}, b={params.b}) with k = 0: "
            "the generating function has a pole at t = 0"
        )


def unified_series(params, T, x=None):
    _check_pole(params)
    return generating_kernel(params.k, None, params.beta_b, params.a_b, T, x)


def unified_numbers(params, n_max, T=None):
    """y_n(k, a, b) for n = 0..n_max."""
    T = default_truncation(n_max, params.k) if T is None else T
    f = unified_series(params, T)
    return [extract_y(f, n) for n in range(n_max + 1)]


def unified_values(params, x, n_max, T=None):
    """y_n(x: k, a, b) for n = 0..n_max, read off the series with e^(x t)."""
    T = default_truncation(n_max, params.k) if T is None else T
    f = unified_series(params, T, x)
    return [extract_y(f, n) for n in range(n_max + 1)]


def appell_polynomials(numbers):
    """y_n(x) = sum_j C(n, j) y_j x^(n-j) for each n."""
    polys = []
    for n in range(len(numbers)):
        coeffs = [numbers[n - i] * math.comb(n, i) for i in range(n + 1)]
        polys.append(PolyInX(coeffs))
    return polys


def unified_polynomials(params, n_max, T=None):
    return appell_polynomials(unified_numbers(params, n_max, T))


def _char_series(chi, params, T, x=None):
    d = chi.modulus
    if params.ratio ** d == _ONE and params.k == 0:
        raise PoleError(
            f"beta^(bd) = a^(bd) with d={d} and k = 0: the character generating function has a pole"
        )
    r = params.ratio
    weights = TruncatedLaurentSeries.constant(0, T)
    for j in range(d):
        cj = chi(j)
        if cj.is_zero():
            continue
        weights = weights + exp_linear(j, T).scale(cj * r ** j)
    if x is not None and Fraction(x) != 0:
        weights = series_mul(weights, exp_linear(Fraction(x), T))
    den = exp_linear(d, T).scale(params.beta_b ** d) - Cyclotomic.rational(params.a_b ** d)
    return series_div(weights.scale(2), den).shift(params.k).scale(Fraction(1, 2 ** params.k))


def char_numbers(chi, params, n_max, T=None):
    """y_{n,chi}(k, a, b) for n = 0..n_max.

    The weight sum runs over the residues j = 0..d-1; for d >= 2 this equals
    the sum over 1..d since chi(0) = chi(d) = 0, and for d = 1 it makes the
    principal character reproduce the plain family.
    """
    T = default_truncation(n_max, params.k) if T is None else T
    f = _char_series(chi, params, T)
    return [extract_y(f, n) for n in range(n_max + 1)]


def char_values(chi, params, x, n_max, T=None):
    T = default_truncation(n_max, params.k) if T is None else T
    f = _char_series(chi, params, T, x)
    return [extract_y(f, n) for n in range(n_max + 1)]


# ---------------------------------------------------------------------------
# identities


def verify_symmetry(params, x, n_max):
    """y_n(1-x: k, 1/a, b; 1/beta) = (-1)^(k+n+1) beta^b a^b y_n(x: k, a, b)."""
    x = Fraction(x)
    report = VerificationReport("symmetry", {**params.as_dict(), "x": str(x)})
    inv = params.inverse()
    lhs = unified_values(inv, 1 - x, n_max)
    base = unified_values(params, x, n_max)
    factor = params.beta_b * params.a_b
    for n in range(n_max + 1):
        sign = -1 if (params.k + n + 1) % 2 else 1
        report.add(n, lhs[n], base[n] * factor * sign)
    return report


def verify_distribution(params, d, x, n_max):
    """y_n(x) = a^(b(d-1)) d^(n-k) sum_j (beta/a)^(bj) y_n((x+j)/d: k, a^d, b; beta^d)."""
    x = Fraction(x)
    if d < 1:
        raise ValueError("d must be a positive integer")
    report = VerificationReport("distribution", {**params.as_dict(), "d": d, "x": str(x)})
    lhs = unified_values(params, x, n_max)
    pd = params.power(d)
    shifted = [unified_values(pd, (x + j) / d, n_max) for j in range(d)]
    weights = [params.ratio ** j for j in range(d)]
    front = params.a_b ** (d - 1)
    for n in range(n_max + 1):
        acc = Cyclotomic.rational(0)
        for j in range(d):
            acc = acc + weights[j] * shifted[j][n]
        report.add(n, lhs[n], acc * (front * Fraction(d) ** (n - params.k)))
    return report


DEGREE_OBSTRUCTION = (
    "binomial convolution needs regular parameters: when beta^b = a^b the number y_(k-1) "
    "is nonzero, so y_(n+k)(x) has x-degree n+1 while the right side has degree n"
)


def verify_binomial_convolution(params, x, n_max):
    """y_(n+k)(x)/C(n+k,k) = sum_m C(n,m)/C(m+k,k) y_(m+k) x^(n-m)."""
    x = Fraction(x)
    if not params.regular:
        raise RegularityError(DEGREE_OBSTRUCTION)
    k = params.k
    report = VerificationReport("binomial", {**params.as_dict(), "x": str(x)})
    values = unified_values(params, x, n_max + k)
    numbers = unified_numbers(params, n_max + k)
    for n in range(n_max + 1):
        lhs = values[n + k] / math.comb(n + k, k)
        rhs = Cyclotomic.rational(0)
        for m in range(n + 1):
            rhs = rhs + numbers[m + k] * (Fraction(math.comb(n, m), math.comb(m + k, k)) * x ** (n - m))
        report.add(n, lhs, rhs)
    return report


def verify_char_distribution(chi, params, x, n_max):
    """y_(n,chi)(x) = d^(n-k) sum_j chi(j) (beta/a)^(bj) y_n((x+j)/d: k, a^d, b; beta^d)."""
    x = Fraction(x)
    d = chi.modulus
    report = VerificationReport(
        "char-dist", {**params.as_dict(), "x": str(x), "chi": chi.as_dict()}
    )
    lhs = char_values(chi, params, x, n_max)
    pd = params.power(d)
    terms = []
    for j in range(d):
        cj = chi(j)
        if cj.is_zero():
            continue
        terms.append((cj * params.ratio ** j, unified_values(pd, (x + j) / d, n_max)))
    for n in range(n_max + 1):
        acc = Cyclotomic.rational(0)
        for w, vals in terms:
            acc = acc + w * vals[n]
        report.add(n, lhs[n], acc * Fraction(d) ** (n - params.k))
    return report
