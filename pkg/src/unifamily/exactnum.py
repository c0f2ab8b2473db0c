"""Exact arithmetic in Q and in cyclotomic fields Q(zeta_m).

Rationals at the API are :class:`fractions.Fraction` values (coefficients
are stored as gmpy2 ``mpq`` when available).  Elements of Q(zeta_m) are :class:`Cyclotomic` instances holding rational coordinates
in the power basis 1, zeta, ..., zeta^(phi(m)-1), always reduced modulo the
m-th cyclotomic polynomial, so equality is a coefficient comparison once
both operands live in the same field.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from numbers import Rational

import mpmath

try:  # coefficient arithmetic dominates every computation; gmpy2 is ~15x faster
    from gmpy2 import mpq as _Q
except ImportError:  # pragma: no cover
    _Q = Fraction

_SCALARS = (int, Fraction, type(_Q(0)))

__all__ = [
    "Cyclotomic",
    "RootOfUnity",
    "make_root_of_unity",
    "cyclo_invert",
    "vp",
    "complex_embed",
    "as_cyclotomic",
    "cyclotomic_polynomial",
]


# ---------------------------------------------------------------------------
# cyclotomic polynomials and reduction tables


def _poly_divexact(num, den):
    """Exact division of integer polynomials (lists, low degree first)."""
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    lead = den[-1]
    for i in range(len(out) - 1, -1, -1):
        q, r = divmod(num[i + len(den) - 1], lead)
        assert r == 0
        out[i] = q
        if q:
            for j, d in enumerate(den):
                num[i + j] -= q * d
    assert not any(num[: len(den) - 1])
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m):
    """Integer coefficients of Phi_m, lowest degree first."""
    if m < 1:
        raise ValueError("cyclotomic order must be positive")
    poly = [-1] + [0] * (m - 1) + [1]
    for d in range(1, m):
        if m % d == 0:
            poly = _poly_divexact(poly, cyclotomic_polynomial(d))
    return tuple(poly)


@lru_cache(maxsize=None)
def _power_table(m):
    """Row i holds the reduced coordinates of zeta_m^i, for 0 <= i < m."""
    phi = cyclotomic_polynomial(m)
    deg = len(phi) - 1
    rows = []
    cur = [0] * deg
    cur[0] = 1
    for _ in range(m):
        rows.append(tuple(cur))
        # multiply by zeta, then use zeta^deg = -sum phi_j zeta^j
        top = cur[-1]
        cur = [0] + cur[:-1]
        if top:
            cur = [c - top * p for c, p in zip(cur, phi)]
    return tuple(rows)


def _fold(m, coeffs):
    """Reduce an arbitrary coefficient list over powers of zeta_m."""
    table = _power_table(m)
    deg = len(table[0])
    out = [_Q(0)] * deg
    for i, c in enumerate(coeffs):
        if not c:
            continue
        row = table[i % m]
        for j, r in enumerate(row):
            if r:
                out[j] += c * r
    return out


def _normalize_order(m, coeffs):
    """Rewrite an element of Q(zeta_m), m = 2 mod 4, in Q(zeta_{m/2})."""
    if m % 4 != 2:
        return m, coeffs
    n = m // 2
    half = (n + 1) // 2
    moved = [_Q(0)] * n
    for i, c in enumerate(coeffs):
        if c:
            # zeta_{2n} = -zeta_n^((n+1)/2) for odd n
            moved[(i * half) % n] += -c if i % 2 else c
    return n, _fold(n, moved)


# ---------------------------------------------------------------------------
# field elements


class Cyclotomic:
    """An element of Q(zeta_m) in reduced power-basis coordinates.

    Orders congruent to 2 mod 4 are rewritten in the equal field of half the
    order, so ``order`` is always odd or divisible by four.  Mixed-order
    arithmetic promotes both sides to the lcm of their orders.
    """

    __slots__ = ("_order", "_coeffs")

    def __init__(self, order, coeffs):
        order = int(order)
        if order < 1:
            raise ValueError("order must be a positive integer")
        coeffs = [_Q(c) for c in coeffs]
        deg = len(cyclotomic_polynomial(order)) - 1
        if len(coeffs) != deg or order % 4 == 2:
            order, coeffs = _normalize_order(order, _fold(order, coeffs))
        self._order = order
        self._coeffs = tuple(coeffs)

    @classmethod
    def _raw(cls, order, coeffs):
        obj = cls.__new__(cls)
        obj._order = order
        obj._coeffs = tuple(coeffs)
        return obj

    @classmethod
    def rational(cls, q):
        return cls._raw(1, (_Q(q),))

    @property
    def order(self):
        return self._order

    @property
    def coeffs(self):
        return self._coeffs

    # -- coercion helpers -------------------------------------------------

    def promote(self, order):
        """Return the same value written in Q(zeta_order); order must be a multiple."""
        if order == self._order:
            return self
        if order % self._order:
            raise ValueError(f"cannot promote order {self._order} to {order}")
        if self._order == 1:
            deg = len(_power_table(order)[0])
            return Cyclotomic._raw(order, (self._coeffs[0],) + (_Q(0),) * (deg - 1))
        step = order // self._order
        spread = [_Q(0)] * order
        for i, c in enumerate(self._coeffs):
            spread[i * step] = c
        return Cyclotomic._raw(order, _fold(order, spread))

    def _common(self, other):
        other = as_cyclotomic(other)
        if other._order == self._order:
            return self, other, self._order
        m = math.lcm(self._order, other._order)
        return self.promote(m), other.promote(m), m

    def is_zero(self):
        return not any(self._coeffs)

    def is_rational(self):
        return not any(self._coeffs[1:])

    def to_rational(self):
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational")
        q = self._coeffs[0]
        return Fraction(int(q.numerator), int(q.denominator))

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        try:
            a, b, m = self._common(other)
        except TypeError:
            return NotImplemented
        return Cyclotomic._raw(m, [x + y for x, y in zip(a._coeffs, b._coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic._raw(self._order, [-c for c in self._coeffs])

    def __pos__(self):
        return self

    def __sub__(self, other):
        try:
            a, b, m = self._common(other)
        except TypeError:
            return NotImplemented
        return Cyclotomic._raw(m, [x - y for x, y in zip(a._coeffs, b._coeffs)])

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, _SCALARS):
            return Cyclotomic._raw(self._order, [c * other for c in self._coeffs])
        if isinstance(other, Cyclotomic):
            if other._order == 1:
                q = other._coeffs[0]
                return Cyclotomic._raw(self._order, [c * q for c in self._coeffs])
            if self._order == 1:
                q = self._coeffs[0]
                return Cyclotomic._raw(other._order, [c * q for c in other._coeffs])
        try:
            a, b, m = self._common(other)
        except TypeError:
            return NotImplemented
        if m == 1:
            return Cyclotomic._raw(1, (a._coeffs[0] * b._coeffs[0],))
        ca, cb = a._coeffs, b._coeffs
        prod = [_Q(0)] * (len(ca) + len(cb) - 1)
        for i, x in enumerate(ca):
            if x:
                for j, y in enumerate(cb):
                    if y:
                        prod[i + j] += x * y
        return Cyclotomic._raw(m, _fold(m, prod))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, _SCALARS):
            if other == 0:
                raise ZeroDivisionError("division of a cyclotomic by zero")
            return Cyclotomic._raw(self._order, [c / other for c in self._coeffs])
        try:
            other = as_cyclotomic(other)
        except TypeError:
            return NotImplemented
        return self * cyclo_invert(other)

    def __rtruediv__(self, other):
        return as_cyclotomic(other) * cyclo_invert(self)

    def __pow__(self, e):
        if not isinstance(e, int):
            return NotImplemented
        base = self
        if e < 0:
            base, e = cyclo_invert(self), -e
        result = Cyclotomic.rational(1)
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def conjugate(self):
        """Complex conjugate, i.e. the automorphism zeta -> zeta^-1."""
        m = self._order
        spread = [_Q(0)] * m
        for i, c in enumerate(self._coeffs):
            spread[(-i) % m] += c
        return Cyclotomic._raw(m, _fold(m, spread))

    # -- comparison --------------------------------------------------------

    def __eq__(self, other):
        try:
            a, b, _ = self._common(other)
        except TypeError:
            return NotImplemented
        return a._coeffs == b._coeffs

    # equal values may carry different orders, so no cheap canonical hash
    __hash__ = None

    def __bool__(self):
        return not self.is_zero()

    # -- display -----------------------------------------------------------

    def __repr__(self):
        return f"Cyclotomic({self._order}, {[str(c) for c in self._coeffs]})"

    def __str__(self):
        if self.is_rational():
            return str(self._coeffs[0])
        terms = []
        for i, c in enumerate(self._coeffs):
            if not c:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                mono = f"z{self._order}" + (f"^{i}" if i > 1 else "")
                if c == 1:
                    terms.append(mono)
                elif c == -1:
                    terms.append("-" + mono)
                else:
                    terms.append(f"{c}*{mono}")
        return " + ".join(terms).replace("+ -", "- ")


def as_cyclotomic(value):
    if isinstance(value, Cyclotomic):
        return value
    if isinstance(value, _SCALARS) or isinstance(value, Rational):
        return Cyclotomic.rational(value)
    if isinstance(value, RootOfUnity):
        return value.value
    raise TypeError(f"cannot interpret {type(value).__name__} as a cyclotomic number")


@dataclass(frozen=True)
class RootOfUnity:
    """zeta_order^exponent with (order, exponent) reduced to the minimal order."""

    order: int
    exponent: int

    def __post_init__(self):
        if self.order < 1:
            raise ValueError("root of unity order must be positive")
        e = self.exponent % self.order
        g = math.gcd(e, self.order)
        object.__setattr__(self, "order", self.order // g)
        object.__setattr__(self, "exponent", e // g)

    @property
    def value(self):
        return make_root_of_unity(self.order, self.exponent)

    def __mul__(self, other):
        if isinstance(other, RootOfUnity):
            m = math.lcm(self.order, other.order)
            return RootOfUnity(
                m, self.exponent * (m // self.order) + other.exponent * (m // other.order)
            )
        return NotImplemented

    def __str__(self):
        return f"{self.order}:{self.exponent}"


def make_root_of_unity(m, e):
    """zeta_m^e as a reduced :class:`Cyclotomic`; e is taken mod m."""
    if m < 1:
        raise ValueError("root of unity order must be positive")
    e %= m
    coeffs = [_Q(0)] * m
    coeffs[e] = _Q(1)
    return Cyclotomic(m, _fold(m, coeffs))


def _solve(matrix, rhs):
    """Gauss-Jordan over the rationals; matrix is square and assumed invertible."""
    n = len(rhs)
    rows = [list(r) + [b] for r, b in zip(matrix, rhs)]
    for col in range(n):
        piv = next((r for r in range(col, n) if rows[r][col]), None)
        if piv is None:
            raise ZeroDivisionError("singular multiplication matrix")
        rows[col], rows[piv] = rows[piv], rows[col]
        p = rows[col][col]
        rows[col] = [x / p for x in rows[col]]
        for r in range(n):
            if r != col and rows[r][col]:
                f = rows[r][col]
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[col])]
    return [rows[r][n] for r in range(n)]


def cyclo_invert(z):
    """Multiplicative inverse of a nonzero cyclotomic number."""
    z = as_cyclotomic(z)
    if z.is_zero():
        raise ZeroDivisionError("cannot invert zero")
    m = z.order
    if z.is_rational():
        return Cyclotomic._raw(m, [1 / z.coeffs[0]] + [_Q(0)] * (len(z.coeffs) - 1))
    deg = len(z.coeffs)
    # column j of the multiplication-by-z matrix is z * zeta^j
    cols = []
    for j in range(deg):
        shifted = [_Q(0)] * j + list(z.coeffs)
        cols.append(_fold(m, shifted))
    matrix = [[cols[j][i] for j in range(deg)] for i in range(deg)]
    rhs = [_Q(1)] + [_Q(0)] * (deg - 1)
    return Cyclotomic._raw(m, _solve(matrix, rhs))


INF = math.inf


def vp(x, p):
    """p-adic valuation of a rational; ``math.inf`` for zero."""
    x = Fraction(x)
    if p < 2:
        raise ValueError("p must be a prime")
    if x == 0:
        return INF
    v = 0
    num, den = x.numerator, x.denominator
    while num % p == 0:
        num //= p
        v += 1
    while den % p == 0:
        den //= p
        v -= 1
    return v


def complex_embed(z, precision=30):
    """Image of z under zeta_m -> exp(2 pi i / m), as an mpmath complex.

    ``precision`` is in decimal digits; a few guard digits are added.
    """
    z = as_cyclotomic(z)
    with mpmath.workdps(precision + 10):
        if z.is_rational():
            q = z.coeffs[0]
            val = mpmath.mpc(mpmath.mpf(int(q.numerator)) / int(q.denominator), 0)
        else:
            root = mpmath.expjpi(mpmath.mpf(2) / z.order)
            val = mpmath.mpc(0)
            power = mpmath.mpc(1)
            for c in z.coeffs:
                if c:
                    val += (mpmath.mpf(int(c.numerator)) / int(c.denominator)) * power
                power *= root
    return val
