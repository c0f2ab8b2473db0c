import math
from fractions import Fraction

import mpmath
import pytest
from hypothesis import given
from hypothesis import strategies as st

from unifamily.errors import ConvergenceError
from unifamily.exactnum import complex_embed
from unifamily.grid import twisted_points
from unifamily.twisted import TwistedParams, multiple_twisted_numbers, scaled_moments
from unifamily.zeta import (
    ZetaQuery,
    _tail_bound,
    excluded_term,
    interpolation_check,
    zeta_brute_force,
    zeta_eval,
)

HALF = TwistedParams.make(k=0, beta=Fraction(1, 2))


def value(tp, s, M=200, **kw):
    return complex(zeta_eval(ZetaQuery(s, tp, M, **kw)).value)


def test_examples():
    assert abs(value(HALF, 0, 60) + 2) < 1e-12
    assert abs(value(HALF, -1, 200) + 4) < 1e-12
    assert abs(value(HALF.with_h(2), -1, 80) - 32) < 1e-10


def test_divergence_and_guards():
    with pytest.raises(ConvergenceError):
        zeta_eval(ZetaQuery(-1, TwistedParams.make(beta=2)))
    with pytest.raises(ConvergenceError):
        zeta_eval(ZetaQuery(-1, TwistedParams.make(beta=-1)))  # |rho| = 1 exactly
    with pytest.raises(ConvergenceError):
        zeta_eval(ZetaQuery(-1, TwistedParams.make(k=1, beta=1, w=(3, 1))))
    with pytest.raises(ValueError):
        zeta_eval(ZetaQuery(2e6, HALF))
    with pytest.raises(ValueError):
        ZetaQuery(0, HALF, M=0)


brute_points = [
    TwistedParams.make(k=0, beta=Fraction(1, 2)),
    TwistedParams.make(k=1, a=2, beta=Fraction(1, 3), w=(3, 1)),
    TwistedParams.make(k=2, a=Fraction(3, 2), b=2, beta=Fraction(-1, 2), w=(4, 1)),
]


@pytest.mark.parametrize("tp", brute_points)
@pytest.mark.parametrize("h", [1, 2, 3])
@pytest.mark.parametrize("s", [0, -2, 1.5, complex(0.5, 3)])
def test_collapse_matches_brute_force(tp, h, s):
    tp = tp.with_h(h)
    M = 30 if h < 3 else 18
    collapsed = zeta_eval(ZetaQuery(s, tp, M)).value
    brute = zeta_brute_force(tp, s, M)
    assert abs(collapsed - brute) < 1e-12


def _scaled_exact(tp, n_max):
    k, h = tp.k, tp.h
    return scaled_moments(multiple_twisted_numbers(tp, n_max + k * h), k * h)


def test_reference_values_against_series():
    for h, ref in ((1, -4), (2, 32)):
        tp = HALF.with_h(h)
        assert _scaled_exact(tp, 1)[1] == ref


def test_interpolation_on_grid():
    checked = 0
    for tp in twisted_points((1, 2, 3)):
        rho = complex(complex_embed(tp.ratio))
        if abs(rho) > 0.5 + 1e-12:
            continue
        exact = _scaled_exact(tp, 6)
        for n in range(1, 7):
            res = zeta_eval(ZetaQuery(-n, tp, 200))
            assert res.tail_bound < 1e-9
            with mpmath.workdps(40):
                diff = abs(res.value - complex_embed(exact[n], 30))
            assert diff <= res.tail_bound + 1e-25
            checked += 1
    assert checked > 100


def test_interpolation_report_and_correction():
    rep = interpolation_check(HALF.with_h(2), range(0, 7))
    assert rep.passed
    first = rep.instances[0]
    assert first.n == 0 and first.extra["correction"] == str(excluded_term(HALF.with_h(2)))
    assert excluded_term(HALF.with_h(2)) == 4
    # without the correction n = 0 is off by exactly that constant
    raw = value(HALF.with_h(2), 0)
    exact = _scaled_exact(HALF.with_h(2), 0)[0].to_rational()
    assert abs(raw + 4 - float(exact)) < 1e-12
    assert excluded_term(TwistedParams.make(k=1, a=2, beta=Fraction(1, 2), h=3)) == Fraction(-1, 8)


def test_strict_paper_mode():
    tp = TwistedParams.make(k=1, a=2, beta=Fraction(1, 2))
    assert interpolation_check(tp, range(1, 5)).passed
    strict = interpolation_check(tp, range(1, 5), strict_paper=True)
    assert not strict.passed
    assert any("a^b = 1" in note for note in strict.notes)
    assert abs(value(tp, -1, strict_paper=True) - 2 * value(tp, -1)) < 1e-12
    assert interpolation_check(HALF, range(1, 5), strict_paper=True).passed


@given(
    st.fractions(min_value=Fraction(1, 20), max_value=Fraction(19, 20)),
    st.integers(1, 3),
    st.floats(min_value=-8, max_value=3),
    st.integers(1, 120),
)
def test_tail_bound_monotone(r, h, sigma, M):
    with mpmath.workdps(30):
        rho = mpmath.mpf(r.numerator) / r.denominator
        assert _tail_bound(rho, h, sigma, M + 1, 1) <= _tail_bound(rho, h, sigma, M, 1)
        assert _tail_bound(rho, h, sigma, M + 17, 1) <= _tail_bound(rho, h, sigma, M, 1)


@given(
    st.sampled_from([Fraction(1, 2), Fraction(2, 3), Fraction(9, 10)]),
    st.integers(1, 3),
    st.sampled_from([-6.0, -2.5, 0.0, 1.0, 4.0]),
    st.integers(1, 60),
)
def test_tail_bound_is_a_bound(r, h, sigma, M):
    with mpmath.workdps(30):
        rho = mpmath.mpf(r.numerator) / r.denominator
        true_tail = mpmath.fsum(
            math.comb(m + h - 1, h - 1) * rho ** m * mpmath.power(m, sigma)
            for m in range(M + 1, M + 3000)
        )
        assert true_tail <= _tail_bound(rho, h, sigma, M, 1) * (1 + 1e-12)


def test_reported_tail_shrinks_with_M():
    tp = TwistedParams.make(k=0, beta=Fraction(2, 3), h=2)
    bounds = [zeta_eval(ZetaQuery(-3, tp, M)).tail_bound for M in (20, 50, 100, 200)]
    assert bounds == sorted(bounds, reverse=True)
