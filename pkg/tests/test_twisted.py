import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from unifamily.errors import PoleError, RegularityError
from unifamily.exactnum import Cyclotomic, RootOfUnity, make_root_of_unity
from unifamily.grid import twisted_points, unified_points
from unifamily.series import series_pow
from unifamily.twisted import (
    TwistedParams,
    multiple_series,
    multiple_twisted_numbers,
    multiple_twisted_polys,
    scaled_moments,
    twisted_numbers,
    twisted_values,
    verify_multinomial_convolution,
    verify_sum_of_powers,
)
from unifamily.unified import UnifiedParams, unified_numbers, unified_values

from oracles import genocchi

ZETA3 = make_root_of_unity(3, 1)
GENOCCHI_POINT = TwistedParams.make(k=1, w=(2, 1))


def test_twisted_examples():
    assert twisted_numbers(GENOCCHI_POINT, 4) == [0, Fraction(-1, 2), Fraction(1, 2), 0, Fraction(-1, 2)]
    assert twisted_numbers(TwistedParams.make(k=0, w=(3, 1)), 0) == [2 * (ZETA3 ** 2 - 1) / 3]
    assert twisted_numbers(TwistedParams.make(k=1, beta=2), 6) == unified_numbers(
        UnifiedParams(1, 1, 1, 2), 6
    )


def test_genocchi_reduction():
    G = genocchi(12)
    assert twisted_numbers(GENOCCHI_POINT, 12) == [-g / 2 for g in G]
    assert G[6] == -3


def test_genocchi_closed_form_cross_check():
    from oracles import bernoulli

    B = bernoulli(12)
    assert list(genocchi(12)) == [2 * (1 - 2 ** n) * B[n] for n in range(13)]


def test_multiple_example():
    tp = TwistedParams.make(k=1, beta=2, h=2)
    assert multiple_twisted_polys(tp, 0, 4) == [0, 0, 2, -24, 240]


def test_h1_reduces_to_twisted():
    tp = TwistedParams.make(k=2, a=2, b=1, beta=ZETA3, w=(2, 1))
    x = Fraction(1, 3)
    assert multiple_twisted_polys(tp, x, 6) == twisted_values(tp, x, 6)


def test_w1_h1_collapse_on_grid():
    x = Fraction(1, 3)
    for p in unified_points():
        tp = TwistedParams(p)
        try:
            expected = unified_values(p, x, 6)
        except PoleError:
            with pytest.raises(PoleError):
                twisted_values(tp, x, 6)
            continue
        assert twisted_values(tp, x, 6) == expected


def test_power_law():
    for tp in list(twisted_points((2, 3)))[::7]:
        T = 10
        try:
            single = multiple_series(tp.with_h(1), T)
        except PoleError:
            continue
        assert multiple_series(tp, T) == series_pow(single, tp.h)


@given(st.integers(0, 2), st.integers(1, 5), st.integers(-3, 3))
def test_twist_periodicity(k, e, shift):
    m = 3
    a = TwistedParams.make(k=k, beta=2, w=(m, e))
    b = TwistedParams.make(k=k, beta=2, w=(m, e + m * shift))
    assert twisted_numbers(a, 5) == twisted_numbers(b, 5)


def test_twisted_pole():
    with pytest.raises(PoleError):
        twisted_numbers(TwistedParams.make(k=0, beta=-1, w=(2, 1)), 2)
    # k >= 1 cancels the pole
    assert twisted_numbers(TwistedParams.make(k=1, beta=-1, w=(2, 1)), 2)[0] == 1


def test_params_validation():
    with pytest.raises(ValueError):
        TwistedParams.make(h=0)
    with pytest.raises(ValueError):
        twisted_numbers(TwistedParams.make(h=2, beta=2), 3)
    assert TwistedParams.make(w=(4, 2)).w == RootOfUnity(2, 1)


def test_scaled_moments():
    assert scaled_moments([Cyclotomic.rational(v) for v in (5, 6, 12, 24)], 1) == [6, 6, 8]


def test_multinomial_examples():
    assert verify_multinomial_convolution(TwistedParams.make(k=1, beta=2), 6).passed
    rep = verify_multinomial_convolution(TwistedParams.make(k=1, beta=2, h=2), 6)
    assert rep.passed
    assert all("printed_ok" in i.extra for i in rep.instances)
    assert any("agrees at" in note for note in rep.notes)
    assert verify_multinomial_convolution(TwistedParams.make(k=1, w=(2, 1), h=3), 5).passed


def test_printed_form_h1_is_same_identity():
    rep = verify_multinomial_convolution(TwistedParams.make(k=2, beta=2, w=(3, 1)), 6)
    assert all(i.extra["printed_ok"] for i in rep.instances)


def test_printed_form_disagrees_somewhere():
    rep = verify_multinomial_convolution(TwistedParams.make(k=1, beta=2, h=2), 6)
    assert not all(i.extra["printed_ok"] for i in rep.instances)


def test_sum_of_powers_examples():
    assert verify_sum_of_powers(TwistedParams.make(k=1, beta=2, h=2), 1, 5).passed
    for tp in (TwistedParams.make(k=0, beta=2), TwistedParams.make(k=2, a=2, beta=ZETA3, w=(2, 1))):
        rep = verify_sum_of_powers(tp, Fraction(3, 4), 8)
        assert rep.passed
    tp = TwistedParams.make(k=1, beta=2, h=3)
    a = verify_sum_of_powers(tp, 0, 5)
    b = verify_sum_of_powers(tp, Fraction(0), 5)
    m = verify_multinomial_convolution(tp, 5)
    assert [i.lhs for i in a.instances] == [i.lhs for i in m.instances] == [i.lhs for i in b.instances]
    assert [i.rhs for i in a.instances] == [i.rhs for i in m.instances]


def test_convolutions_need_regularity():
    for fn, args in ((verify_multinomial_convolution, ()), (verify_sum_of_powers, (0,))):
        with pytest.raises(RegularityError):
            fn(TwistedParams.make(k=1, h=2), *args, 4)


def test_multiple_numbers_h_binomial():
    # (2/(2e^t - 1))^h at t = 0 is 2^h
    for h in (1, 2, 3):
        assert multiple_twisted_numbers(TwistedParams.make(beta=2, h=h), 0) == [2 ** h]


@pytest.mark.parametrize("h", [2, 3])
def test_multiple_numbers_against_geometric(h):
    # (2/(2e^t - 1))^h = 2^h sum_{m>=0} C(m+h-1,h-1) 2^-(m+h) ... e^-(m+h)t  with beta = 2
    tp = TwistedParams.make(beta=2, h=h)
    vals = multiple_twisted_numbers(tp, 4)
    for n, v in enumerate(vals):
        total = Fraction(0)
        # truncated tail is far below 2^-200, compare exactly against partial sum bound instead
        for m in range(0, 400):
            total += math.comb(m + h - 1, h - 1) * Fraction(1, 2 ** (m + h)) * (-(m + h)) ** n
        approx = total * 2 ** h
        assert abs(v.to_rational() - approx) < Fraction(1, 10 ** 60)
