import math

import mpmath
import pytest
from hypothesis import given, settings, strategies as st

from specfun import gamma as g
from specfun.errors import PoleError


@pytest.mark.parametrize("x, expected", [(1, 1.0), (0.5, math.sqrt(math.pi)), (-0.5, -2 * math.sqrt(math.pi)), (5, 24.0)])
def test_gamma_values(x, expected):
    assert g.gamma(x) == pytest.approx(expected, rel=1e-14)


@pytest.mark.parametrize("x", [0, -1, -7])
def test_gamma_poles(x):
    with pytest.raises(PoleError):
        g.gamma(x)


def test_gamma_overflow():
    with pytest.raises(OverflowError):
        g.gamma(180.0)


@settings(max_examples=100, deadline=None)
@given(st.floats(-9.9, 30).filter(lambda x: abs(x - round(x)) > 1e-3 or x > 0.5))
def test_gamma_matches_mpmath(x):
    assert g.gamma(x) == pytest.approx(float(mpmath.gamma(x)), rel=1e-13)


@settings(max_examples=200, deadline=None)
@given(st.floats(0.5, 20))
def test_recurrence(x):
    assert abs(g.gamma(x + 1) - x * g.gamma(x)) <= 1e-10 * abs(g.gamma(x + 1))


@settings(max_examples=100, deadline=None)
@given(st.floats(-5, 5).filter(lambda x: abs(x - round(x)) > 1e-4))
def test_reflection(x):
    rhs = math.pi / math.sin(math.pi * x)
    assert abs(g.gamma(x) * g.gamma(1 - x) - rhs) <= 1e-9 * abs(rhs)


@pytest.mark.parametrize("x", [0.25 + 0.25 * k for k in range(40)])
def test_duplication(x):
    rhs = 2 ** (2 * x - 1) / math.sqrt(math.pi) * g.gamma(x) * g.gamma(x + 0.5)
    assert g.gamma(2 * x) == pytest.approx(rhs, rel=1e-9)


def test_weierstrass_and_euler_limit():
    assert g.gamma_weierstrass(0.5, 10**5) == pytest.approx(g.gamma(0.5), rel=1e-5)
    # the dropped factors contribute about x^2 / (2N) to the logarithm
    w = g.gamma_weierstrass(2, 10**4)
    assert w == pytest.approx(float(mpmath.nprod(lambda n: mpmath.exp(2 / n) / (1 + 2 / n), [1, 10**4]))
                              * math.exp(-2 * g.EULER_GAMMA) / 2, rel=1e-12)
    assert abs(w - 1.0) <= 1.05 * 2**2 / (2 * 10**4)
    for x in (0.5, 1.5, 3):
        assert g.gamma_euler_limit(x, 10**5) == pytest.approx(g.gamma(x), rel=1e-4)


def test_incomplete_gamma_examples():
    assert g.incomplete_gamma_lower(1, 2) == pytest.approx(1 - math.exp(-2), rel=1e-13)
    assert g.incomplete_gamma_upper(1, 2) == pytest.approx(math.exp(-2), rel=1e-13)
    assert g.incomplete_gamma_lower(0.5, 1) / math.sqrt(math.pi) == pytest.approx(float(mpmath.erf(1)), rel=1e-13)


@settings(max_examples=50, deadline=None)
@given(st.floats(0.05, 5), st.floats(0.05, 5))
def test_incomplete_gamma_recurrences(x, a):
    t = a**x * math.exp(-a)
    lo1, lo = g.incomplete_gamma_lower(x + 1, a), g.incomplete_gamma_lower(x, a)
    up1, up = g.incomplete_gamma_upper(x + 1, a), g.incomplete_gamma_upper(x, a)
    assert abs(lo1 - (x * lo - t)) <= 1e-10 * max(abs(lo1), t)
    assert abs(up1 - (x * up + t)) <= 1e-10 * abs(up1)
    assert float(mpmath.gammainc(x, 0, a)) == pytest.approx(lo, rel=1e-11)


@pytest.mark.parametrize("x, a", [(0.7, 1.3), (2.0, 0.4), (3.5, 4.0)])
def test_incomplete_gamma_derivatives(x, a):
    h = 1e-5
    d_lo = (g.incomplete_gamma_lower(x, a + h) - g.incomplete_gamma_lower(x, a - h)) / (2 * h)
    d_up = (g.incomplete_gamma_upper(x, a + h) - g.incomplete_gamma_upper(x, a - h)) / (2 * h)
    assert d_lo == pytest.approx(a ** (x - 1) * math.exp(-a), abs=1e-6)
    assert d_up == pytest.approx(-(a ** (x - 1)) * math.exp(-a), abs=1e-6)


def test_digamma_polygamma():
    assert g.digamma(1) == pytest.approx(-g.EULER_GAMMA, rel=1e-14)
    assert g.digamma(2) == pytest.approx(1 - g.EULER_GAMMA, rel=1e-14)
    assert g.digamma(0.75) - g.digamma(0.25) == pytest.approx(math.pi, rel=1e-13)
    assert g.polygamma(0, 1) == pytest.approx(-g.EULER_GAMMA, rel=1e-14)
    assert g.polygamma(1, 1) == pytest.approx(math.pi**2 / 6, rel=1e-13)
    assert g.polygamma(1, 2) == pytest.approx(math.pi**2 / 6 - 1, rel=1e-13)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 4), st.floats(0.1, 30))
def test_polygamma_matches_mpmath(m, x):
    assert g.polygamma(m, x) == pytest.approx(float(mpmath.polygamma(m, x)), rel=1e-11)


def test_beta():
    assert g.beta(1, 1) == pytest.approx(1.0, rel=1e-15)
    assert g.beta(0.5, 0.5) == pytest.approx(math.pi, rel=1e-14)
    assert g.beta(2, 3) == pytest.approx(1 / 12, rel=1e-14)


@settings(max_examples=50, deadline=None)
@given(st.floats(0.1, 20), st.floats(0.1, 20))
def test_beta_symmetric(x, y):
    assert g.beta(x, y) == g.beta(y, x)


def test_stirling():
    assert g.stirling(10) == pytest.approx(3598695.62, rel=1e-8)
    assert g.stirling(1) == pytest.approx(math.sqrt(2 * math.pi) / math.e, rel=1e-12)
    errs = [abs(g.gamma(x + 1) / g.stirling(x) - 1) for x in (5, 10, 20, 50)]
    errs.append(abs(math.exp(g.lgamma(101) - math.log(g.stirling(100))) - 1))
    assert errs == sorted(errs, reverse=True) and errs[-1] < 1e-3
