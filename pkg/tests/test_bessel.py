import math

import mpmath
import pytest
from hypothesis import given, settings, strategies as st

from specfun import bessel as b
from specfun.errors import DomainError
from specfun.numkernel import richardson_limit

SQ = math.sqrt(2 / math.pi)


def test_bessel_j_examples():
    assert b.bessel_j(0, 0) == 1.0
    assert b.bessel_j(0.5, math.pi / 2) == pytest.approx(2 / math.pi, rel=1e-13)
    assert b.bessel_j(-3, 2.5) == pytest.approx(-b.bessel_j(3, 2.5), rel=1e-14)
    assert b.bessel_j(1, 0.001) == pytest.approx(0.0005, rel=1e-6)


def test_bessel_y_examples():
    assert b.bessel_y(-0.5, 1) == pytest.approx(SQ * math.sin(1), rel=1e-12)
    assert b.bessel_y(0.5, 1) == pytest.approx(-SQ * math.cos(1), rel=1e-12)
    assert b.bessel_y(0, 20) == pytest.approx(math.sqrt(2 / (20 * math.pi)) * math.sin(20 - math.pi / 4), abs=2e-3)


def test_y_half_order_limit():
    # the closed form -sqrt(2/(pi x)) cos x at x = 2 is 0.2347857
    s = [(h, b.bessel_y(0.5 + h, 2.0)) for h in (0.02, 0.01, 0.005)]
    closed = -math.sqrt(2 / (math.pi * 2)) * math.cos(2)
    assert closed == pytest.approx(0.2347857, abs=1e-7)
    assert richardson_limit(s, power=1) == pytest.approx(closed, abs=1e-6)


def test_modified_examples():
    assert b.bessel_i(0.5, 1) == pytest.approx(SQ * math.sinh(1), rel=1e-13)
    assert b.bessel_i(-0.5, 1) == pytest.approx(SQ * math.cosh(1), rel=1e-13)
    assert b.bessel_i(0, 0) == 1.0
    k = math.sqrt(math.pi / 2) * math.exp(-1)
    assert b.bessel_k(0.5, 1) == pytest.approx(k, rel=1e-12)
    assert b.bessel_k(-0.5, 1) == pytest.approx(k, rel=1e-12)
    assert b.bessel_k(0, 5) == pytest.approx(math.sqrt(math.pi / 10) * math.exp(-5), rel=0.05)


def test_hankel_examples():
    h = b.hankel1(0.5, math.pi)
    assert h.re == pytest.approx(0.0, abs=1e-14) and h.im == pytest.approx(math.sqrt(2) / math.pi, rel=1e-12)
    h = b.hankel1(0, 1)
    assert (h.re, h.im) == (pytest.approx(b.bessel_j(0, 1)), pytest.approx(b.bessel_y(0, 1)))
    s = complex(b.hankel1(1, 2)) + complex(b.hankel2(1, 2))
    assert s.real == pytest.approx(2 * b.bessel_j(1, 2), rel=1e-14) and s.imag == 0.0


def test_spherical_examples():
    assert b.spherical_j(0, 1) == pytest.approx(math.sin(1), rel=1e-14)
    assert b.spherical_y(0, 1) == pytest.approx(-math.cos(1), rel=1e-14)
    assert b.spherical_j(2, 0.01) == pytest.approx(0.01**2 / 15, rel=1e-4)


def test_domain_errors():
    with pytest.raises(DomainError):
        b.bessel_y(0, 0)
    with pytest.raises(DomainError):
        b.bessel_k(1, -1)


@settings(max_examples=60, deadline=None)
@given(st.floats(-6, 6), st.floats(0.05, 60))
def test_j_matches_mpmath(nu, x):
    ref = float(mpmath.besselj(nu, x))
    scale = max(abs(ref), float(abs(mpmath.besselj(nu, x + 0.3))), 1e-3)
    assert abs(b.bessel_j(nu, x) - ref) <= 1e-10 * scale


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 6), st.floats(0.2, 30))
def test_integer_order_y_k_match_mpmath(n, x):
    y = float(mpmath.bessely(n, x))
    assert abs(b.bessel_y(n, x) - y) <= 1e-8 * max(1.0, abs(y))
    k = float(mpmath.besselk(n, x))
    assert b.bessel_k(n, x) == pytest.approx(k, rel=1e-8)


@settings(max_examples=40, deadline=None)
@given(st.floats(-4, 4), st.floats(0.05, 20))
def test_i_matches_mpmath(nu, x):
    assert b.bessel_i(nu, x) == pytest.approx(float(mpmath.besseli(nu, x)), rel=1e-10, abs=1e-12)


@pytest.mark.parametrize("n", range(1, 9))
@pytest.mark.parametrize("x", [0.5, 1, 2, 5, 10])
def test_recurrence_ladders(n, x):
    assert abs(2 * n / x * b.bessel_j(n, x) - b.bessel_j(n - 1, x) - b.bessel_j(n + 1, x)) <= 1e-9
    y = 2 * n / x * b.bessel_y(n, x) - b.bessel_y(n - 1, x) - b.bessel_y(n + 1, x)
    assert abs(y) <= 1e-9 * max(1.0, abs(b.bessel_y(n + 1, x)))
    i = 2 * n / x * b.bessel_i(n, x) - b.bessel_i(n - 1, x) + b.bessel_i(n + 1, x)
    assert abs(i) <= 1e-9 * max(1.0, b.bessel_i(n - 1, x))
    k = 2 * n / x * b.bessel_k(n, x) + b.bessel_k(n - 1, x) - b.bessel_k(n + 1, x)
    assert abs(k) <= 1e-9 * max(1.0, b.bessel_k(n + 1, x))


@pytest.mark.parametrize("n", range(1, 6))
@pytest.mark.parametrize("x", [0.7, 3.0, 9.0])
def test_spherical_recurrence(n, x):
    for f in (b.spherical_j, b.spherical_y):
        r = (2 * n + 1) / x * f(n, x) - f(n - 1, x) - f(n + 1, x)
        assert abs(r) <= 1e-9 * max(1.0, abs(f(n + 1, x)))


@pytest.mark.parametrize("x", [0.5, 1, 2])
@pytest.mark.parametrize("t", [0.3, -0.4])
def test_generating_function(x, t):
    s = sum(t**n * b.bessel_j(n, x) for n in range(-25, 26))
    assert abs(math.exp(x / 2 * (t - 1 / t)) - s) <= 1e-9


def test_complex_j_matches_mpmath():
    for nu, z in [(0, 1 + 1j), (1.5, 2 - 0.5j), (3, 0.3j)]:
        ref = complex(mpmath.besselj(nu, z))
        assert abs(b.bessel_j_complex(nu, z) - ref) <= 1e-12 * max(1, abs(ref))
