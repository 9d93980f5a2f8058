import math
from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings, strategies as st

from specfun import orthopoly as o
from specfun.errors import DomainError


def test_legendre_examples():
    assert all(o.legendre_p(l, 1.0) == 1.0 for l in range(30))
    assert o.legendre_p(4, 0.0) == 0.375
    assert o.legendre_p(3, 0.5) == -0.4375


def test_assoc_legendre_follows_defining_formula():
    # no Condon-Shortley phase: P_1^1 = +sqrt(1 - x^2), P_2^-1 = -x sqrt(1 - x^2) / 2
    assert o.assoc_legendre(1, 1, 0.0) == pytest.approx(1.0)
    assert o.assoc_legendre(2, -1, 0.6) == pytest.approx(-0.24, rel=1e-14)
    with pytest.raises(DomainError):
        o.assoc_legendre(2, 1, 1.5)


def _assoc_oracle(l, m, x):
    """Explicit power sum for (1 - x^2)^(m/2) d^m P_l / dx^m at 50 digits."""
    with mpmath.workdps(50):
        x = mpmath.mpf(x)
        s = mpmath.fsum(
            (-1) ** k * mpmath.factorial(2 * l - 2 * k)
            / (2**l * mpmath.factorial(k) * mpmath.factorial(l - k) * mpmath.factorial(l - 2 * k - m))
            * x ** (l - 2 * k - m)
            for k in range((l - m) // 2 + 1)
        )
        return float((1 - x * x) ** (mpmath.mpf(m) / 2) * s)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10), st.integers(0, 10), st.floats(-0.99, 0.99))
def test_assoc_legendre_matches_mpmath(l, m, x):
    m = min(m, l)
    ref = _assoc_oracle(l, m, x)
    assert o.assoc_legendre(l, m, x) == pytest.approx(ref, rel=1e-10, abs=1e-12)


def test_spherical_harmonic_examples():
    y = o.spherical_harmonic(0, 0, 0.7, 2.1)
    assert y.re == pytest.approx(1 / (2 * math.sqrt(math.pi)), rel=1e-14) and y.im == pytest.approx(0.0, abs=1e-16)
    assert o.spherical_harmonic(1, 0, 0.0, 0.0).re == pytest.approx(math.sqrt(3 / (4 * math.pi)), rel=1e-14)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 6), st.integers(-6, 6), st.floats(0, math.pi), st.floats(0, 2 * math.pi))
def test_spherical_harmonic_matches_mpmath(l, m, theta, phi):
    if abs(m) > l:
        m = l
    ref = complex(mpmath.spherharm(l, m, theta, phi))
    assert abs(complex(o.spherical_harmonic(l, m, theta, phi)) - ref) <= 1e-12


def test_hermite_laguerre_examples():
    assert o.hermite_h(0, 3.3) == 1.0
    assert o.hermite_h(4, 0.0) == 12.0
    assert o.hermite_h(3, 1.0) == -4.0
    assert all(o.laguerre_l(n, 0.0) == 1.0 for n in range(11))
    assert o.laguerre_l(1, 0.3) == pytest.approx(0.7, rel=1e-15)
    assert o.laguerre_l(2, 2.0) == -1.0
    assert o.assoc_laguerre(0, 3, 1.7) == 1.0
    assert o.assoc_laguerre(1, 1, 0.5) == 1.5


def test_chebyshev_examples():
    assert all(o.chebyshev_t(n, 1.0) == 1.0 for n in range(25))
    assert o.chebyshev_t(5, 0.5) == pytest.approx(0.5, rel=1e-15)
    assert o.chebyshev_u(1, 0.6) == pytest.approx(0.8, rel=1e-15)
    assert o.chebyshev_u(0, 0.3) == 0.0


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 30), st.floats(-1, 1))
def test_polynomials_match_mpmath(n, x):
    assert o.legendre_p(n, x) == pytest.approx(_assoc_oracle(n, 0, x), rel=1e-12, abs=1e-13)
    with mpmath.workdps(50):
        t = float(mpmath.cos(n * mpmath.acos(mpmath.mpf(x))))
    assert o.chebyshev_t(n, x) == pytest.approx(t, rel=1e-12, abs=1e-13)
    # sin convention: U_n(cos t) = sin(n t)
    assert o.chebyshev_u(n, x) == pytest.approx(math.sin(n * math.acos(x)), abs=1e-12)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 25), st.integers(0, 4), st.floats(-4, 12))
def test_hermite_laguerre_match_mpmath(n, k, x):
    h = float(mpmath.hermite(n, x))
    # |H_n(i|x|)| sums the coefficient magnitudes, a natural rounding scale
    assert abs(o.hermite_h(n, x) - h) <= 1e-12 * max(1.0, float(abs(mpmath.hermite(n, 1j * abs(x)))))
    lag = float(mpmath.laguerre(n, k, x))
    scale = float(mpmath.fsum(abs(mpmath.binomial(n + k, n - r) * x**r / mpmath.factorial(r)) for r in range(n + 1)))
    assert abs(o.assoc_laguerre(n, k, x) - lag) <= 1e-12 * max(1.0, scale)


@pytest.mark.parametrize("l", range(13))
def test_legendre_table_is_exact(l):
    p = o.legendre_coefficients(l)
    # Bonnet recurrence in exact rationals
    q0, q1 = [Fraction(1)], [Fraction(0), Fraction(1)]
    for n in range(1, l):
        nxt = [Fraction(0)] + [(2 * n + 1) * c for c in q1]
        for i, c in enumerate(q0):
            nxt[i] -= n * c
        q0, q1 = q1, [c / (n + 1) for c in nxt]
    ref = q0 if l == 0 else q1
    assert [Fraction(c) for c in p.coeffs] + [0] * (len(ref) - len(p.coeffs)) == ref + [0] * (len(p.coeffs) - len(ref))


def test_series_fits():
    c = o.legendre_series_fit(lambda x: x * x, 4)
    assert c[0] == pytest.approx(1 / 3, rel=1e-12) and c[2] == pytest.approx(2 / 3, rel=1e-12)
    assert max(abs(c[1]), abs(c[3]), abs(c[4])) < 1e-12
    c = o.legendre_series_fit(lambda x: o.legendre_p(3, x), 6)
    assert c[3] == pytest.approx(1.0, rel=1e-12) and max(abs(v) for i, v in enumerate(c) if i != 3) <= 1e-10
    c = o.legendre_series_fit(lambda x: math.log((1 + x) / (1 - x)), 7)
    for n in (1, 3, 5, 7):
        assert c[n] == pytest.approx(2 * (2 * n + 1) / (n * (n + 1)), abs=1e-6)
    c = o.hermite_series_fit(lambda x: x, 3)
    assert c[1] == pytest.approx(0.5, rel=1e-12) and max(abs(c[0]), abs(c[2]), abs(c[3])) < 1e-12
    c = o.hermite_series_fit(lambda x: o.hermite_h(2, x), 3)
    assert c[2] == pytest.approx(1.0, rel=1e-12)
    c = o.hermite_series_fit(lambda x: x * x, 3)
    assert c[0] == pytest.approx(0.5, rel=1e-12) and c[2] == pytest.approx(0.25, rel=1e-12)


def test_exact_poly_arithmetic():
    p = o.legendre_coefficients(2)
    q = p * p + p * (-1)
    assert q.eval_exact(Fraction(1)) == 0
    assert p.derivative(1).eval_exact(Fraction(1, 2)) == Fraction(3, 2)
