import math

import mpmath
import pytest
from hypothesis import given, settings, strategies as st

from specfun import integral_fns as f
from specfun.errors import DomainError, NonConvergence
from specfun.gamma import EULER_GAMMA, incomplete_gamma_lower


def test_erf_examples():
    assert f.erf(0) == 0.0
    assert f.erf(1) == pytest.approx(0.8427007929497149, rel=1e-15)
    assert f.erf(-1) == -f.erf(1)


def test_fresnel_examples():
    assert f.fresnel_c(0) == 0.0 and f.fresnel_s(0) == 0.0
    assert f.fresnel_c(1) == pytest.approx(0.7798934003768228, rel=1e-14)
    assert f.fresnel_s(1) == pytest.approx(0.4382591473903548, rel=1e-14)
    with pytest.raises(NonConvergence):
        f.fresnel_c(5)


def test_exponential_integral_examples():
    assert f.ein(0) == 0.0
    assert f.ein(1) == pytest.approx(0.7965995992970531, rel=1e-14)
    assert f.e1(1) == pytest.approx(0.21938393439552029, rel=1e-14)
    assert f.ei(-1) == pytest.approx(-f.e1(1), rel=1e-14)
    assert f.e1(50) * 50 * math.exp(50) == pytest.approx(1.0, rel=0.03)
    with pytest.raises(DomainError):
        f.e1(-1)


def test_li_si_ci_examples():
    assert f.li(0.5) == pytest.approx(-0.3786710430, abs=1e-10)
    assert abs(f.li(1e-6)) < 1e-7
    assert f.li(2) == pytest.approx(1.0451637801, abs=1e-10)
    assert f.si(0) == 0.0
    assert f.si(1) == pytest.approx(0.9460830703671830, rel=1e-14)
    assert f.ci(1) == pytest.approx(0.3374039229009681, rel=1e-14)
    assert abs(f.si(40) - math.pi / 2) < 0.03


@settings(max_examples=80, deadline=None)
@given(st.floats(-6, 6))
def test_erf_erfc_match_mpmath(x):
    assert f.erf(x) == pytest.approx(float(mpmath.erf(x)), rel=1e-14, abs=1e-300)
    assert f.erfc(x) == pytest.approx(float(mpmath.erfc(x)), rel=1e-13)


@settings(max_examples=40, deadline=None)
@given(st.floats(0.01, 4))
def test_erf_incomplete_gamma_relation(x):
    assert f.erf(x) == pytest.approx(incomplete_gamma_lower(0.5, x * x) / math.sqrt(math.pi), rel=1e-10)


@settings(max_examples=40, deadline=None)
@given(st.floats(-4, 4))
def test_fresnel_match_mpmath(x):
    assert f.fresnel_c(x) == pytest.approx(float(mpmath.fresnelc(x)), rel=1e-13, abs=1e-15)
    assert f.fresnel_s(x) == pytest.approx(float(mpmath.fresnels(x)), rel=1e-13, abs=1e-15)


@pytest.mark.parametrize("x", [-3 + 0.25 * k for k in range(25)])
def test_erf_derivative(x):
    h = 1e-6
    d = (f.erf(x + h) - f.erf(x - h)) / (2 * h)
    assert d == pytest.approx(2 / math.sqrt(math.pi) * math.exp(-x * x), abs=1e-6)


@settings(max_examples=60, deadline=None)
@given(st.floats(1e-3, 10))
def test_decomposition(x):
    assert abs(f.e1(x) + EULER_GAMMA + math.log(x) - f.ein(x)) <= 1e-12 * max(1.0, f.ein(x))


@settings(max_examples=60, deadline=None)
@given(st.floats(0.01, 60))
def test_e1_ei_si_ci_match_mpmath(x):
    assert f.e1(x) == pytest.approx(float(mpmath.e1(x)), rel=1e-12)
    assert f.ei(x) == pytest.approx(float(mpmath.ei(x)), rel=1e-12, abs=1e-14)
    assert f.si(x) == pytest.approx(float(mpmath.si(x)), rel=1e-12)
    assert f.ci(x) == pytest.approx(float(mpmath.ci(x)), rel=1e-10, abs=1e-13)
