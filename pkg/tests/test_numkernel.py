import math

import mpmath
import pytest
from hypothesis import given, settings, strategies as st

from specfun.errors import InsufficientSamples, NonConvergence
from specfun.gamma import gamma
from specfun.numkernel import (
    DEFAULT_TOL,
    ComplexValue,
    ToleranceSpec,
    integrate_finite,
    integrate_semi_infinite,
    richardson_limit,
    sum_series,
)


def test_geometric_series():
    r = sum_series(lambda k: 0.5**k)
    assert r.converged and r.value == pytest.approx(2.0, rel=1e-14)


def test_exponential_series():
    r = sum_series(lambda k: 1 / math.factorial(k))
    assert r.value == pytest.approx(math.e, rel=1e-15)


def test_erf_series_value():
    r = sum_series(lambda k: (-1) ** k / (math.factorial(k) * (2 * k + 1)))
    assert 2 / math.sqrt(math.pi) * r.value == pytest.approx(float(mpmath.erf(1)), rel=1e-14)


def test_nonconvergence_carries_partial():
    with pytest.raises(NonConvergence) as info:
        sum_series(lambda k: 1.0 / (k + 1), ToleranceSpec(max_terms=50))
    assert info.value.partial is not None and not info.value.partial.converged


def test_tolerance_validation():
    with pytest.raises(ValueError):
        ToleranceSpec(target_rel_tol=0.0)
    assert DEFAULT_TOL.target_rel_tol == 1e-12 and DEFAULT_TOL.max_terms == 500


@pytest.mark.parametrize(
    "f, a, b, expected, kw",
    [
        (lambda x: x * x, 0.0, 1.0, 1 / 3, {}),
        (lambda u: math.sqrt(1 - u * u), 0.0, 1.0, math.pi / 4, {}),
        (lambda u: math.log(1 / u) ** 2, 0.0, 1.0, 2.0, {"left_power": 0.5}),
    ],
)
def test_integrate_finite_examples(f, a, b, expected, kw):
    assert integrate_finite(f, a, b, **kw).value == pytest.approx(expected, rel=1e-10)


def test_integrate_semi_infinite_examples():
    from specfun.bessel import bessel_j

    assert integrate_semi_infinite(lambda t: math.exp(-t), 0.0).value == pytest.approx(1.0, rel=1e-12)
    assert integrate_semi_infinite(lambda t: math.exp(-t) * t**4, 0.0).value == pytest.approx(24.0, rel=1e-10)
    v = integrate_semi_infinite(lambda x: math.exp(-x) * bessel_j(0, x), 0.0).value
    assert v == pytest.approx(1 / math.sqrt(2), rel=1e-9)


@pytest.mark.parametrize("x", [0.5, 1.0, 2.5, 5.0])
def test_semi_infinite_matches_gamma(x):
    v = integrate_semi_infinite(lambda t: math.exp(-t) * t ** (x - 1), 0.0, left_power=x)
    assert v.value == pytest.approx(gamma(x), rel=1e-9)


def test_richardson_examples():
    assert richardson_limit([(0.1, 1.1), (0.05, 1.05)]) == pytest.approx(1.0, abs=1e-14)
    s = [(h, math.cos(h)) for h in (0.2, 0.1, 0.05)]
    assert richardson_limit(s, power=2) == pytest.approx(1.0, abs=1e-8)
    with pytest.raises(InsufficientSamples):
        richardson_limit([(0.1, 1.0)])


def test_complex_value_roundtrip():
    z = ComplexValue.from_complex(1.5 - 2j)
    assert complex(z) == 1.5 - 2j and abs(z) == pytest.approx(2.5)


@settings(max_examples=25, deadline=None)
@given(
    st.lists(st.floats(-3, 3), min_size=7, max_size=7),
    st.floats(-5, 4),
    st.floats(0.1, 5),
)
def test_polynomials_integrate_exactly(coeffs, a, width):
    b = min(a + width, 5.0)
    f = lambda x: sum(c * x**k for k, c in enumerate(coeffs))
    exact = sum(c * (b ** (k + 1) - a ** (k + 1)) / (k + 1) for k, c in enumerate(coeffs))
    scale = sum(abs(c) * max(abs(a), abs(b)) ** k for k, c in enumerate(coeffs)) * (b - a)
    assert abs(integrate_finite(f, a, b).value - exact) <= 1e-12 * max(scale, 1e-300)


@settings(max_examples=20, deadline=None)
@given(st.floats(0.05, 0.9), st.floats(0.5, 3.0))
def test_error_estimate_bounds_remainder(q, c):
    r = sum_series(lambda k: c * q**k, ToleranceSpec(target_rel_tol=1e-8, target_abs_tol=1e-300))
    assert abs(c / (1 - q) - r.value) <= r.err_estimate * (1 + 1e-6) + 1e-15
