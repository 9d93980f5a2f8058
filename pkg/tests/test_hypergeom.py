import math

import mpmath
import pytest
from hypothesis import assume, given, settings, strategies as st

from specfun import hypergeom as h
from specfun import bessel, orthopoly
from specfun.errors import DivergenceError


def test_gauss_examples():
    assert h.gauss_2f1(2, 1.7, 1.7, 0.5).value == pytest.approx(4.0, rel=1e-14)
    assert h.gauss_2f1(1, 1, 2, 0.5).value == pytest.approx(2 * math.log(2), rel=1e-14)
    assert h.gauss_2f1(0.3, 0.4, 0.5, 0.0).value == 1.0
    assert h.gauss_2f1(-3, 4, 1, 0.25).value == pytest.approx(-0.4375, rel=1e-15)
    with pytest.raises(DivergenceError):
        h.gauss_2f1(0.5, 0.5, 1, 1.5)


def test_gauss_sum_examples():
    assert h.gauss_sum_at_1(0.5, 0.5, 2) == pytest.approx(4 / math.pi, rel=1e-14)
    assert h.gauss_sum_at_1(1, 1, 3) == pytest.approx(2.0, rel=1e-14)
    exact = sum(h.pochhammer(-2, r) * h.pochhammer(5, r) / (h.pochhammer(3, r) * math.factorial(r)) for r in range(3))
    assert h.gauss_sum_at_1(-2, 5, 3) == pytest.approx(exact, rel=1e-15)


def test_kummer_and_pfq_examples():
    assert h.kummer_1f1(1.3, 1.3, 2).value == pytest.approx(math.exp(2), rel=1e-14)
    assert h.kummer_1f1(-3, 1, 0.7).value == pytest.approx(orthopoly.laguerre_l(3, 0.7), rel=1e-14)
    assert h.kummer_1f1(0.4, 2.5, 0.0).value == 1.0
    assert h.pfq([], [], 1.0).value == pytest.approx(math.e, rel=1e-15)
    assert h.pfq([3], [], 0.25).value == pytest.approx(0.75**-3, rel=1e-14)


@settings(max_examples=60, deadline=None)
@given(st.floats(-3, 3), st.floats(-3, 3), st.floats(0.2, 4), st.floats(-0.9, 0.9))
def test_gauss_matches_mpmath(a, b, c, x):
    ref = float(mpmath.hyp2f1(a, b, c, x))
    assume(abs(ref) < 1e6)
    scale = float(mpmath.hyp2f1(abs(a), abs(b), c, abs(x)))
    assert abs(h.gauss_2f1(a, b, c, x).value - ref) <= 1e-11 * max(1.0, scale)


@settings(max_examples=60, deadline=None)
@given(st.floats(-3, 3), st.floats(0.2, 4), st.floats(-5, 5))
def test_kummer_matches_mpmath(a, b, x):
    ref = float(mpmath.hyp1f1(a, b, x))
    scale = float(mpmath.hyp1f1(abs(a), b, abs(x)))
    assert abs(h.kummer_1f1(a, b, x).value - ref) <= 1e-12 * max(1.0, scale)


@settings(max_examples=40, deadline=None)
@given(st.floats(-3, 3), st.floats(-3, 3), st.floats(0.2, 4), st.floats(-0.9, 0.9))
def test_gauss_symmetry(a, b, c, x):
    assert h.gauss_2f1(a, b, c, x).value == h.gauss_2f1(b, a, c, x).value


@settings(max_examples=30, deadline=None)
@given(st.floats(-3, 3), st.floats(0.1, 4), st.floats(-3, 3))
def test_contiguous_relation(a, b, x):
    k = lambda p, q: h.kummer_1f1(p, q, x).value
    r = x * k(a + 1, b + 1) + b * k(a, b) - b * k(a + 1, b)
    scale = max(1.0, abs(x * k(a + 1, b + 1)), abs(b * k(a, b)))
    assert abs(r) <= 1e-10 * scale


@pytest.mark.parametrize("n", [0, 1, 2])
@pytest.mark.parametrize("x", [0.5, 2.0, 5.0])
def test_bessel_reduction(n, x):
    z = (x / 2) ** n / math.gamma(n + 1) * complex(mpmath.exp(-1j * x)) * h._kummer_complex(n + 0.5, 2 * n + 1, 2j * x, None)
    assert abs(z.imag) <= 1e-12
    assert h.reduce_to_family("bessel_j", (n,), x) == pytest.approx(bessel.bessel_j(n, x), abs=1e-9)


@pytest.mark.parametrize("l, m", [(2, 1), (3, 2)])
@pytest.mark.parametrize("x", [0.0, 0.4, -0.4])
def test_assoc_legendre_reduction(l, m, x):
    assert h.reduce_to_family("assoc_legendre", (l, m), x) == pytest.approx(
        orthopoly.assoc_legendre(l, m, x), abs=1e-9
    )
