"""Identities for the Legendre, Hermite, Laguerre and Chebyshev families."""

from __future__ import annotations

import cmath
import math
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from ..numkernel import kronrod_rule
from ..orthopoly import (
    ExactPoly,
    assoc_laguerre,
    assoc_legendre,
    chebyshev_t,
    chebyshev_t_series,
    chebyshev_u,
    chebyshev_u_series,
    hermite_coefficients,
    hermite_h,
    hermite_series_fit,
    laguerre_coefficients,
    laguerre_l,
    legendre_coefficients,
    legendre_p,
    legendre_p_derivative,
    legendre_series_fit,
    spherical_harmonic,
)
from .core import case
from .tools import deriv, quad, quad_inf

pi = math.pi
SQRT, EXP, COS, SIN = math.sqrt, math.exp, math.cos, math.sin

X_UNIT = [-0.9, -0.45, 0.0, 0.3, 0.75, 0.95]
X_OPEN = [-0.8, -0.35, 0.1, 0.55, 0.85]
X_LINE = [-1.3, -0.4, 0.25, 0.7, 2.2]
X_POS = [0.4, 1.7, 4.5, 9.0]
GEN_T = [0.2, -0.3]
ANGLES = [(0.4, 0.3), (1.1, 2.0), (2.5, -1.2)]

X = ExactPoly([0, 1])
ONE = ExactPoly([1])
MINUS_ONE = ExactPoly([-1])


def _grid(*axes):
    out = [()]
    for ax in axes:
        out = [p + (v,) for p in out for v in ax]
    return out


def _h_unit(x: float) -> float:
    """FD step keeping all stencil points inside (-1, 1)."""
    return min(0.05, (1.0 - abs(x)) / 4)


def _d(f, x, order=1):
    return deriv(f, x, order, h=_h_unit(x))


def _int11(p: ExactPoly) -> Fraction:
    """Exact integral of a polynomial over [-1, 1]."""
    return sum((2 * c / (k + 1) for k, c in enumerate(p.coeffs) if k % 2 == 0), Fraction(0))


# ---------------------------------------------------------------------------
# Independent exact constructions
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _rodrigues_base(l: int) -> ExactPoly:
    """(x^2 - 1)^l / (2^l l!)."""
    return (X * X + MINUS_ONE) ** l * Fraction(1, 2**l * factorial(l))


@lru_cache(maxsize=None)
def _rodrigues(l: int) -> ExactPoly:
    """d^l/dx^l of (x^2 - 1)^l / (2^l l!)."""
    return _rodrigues_base(l).derivative(l)


@lru_cache(maxsize=None)
def _legendre_power_series(l: int) -> ExactPoly:
    """sum_r (-1)^r (2l-2r)! / (2^l r! (l-r)! (l-2r)!) x^{l-2r}."""
    cs = [Fraction(0)] * (l + 1)
    for r in range(l // 2 + 1):
        cs[l - 2 * r] = Fraction((-1) ** r * factorial(2 * l - 2 * r), 2**l * factorial(r) * factorial(l - r) * factorial(l - 2 * r))
    return ExactPoly(cs)


def _assoc_rodrigues(l: int, m: int, x: float) -> float:
    """(1-x^2)^{m/2} d^{l+m}/dx^{l+m} (x^2-1)^l / (2^l l!), valid for -l <= m <= l."""
    return (1.0 - x * x) ** (m / 2) * _rodrigues_base(l).derivative(l + m)(x)


def _hermite_sum(n: int, x: float) -> float:
    """sum_r (-1)^r n! / (r! (n-2r)!) (2x)^{n-2r}, exactly."""
    q = 2 * Fraction(x)
    return float(sum(Fraction((-1) ** r * factorial(n), factorial(r) * factorial(n - 2 * r)) * q ** (n - 2 * r) for r in range(n // 2 + 1)))


def _laguerre_sum(n: int, x: float) -> float:
    """sum_r (-1)^r n! / ((r!)^2 (n-r)!) x^r, exactly."""
    q = Fraction(x)
    return float(sum(Fraction((-1) ** r * factorial(n), factorial(r) ** 2 * factorial(n - r)) * q**r for r in range(n + 1)))


def _assoc_laguerre_sum(n: int, k: int, x: float) -> float:
    """sum_r (-1)^r (n+k)! / ((n-r)! (k+r)! r!) x^r, exactly."""
    q = Fraction(x)
    return float(sum(Fraction((-1) ** r * factorial(n + k), factorial(n - r) * factorial(k + r) * factorial(r)) * q**r for r in range(n + 1)))


def _assoc_laguerre_sum_printed(n: int, k: int, x: float) -> float:
    """The series with sign (-1)^k and no r! in the denominator."""
    q = Fraction(x)
    return float(sum(Fraction((-1) ** k * factorial(n + k), factorial(n - r) * factorial(k + r)) * q**r for r in range(n + 1)))


def _laguerre_rodrigues(n: int, k: int) -> ExactPoly:
    """x^{-k} e^x d^n/dx^n (e^{-x} x^{n+k}) / n!, by exact repeated differentiation."""
    q = X ** (n + k)
    for _ in range(n):
        q = q.derivative() + q * (-1)  # d/dx (e^{-x} q) = e^{-x} (q' - q)
    cs = q.coeffs
    if any(c != 0 for c in cs[:k]):
        raise ArithmeticError("x^k does not divide the derivative")
    return ExactPoly(cs[k:]) * Fraction(1, factorial(n))


def _basis_peel(f: ExactPoly, basis) -> list[Fraction]:
    """Coefficients of f in a polynomial basis, by removing leading terms."""
    d = f.degree
    out = [Fraction(0)] * (d + 1)
    rest = f
    for r in range(d, -1, -1):
        lead = rest.coeffs[r] if r < len(rest.coeffs) else Fraction(0)
        b = basis(r)
        c = lead / b.coeffs[r]
        out[r] = c
        rest = rest + b * (-c)
    return out


# ---------------------------------------------------------------------------
# Legendre
# ---------------------------------------------------------------------------


def _p_ext(n: int, x: float) -> float:
    """P_n with the reflection P_{-n-1} = P_n for negative indices."""
    return legendre_p(n if n >= 0 else -n - 1, x)


def _dp_fd(l: int, x: float, order: int = 1) -> float:
    return deriv(lambda s: legendre_p(l, s), x, order, h=0.05)


def _legendre_cases():
    pts = _grid(range(0, 9), X_UNIT)
    pts_l1 = _grid(range(1, 9), X_UNIT)
    out = [
        case(
            "ch5.eq1.legendre-ode",
            "(1-x^2) P_l'' - 2x P_l' = -l(l+1) P_l, derivatives by finite differences",
            lambda l, x: (1 - x * x) * _dp_fd(l, x, 2) - 2 * x * _dp_fd(l, x),
            lambda l, x: -l * (l + 1) * legendre_p(l, x),
            pts,
            tol=1e-8,
            kind="finite-difference",
        ),
        case(
            "ch5.eq2.power-series",
            "P_l(x) = sum_r (-1)^r (2l-2r)!/(2^l r!(l-r)!(l-2r)!) x^{l-2r}, summed exactly",
            lambda l, x: legendre_p(l, x),
            lambda l, x: _legendre_power_series(l)(x),
            _grid([0, 1, 2, 5, 8, 12, 20, 25, 33, 40], X_UNIT),
            tol=1e-13,
            kind="series-truncation",
        ),
        case(
            "ch5.eq5.generating-function",
            "sum_{l<=30} t^l P_l(x) = (1 - 2tx + t^2)^{-1/2}",
            lambda t, x: math.fsum(t**l * legendre_p(l, x) for l in range(31)),
            lambda t, x: 1 / SQRT(1 - 2 * t * x + t * t),
            _grid(GEN_T, [-0.6, 0.1, 0.8]),
            tol=1e-13,
            kind="series-truncation",
        ),
        case(
            "ch5.eq6.rodrigues",
            "d^l/dx^l (x^2-1)^l / (2^l l!) equals the power series coefficient by coefficient, exactly",
            lambda l: float(max(abs(a - b) for a, b in zip(_rodrigues(l).coeffs, _legendre_power_series(l).coeffs))) + (_rodrigues(l).degree != l),
            lambda l: 0.0,
            range(0, 13),
            tol=1e-300,
            mode="abs",
        ),
        case(
            "ch5.eq6.rodrigues-table",
            "d^l/dx^l (x^2-1)^l / (2^l l!) equals the library coefficient table exactly",
            lambda l: float(_rodrigues(l) != legendre_coefficients(l)),
            lambda l: 0.0,
            range(0, 21),
            tol=1e-300,
            mode="abs",
        ),
        case(
            "ch5.eq7.laplace-integral",
            "P_l(x) = (1/pi) int_0^pi (x + sqrt(x^2-1) cos t)^l dt for x > 1",
            lambda l, x: quad(lambda t: (x + SQRT(x * x - 1) * COS(t)) ** l, 0.0, pi) / pi,
            lambda l, x: legendre_p(l, x),
            _grid(range(0, 7), [1.5, 2.0]),
            tol=1e-9,
            kind="quadrature",
            mode="rel",
        ),
        case(
            "ch5.eq7a.cosine-integral",
            "int_0^pi dt/(1 + a cos t) = pi/sqrt(1-a^2) for |a| < 1",
            lambda a: quad(lambda t: 1 / (1 + a * COS(t)), 0.0, pi),
            lambda a: pi / SQRT(1 - a * a),
            [0.3, -0.6, 0.9],
            tol=1e-11,
            kind="quadrature",
        ),
        case(
            "ch5.eq8a.value-at-one",
            "P_l(1) = 1",
            lambda l: legendre_p(l, 1.0),
            lambda l: 1.0,
            range(0, 41),
            tol=1e-14,
        ),
        case(
            "ch5.eq8b.value-at-minus-one",
            "P_l(-1) = (-1)^l",
            lambda l: legendre_p(l, -1.0),
            lambda l: (-1.0) ** l,
            range(0, 41),
            tol=1e-14,
        ),
        case(
            "ch5.eq8c.slope-at-one",
            "P_l'(1) = l(l+1)/2",
            lambda l: legendre_p_derivative(l, 1.0),
            lambda l: l * (l + 1) / 2,
            range(0, 21),
            tol=1e-14,
        ),
        case(
            "ch5.eq8d.slope-at-minus-one",
            "P_l'(-1) = (-1)^{l-1} l(l+1)/2",
            lambda l: legendre_p_derivative(l, -1.0),
            lambda l: (-1.0) ** (l - 1) * l * (l + 1) / 2,
            range(0, 21),
            tol=1e-14,
        ),
        case(
            "ch5.eq8e.even-at-zero",
            "P_{2l}(0) = (-1)^l (2l)! / (2^{2l} (l!)^2)",
            lambda l: legendre_p(2 * l, 0.0),
            lambda l: (-1) ** l * factorial(2 * l) / (4**l * factorial(l) ** 2),
            range(0, 16),
            tol=1e-14,
        ),
        case(
            "ch5.eq8e.even-at-zero.as-printed",
            "P_{2l}(0) against the printed (-1)^l 2l / (2^{2l} (l!)^2)",
            lambda l: legendre_p(2 * l, 0.0),
            lambda l: (-1) ** l * 2 * l / (4**l * factorial(l) ** 2),
            range(0, 6),
            tol=1e-10,
            xfail=True,
            notes="printed numerator 2l should be (2l)!",
        ),
        case(
            "ch5.eq8f.odd-at-zero",
            "P_{2l+1}(0) = 0",
            lambda l: legendre_p(2 * l + 1, 0.0),
            lambda l: 0.0,
            range(0, 20),
            tol=1e-15,
            mode="abs",
        ),
        case(
            "ch5.eq9.orthogonality",
            "int_{-1}^{1} P_l P_k dx / sqrt(N_l N_k) = delta_lk with N_l = 2/(2l+1)",
            lambda l, k: quad(lambda x: legendre_p(l, x) * legendre_p(k, x), -1.0, 1.0) / SQRT(4 / ((2 * l + 1) * (2 * k + 1))),
            lambda l, k: float(l == k),
            _grid(range(0, 9), range(0, 9)),
            tol=1e-12,
            kind="quadrature",
            mode="abs",
        ),
        case(
            "ch5.eq10.sturm-liouville",
            "d/dx[(1-x^2) P_l'] = -l(l+1) P_l, outer derivative by finite differences",
            lambda l, x: deriv(lambda s: (1 - s * s) * legendre_p_derivative(l, s), x, h=0.05),
            lambda l, x: -l * (l + 1) * legendre_p(l, x),
            pts,
            tol=1e-9,
            kind="finite-difference",
        ),
        case(
            "ch5.eq12.expansion",
            "e^x = sum_{r<=14} c_r P_r(x) with c_r = (r+1/2) int e^x P_r",
            lambda x: math.fsum(c * legendre_p(r, x) for r, c in enumerate(_exp_legendre_fit())),
            lambda x: EXP(x),
            X_UNIT,
            tol=1e-12,
            kind="quadrature",
        ),
        case(
            "ch5.eq13.projection",
            "(r+1/2) int f P_r equals the exact Legendre-basis coefficient of f = x^5 - 2x^2 + 1/2",
            lambda r: _poly_legendre_fit()[r],
            lambda r: float((_basis_peel(_TEST_POLY, legendre_coefficients) + [0] * 8)[r]),
            range(0, 8),
            tol=1e-13,
            kind="quadrature",
            mode="abs",
        ),
        case(
            "ch5.eq14a.three-term",
            "x P_l = ((l+1) P_{l+1} + l P_{l-1}) / (2l+1)",
            lambda l, x: x * legendre_p(l, x),
            lambda l, x: ((l + 1) * legendre_p(l + 1, x) + l * legendre_p(l - 1, x)) / (2 * l + 1),
            pts_l1,
            tol=1e-14,
        ),
        case(
            "ch5.eq14b.derivative-expansion",
            "P_l' = sum_{r<=floor((l-1)/2)} (2l-4r-1) P_{l-2r-1}",
            lambda l, x: legendre_p_derivative(l, x),
            lambda l, x: math.fsum((2 * l - 4 * r - 1) * legendre_p(l - 2 * r - 1, x) for r in range((l - 1) // 2 + 1)),
            pts_l1,
            tol=1e-13,
        ),
        case(
            "ch5.eq14b.derivative-expansion.as-printed",
            "P_l' against the sum with upper bound floor((l+1)/2), reading P_{-n-1} as P_n",
            lambda l, x: legendre_p_derivative(l, x),
            lambda l, x: math.fsum((2 * l - 4 * r - 1) * _p_ext(l - 2 * r - 1, x) for r in range((l + 1) // 2 + 1)),
            pts_l1,
            tol=1e-10,
            xfail=True,
            notes="the printed upper bound reaches negative indices",
        ),
        case(
            "ch5.eq14c.derivative-difference",
            "P_{l+1}' - P_{l-1}' = (2l+1) P_l",
            lambda l, x: legendre_p_derivative(l + 1, x) - legendre_p_derivative(l - 1, x),
            lambda l, x: (2 * l + 1) * legendre_p(l, x),
            pts_l1,
            tol=1e-13,
        ),
        case(
            "ch5.eq14d.derivative-shift",
            "x P_l' - P_{l-1}' = l P_l",
            lambda l, x: x * legendre_p_derivative(l, x) - legendre_p_derivative(l - 1, x),
            lambda l, x: l * legendre_p(l, x),
            pts_l1,
            tol=1e-13,
        ),
        case(
            "ch5.eq14e.derivative-shift-down",
            "P_l' - x P_{l-1}' = l P_{l-1}",
            lambda l, x: legendre_p_derivative(l, x) - x * legendre_p_derivative(l - 1, x),
            lambda l, x: l * legendre_p(l - 1, x),
            pts_l1,
            tol=1e-13,
        ),
        case(
            "ch5.eq15.projection-coefficients",
            "(r+1/2) int x P_l P_r is (l+1)/(2l+1) at r = l+1, l/(2l+1) at r = l-1 and 0 otherwise",
            lambda l, r: (r + 0.5) * quad(lambda x: x * legendre_p(l, x) * legendre_p(r, x), -1.0, 1.0),
            lambda l, r: (l + 1) / (2 * l + 1) if r == l + 1 else (l / (2 * l + 1) if r == l - 1 else 0.0),
            [(l, r) for l in range(1, 9) for r in range(0, l + 2)],
            tol=1e-13,
            kind="quadrature",
            mode="abs",
        ),
        case(
            "ch5.eq16.derivative-combination",
            "(l+1) P_{l+1} + l P_{l-1} = x (P_{l+1}' - P_{l-1}')",
            lambda l, x: (l + 1) * legendre_p(l + 1, x) + l * legendre_p(l - 1, x),
            lambda l, x: x * (legendre_p_derivative(l + 1, x) - legendre_p_derivative(l - 1, x)),
            pts_l1,
            tol=1e-13,
        ),
        case(
            "ch5.ex1a.potential-integral",
            "int_{-1}^{1} P_n(t) / sqrt(1 + x^2 - 2xt) dt = 2 x^n / (2n+1) for 0 < x < 1",
            lambda n, x: quad(lambda t: legendre_p(n, t) / SQRT(1 + x * x - 2 * x * t), -1.0, 1.0),
            lambda n, x: 2 * x**n / (2 * n + 1),
            _grid(range(0, 7), [0.3, 0.7]),
            tol=1e-11,
            kind="quadrature",
        ),
        case(
            "ch5.ex1b.derivative-recurrence",
            "P_{n+1}' = P_{n-1}' + (2n+1) P_n, exactly on Rodrigues polynomials",
            lambda n: float(_rodrigues(n + 1).derivative() != _rodrigues(n - 1).derivative() + _rodrigues(n) * (2 * n + 1)),
            lambda n: 0.0,
            range(1, 13),
            tol=1e-300,
            mode="abs",
        ),
        case(
            "ch5.ex1c.log-expansion",
            "ln((1+x)/(1-x)) has Legendre coefficients 2(2n+1)/(n(n+1)) for odd n and 0 for even n",
            lambda n: _log_legendre_fit()[n],
            lambda n: 2 * (2 * n + 1) / (n * (n + 1)) if n % 2 else 0.0,
            range(0, 9),
            tol=1e-6,
            kind="quadrature",
            mode="abs",
        ),
    ]
    return out


_TEST_POLY = ExactPoly([Fraction(1, 2), 0, -2, 0, 0, 1])


@lru_cache(maxsize=None)
def _poly_legendre_fit():
    return tuple(legendre_series_fit(_TEST_POLY, 7))


@lru_cache(maxsize=None)
def _exp_legendre_fit():
    return tuple(legendre_series_fit(EXP, 14))


@lru_cache(maxsize=None)
def _log_legendre_fit():
    return tuple(legendre_series_fit(lambda x: math.log((1 + x) / (1 - x)), 8))


# ---------------------------------------------------------------------------
# Associated Legendre and spherical harmonics
# ---------------------------------------------------------------------------

_LM = [(l, m) for l in range(0, 7) for m in range(0, l + 1)]


def _assoc_table_printed(l: int, m: int, x: float) -> float:
    """Worked table entries, with the sign pattern as printed."""
    s = SQRT(1 - x * x)
    table = {
        (1, 1): -s,
        (2, 1): -3 * x * s,
        (3, 1): -1.5 * (5 * x * x - 1) * s,
        (3, 3): -15 * s**3,
        (4, 1): -2.5 * (7 * x**3 - 3 * x) * s,
        (4, 3): -105 * x * s**3,
        (1, -1): 0.5 * s,
        (2, -1): 0.5 * x * s,
        (2, 2): 3 * (1 - x * x),
        (0, 0): 1.0,
    }
    return table[(l, m)]


_ASSOC_TABLE_ODD = [(1, 1), (2, 1), (3, 1), (3, 3), (4, 1), (4, 3), (1, -1), (2, -1)]
_ASSOC_TABLE = _ASSOC_TABLE_ODD + [(2, 2), (0, 0)]


def _assoc_fd(l: int, m: int, x: float, order: int = 1) -> float:
    return _d(lambda s: assoc_legendre(l, m, s), x, order)


def _dm_residual(l: int, m: int, x: float, extra: int) -> float:
    """(1-x^2) y'' - 2x(m+1) y' + [l(l+1) - m(m+1) - extra] y for y = D^m P_l, exactly."""
    y = legendre_coefficients(l).derivative(m)
    q = Fraction(x)
    res = (1 - q * q) * y.derivative(2).eval_exact(q) - 2 * q * (m + 1) * y.derivative().eval_exact(q)
    res += (l * (l + 1) - m * (m + 1) - extra) * y.eval_exact(q)
    return float(res)


def _assoc_norm_ip(l: int, k: int, m: int) -> float:
    """int P_l^m P_k^m over [-1, 1], normalised by the factorial norms."""
    val = quad(lambda x: assoc_legendre(l, m, x) * assoc_legendre(k, m, x), -1.0, 1.0)
    return val / SQRT(_assoc_norm(l, m) * _assoc_norm(k, m))


def _assoc_norm(l: int, m: int) -> float:
    return 2 * factorial(l + m) / ((2 * l + 1) * factorial(l - m))


def _assoc_norm_printed(l: int, m: int) -> float:
    return 2 * factorial(l + m) / ((2 * l + 1) * (l - m))


def _sq_int_exact(l: int, m: int) -> Fraction:
    """int (1-x^2)^m (D^m P_l)^2 over [-1, 1]."""
    y = legendre_coefficients(l).derivative(m)
    w = (ONE + X * X * (-1)) ** m
    return _int11(w * y * y)


def _by_parts_exact(l: int, m: int) -> Fraction:
    """-int D^{m-1} P_l d/dx[(1-x^2)^m D^m P_l] over [-1, 1]."""
    p = legendre_coefficients(l)
    w = (ONE + X * X * (-1)) ** m
    return -_int11(p.derivative(m - 1) * (w * p.derivative(m)).derivative())


def _ladder_poly_exact(l: int, m: int) -> ExactPoly:
    """-(l+m)(l-m+1) (1-x^2)^{m-1} D^{m-1} P_l."""
    p = legendre_coefficients(l)
    return (ONE + X * X * (-1)) ** (m - 1) * p.derivative(m - 1) * Fraction(-(l + m) * (l - m + 1))


def _assoc_cases():
    pts = [(l, m, x) for (l, m) in _LM for x in X_OPEN]
    pts_pos = [(l, m, x) for (l, m) in _LM if m >= 1 for x in X_OPEN]
    return [
        case(
            "ch5.eq17.assoc-ode",
            "(1-x^2) y'' - 2x y' + [l(l+1) - m^2/(1-x^2)] y = 0 for y = P_l^m, by finite differences",
            lambda l, m, x: (1 - x * x) * _assoc_fd(l, m, x, 2) - 2 * x * _assoc_fd(l, m, x),
            lambda l, m, x: (m * m / (1 - x * x) - l * (l + 1)) * assoc_legendre(l, m, x),
            pts,
            tol=1e-7,
            kind="finite-difference",
        ),
        case(
            "ch5.eq18.assoc-definition",
            "P_l^m = (1-x^2)^{m/2} d^{l+m}/dx^{l+m} (x^2-1)^l / (2^l l!)",
            lambda l, m, x: assoc_legendre(l, m, x),
            lambda l, m, x: _assoc_rodrigues(l, m, x),
            [(l, m, x) for l in (1, 3, 6, 12, 20, 25) for m in sorted({0, 1, l // 2, l}) for x in X_OPEN],
            tol=1e-11,
        ),
        case(
            "ch5.eq19.negative-order",
            "P_l^{-m} = (-1)^m (l-m)!/(l+m)! P_l^m matches the derivative formula extended to negative m",
            lambda l, m, x: assoc_legendre(l, -m, x),
            lambda l, m, x: _assoc_rodrigues(l, -m, x),
            [(l, m, x) for l in (1, 2, 4, 7) for m in range(1, l + 1) for x in X_OPEN],
            tol=1e-13,
        ),
        case(
            "ch5.assoc-table",
            "worked P_l^m table with the sign (-1)^m applied to the odd orders",
            lambda l, m, x: assoc_legendre(l, m, x),
            lambda l, m, x: (-1) ** m * _assoc_table_printed(l, m, x),
            [(l, m, x) for (l, m) in _ASSOC_TABLE for x in X_OPEN],
            tol=1e-13,
        ),
        case(
            "ch5.assoc-table.as-printed",
            "worked P_l^m table entries of odd order against the derivative definition",
            lambda l, m, x: assoc_legendre(l, m, x),
            lambda l, m, x: _assoc_table_printed(l, m, x),
            [(l, m, x) for (l, m) in _ASSOC_TABLE_ODD for x in (0.3, 0.75)],
            tol=1e-10,
            xfail=True,
            notes="the table carries a (-1)^m factor that the derivative definition lacks",
        ),
        case(
            "ch5.eq19a.derivative-ode",
            "(1-x^2) y'' - 2x(m+1) y' + [l(l+1) - m(m+1)] y = 0 for y = D^m P_l, exactly",
            lambda l, m, x: _dm_residual(l, m, x, 0),
            lambda l, m, x: 0.0,
            [(l, m, x) for l in range(0, 9) for m in range(0, l + 1) for x in X_UNIT],
            tol=1e-300,
            mode="abs",
        ),
        case(
            "ch5.eq19a.derivative-ode.as-printed",
            "the same equation with the printed coefficient l(l+1) - m(m+1) - 2m",
            lambda l, m, x: _dm_residual(l, m, x, 2 * m),
            lambda l, m, x: 0.0,
            [(l, m, x) for l in range(1, 6) for m in range(1, l + 1) for x in (0.3, 0.75)],
            tol=1e-10,
            mode="abs",
            xfail=True,
            notes="the -2m term does not belong in the coefficient",
        ),
        case(
            "ch5.eq19b.reduced-ode",
            "u = (1-x^2)^{-m/2} P_l^m satisfies (1-x^2) u'' - 2(m+1) x u' + [l(l+1) - m(m+1)] u = 0",
            lambda l, m, x: (1 - x * x) * _d(lambda s: (1 - s * s) ** (-m / 2) * assoc_legendre(l, m, s), x, 2)
            - 2 * (m + 1) * x * _d(lambda s: (1 - s * s) ** (-m / 2) * assoc_legendre(l, m, s), x),
            lambda l, m, x: (m * (m + 1) - l * (l + 1)) * (1 - x * x) ** (-m / 2) * assoc_legendre(l, m, x),
            pts,
            tol=1e-5,
            kind="finite-difference",
        ),
        case(
            "ch5.eq20.assoc-orthogonality",
            "int P_l^m P_k^m / sqrt(N_lm N_km) = delta_lk with N_lm = 2(l+m)!/((2l+1)(l-m)!)",
            _assoc_norm_ip,
            lambda l, k, m: float(l == k),
            [(l, k, m) for m in (0, 1, 2, 3, 5, -2) for l in range(abs(m), 9) for k in range(abs(m), 9)],
            tol=1e-11,
            kind="quadrature",
            mode="abs",
        ),
        case(
            "ch5.eq20.assoc-orthogonality.as-printed",
            "int (P_l^m)^2 against the printed norm 2(l+m)!/((2l+1)(l-m))",
            lambda l, m: quad(lambda x: assoc_legendre(l, m, x) ** 2, -1.0, 1.0),
            lambda l, m: _assoc_norm_printed(l, m),
            [(l, m) for l in range(3, 8) for m in range(0, l - 2)],
            tol=1e-9,
            kind="quadrature",
            mode="rel",
            xfail=True,
            notes="(l-m) in the norm should be (l-m)!",
        ),
        case(
            "ch5.eq20a.assoc-sturm-liouville",
            "d/dx[(1-x^2) dP_l^m/dx] + [l(l+1) - m^2/(1-x^2)] P_l^m = 0, nested finite differences",
            lambda l, m, x: _d(lambda s: (1 - s * s) * _assoc_fd(l, m, s), x),
            lambda l, m, x: (m * m / (1 - x * x) - l * (l + 1)) * assoc_legendre(l, m, x),
            [(l, m, x) for (l, m) in _LM if l <= 4 for x in X_OPEN],
            tol=1e-6,
            kind="finite-difference",
        ),
        case(
            "ch5.eq20c.integration-by-parts",
            "int (1-x^2)^m (D^m P_l)^2 = -int D^{m-1} P_l d/dx[(1-x^2)^m D^m P_l], exactly",
            lambda l, m: float(_sq_int_exact(l, m) - _by_parts_exact(l, m)),
            lambda l, m: 0.0,
            [(l, m) for l in range(1, 11) for m in range(1, l + 1)],
            tol=1e-300,
            mode="abs",
        ),
        case(
            "ch5.eq20c.lowering-derivative",
            "d/dx[(1-x^2)^m D^m P_l] = -(l+m)(l-m+1) (1-x^2)^{m-1} D^{m-1} P_l, exactly",
            lambda l, m: float(
                ((ONE + X * X * (-1)) ** m * legendre_coefficients(l).derivative(m)).derivative() != _ladder_poly_exact(l, m)
            ),
            lambda l, m: 0.0,
            [(l, m) for l in range(1, 11) for m in range(1, l + 1)],
            tol=1e-300,
            mode="abs",
        ),
        case(
            "ch5.eq20c.norm-ratio",
            "int (P_l^m)^2 = (l+m)(l-m+1) int (P_l^{m-1})^2, exactly",
            lambda l, m: float(_sq_int_exact(l, m)),
            lambda l, m: float((l + m) * (l - m + 1) * _sq_int_exact(l, m - 1)),
            [(l, m) for l in range(1, 11) for m in range(1, l + 1)],
            tol=1e-15,
            mode="rel",
        ),
    ] + _harmonic_cases()


def _y_table(l: int, m: int, theta: float, phi: float, *, printed: bool) -> complex:
    """Worked spherical-harmonic table; ``printed`` keeps the entries exactly as listed."""
    c, s = COS(theta), SIN(theta)
    e = cmath.exp(1j * m * phi)
    plus_sign = 1 if printed else -1  # m = +1 entries need a minus sign under the (-1)^m definition
    if (l, m) == (0, 0):
        return 1 / (2 * SQRT(pi))
    if (l, m) == (1, 0):
        return SQRT(3 / (4 * pi)) * c
    if (l, abs(m)) == (1, 1):
        return (plus_sign if m == 1 else 1) * SQRT(3 / (8 * pi)) * s * e
    if (l, m) == (2, 0):
        return SQRT((15 if printed else 5) / (16 * pi)) * (3 * c * c - 1)
    if (l, abs(m)) == (2, 1):
        return (plus_sign if m == 1 else 1) * SQRT(15 / (8 * pi)) * c * s * e
    if (l, abs(m)) == (2, 2):
        return SQRT(15 / (32 * pi)) * s * s * e
    raise KeyError((l, m))


def _y_re_im(l, m):
    def re(t, p):
        return complex(spherical_harmonic(l, m, t, p)).real

    def im(t, p):
        return complex(spherical_harmonic(l, m, t, p)).imag

    return re, im


def _angular_laplacian(l, m, theta, phi):
    out = []
    for f in _y_re_im(l, m):
        ft = lambda t: f(t, phi)  # noqa: E731
        fp = lambda p: f(theta, p)  # noqa: E731
        h = min(0.05, theta / 4, (pi - theta) / 4)
        lap = deriv(ft, theta, 2, h=h) + COS(theta) / SIN(theta) * deriv(ft, theta, 1, h=h)
        lap += deriv(fp, phi, 2, h=0.05) / SIN(theta) ** 2
        out.append(lap)
    return complex(out[0], out[1])


_HARM_STATES = [(l, m) for l in range(0, 5) for m in range(-l, l + 1)]


@lru_cache(maxsize=None)
def _sphere_grid():
    """Product rule on the sphere: composite Kronrod in theta, trapezoid in phi."""
    tn, tw = kronrod_rule(0.0, pi, 3)
    nphi = 18
    nodes, weights = [], []
    for t, w in zip(tn, tw):
        for j in range(nphi):
            nodes.append((t, 2 * pi * j / nphi))
            weights.append(w * SIN(t) * 2 * pi / nphi)
    return nodes, weights


@lru_cache(maxsize=None)
def _y_samples(l: int, m: int):
    nodes, _ = _sphere_grid()
    return tuple(complex(spherical_harmonic(l, m, t, p)) for t, p in nodes)


def _sphere_ip(l, m, k, n):
    _, w = _sphere_grid()
    a, b = _y_samples(l, m), _y_samples(k, n)
    return sum(wi * ai.conjugate() * bi for wi, ai, bi in zip(w, a, b))


def _harmonic_cases():
    pts = [(l, m, t, p) for l in range(0, 5) for m in range(-l, l + 1) for t, p in ANGLES]
    return [
        case(
            "ch5.eq21.angular-laplace",
            "angular Laplacian of Y_l^m equals -l(l+1) Y_l^m, by finite differences",
            _angular_laplacian,
            lambda l, m, t, p: -l * (l + 1) * complex(spherical_harmonic(l, m, t, p)),
            pts,
            tol=1e-6,
            kind="finite-difference",
        ),
        case(
            "ch5.eq22.polar-equation",
            "sin t d/dt(sin t dT/dt) + [l(l+1) sin^2 t - m^2] T = 0 for T = P_l^m(cos t)",
            lambda l, m, t: SIN(t) * deriv(lambda s: SIN(s) * deriv(lambda u: assoc_legendre(l, m, COS(u)), s, h=0.02), t, h=0.05),
            lambda l, m, t: (m * m - l * (l + 1) * SIN(t) ** 2) * assoc_legendre(l, m, COS(t)),
            [(l, m, t) for (l, m) in _LM if l <= 4 for t in (0.4, 1.1, 2.5)],
            tol=1e-6,
            kind="finite-difference",
        ),
        case(
            "ch5.eq23.azimuthal-equation",
            "d^2/dphi^2 Y_l^m = -m^2 Y_l^m, by finite differences",
            lambda l, m, t, p: complex(*(deriv(lambda q: f(t, q), p, 2, h=0.05) for f in _y_re_im(l, m))),
            lambda l, m, t, p: -m * m * complex(spherical_harmonic(l, m, t, p)),
            pts,
            tol=1e-8,
            kind="finite-difference",
        ),
        case(
            "ch5.eq23a.harmonic-definition",
            "Y_l^m = (-1)^m sqrt((2l+1)(l-m)!/(4 pi (l+m)!)) e^{i m phi} P_l^m(cos t), P from the derivative formula",
            lambda l, m, t, p: complex(spherical_harmonic(l, m, t, p)),
            lambda l, m, t, p: (-1) ** m
            * SQRT((2 * l + 1) * factorial(l - m) / (4 * pi * factorial(l + m)))
            * cmath.exp(1j * m * p)
            * _assoc_rodrigues(l, m, COS(t)),
            pts,
            tol=1e-13,
        ),
        case(
            "ch5.eq24.orthonormality",
            "surface integral of conj(Y_l^m) Y_k^n over the sphere is delta_lk delta_mn",
            _sphere_ip,
            lambda l, m, k, n: float(l == k and m == n),
            [s + u for s in _HARM_STATES for u in _HARM_STATES],
            tol=1e-12,
            kind="quadrature",
            mode="abs",
        ),
        case(
            "ch5.eq25.conjugation",
            "conj(Y_l^m) = (-1)^m Y_l^{-m}",
            lambda l, m, t, p: complex(spherical_harmonic(l, m, t, p)).conjugate(),
            lambda l, m, t, p: (-1) ** m * complex(spherical_harmonic(l, -m, t, p)),
            pts,
            tol=1e-14,
        ),
        case(
            "ch5.ylm.table",
            "worked table entries Y_0^0, Y_1^0, Y_1^-1, Y_2^-1 and Y_2^{+-2}",
            lambda l, m, t, p: complex(spherical_harmonic(l, m, t, p)),
            lambda l, m, t, p: _y_table(l, m, t, p, printed=True),
            [(l, m, t, p) for (l, m) in [(0, 0), (1, 0), (1, -1), (2, -1), (2, 2), (2, -2)] for t, p in ANGLES],
            tol=1e-14,
        ),
        case(
            "ch5.y20.table-entry",
            "printed Y_2^0 = sqrt(15/(16 pi)) (3 cos^2 t - 1) against the definition",
            lambda t, p: complex(spherical_harmonic(2, 0, t, p)),
            lambda t, p: _y_table(2, 0, t, p, printed=True),
            ANGLES,
            tol=1e-10,
            xfail=True,
            notes="the prefactor should be sqrt(5/(16 pi))",
        ),
        case(
            "ch5.y20.corrected",
            "Y_2^0 = sqrt(5/(16 pi)) (3 cos^2 t - 1)",
            lambda t, p: complex(spherical_harmonic(2, 0, t, p)),
            lambda t, p: _y_table(2, 0, t, p, printed=False),
            ANGLES,
            tol=1e-14,
        ),
        case(
            "ch5.y11.table-entry",
            "printed Y_1^1 = sqrt(3/(8 pi)) sin t e^{i phi} against the definition",
            lambda t, p: complex(spherical_harmonic(1, 1, t, p)),
            lambda t, p: _y_table(1, 1, t, p, printed=True),
            ANGLES,
            tol=1e-10,
            xfail=True,
            notes="the (-1)^m factor of the definition gives a minus sign",
        ),
        case(
            "ch5.y11.corrected",
            "Y_1^1 = -sqrt(3/(8 pi)) sin t e^{i phi}",
            lambda t, p: complex(spherical_harmonic(1, 1, t, p)),
            lambda t, p: _y_table(1, 1, t, p, printed=False),
            ANGLES,
            tol=1e-14,
        ),
        case(
            "ch5.y21.table-entry",
            "printed Y_2^1 = sqrt(15/(8 pi)) cos t sin t e^{i phi} against the definition",
            lambda t, p: complex(spherical_harmonic(2, 1, t, p)),
            lambda t, p: _y_table(2, 1, t, p, printed=True),
            ANGLES,
            tol=1e-10,
            xfail=True,
            notes="the (-1)^m factor of the definition gives a minus sign",
        ),
        case(
            "ch5.y21.corrected",
            "Y_2^1 = -sqrt(15/(8 pi)) cos t sin t e^{i phi}",
            lambda t, p: complex(spherical_harmonic(2, 1, t, p)),
            lambda t, p: _y_table(2, 1, t, p, printed=False),
            ANGLES,
            tol=1e-14,
        ),
    ]


# ---------------------------------------------------------------------------
# Hermite
# ---------------------------------------------------------------------------


def _psi(n: int, x: float) -> float:
    """Normalised Hermite function e^{-x^2/2} H_n / sqrt(2^n sqrt(pi) n!)."""
    if n < 0:
        return 0.0
    return EXP(-x * x / 2) * hermite_h(n, x) / SQRT(2.0**n * SQRT(pi) * factorial(n))


_HERMITE_HALF = 10.0


@lru_cache(maxsize=None)
def _hermite_ip(n: int, m: int) -> float:
    """int e^{-x^2} H_n H_m over the real line (cut at |x| = 10)."""
    return quad(lambda x: EXP(-x * x) * hermite_h(n, x) * hermite_h(m, x), -_HERMITE_HALF, _HERMITE_HALF)


def _hermite_double_sum(t: float, s: float, printed: bool) -> float:
    """sum_{n,m<=14} (t^n s^m or t^{n+m}) / (n! m!) int e^{-x^2} H_n H_m."""
    terms = []
    for n in range(15):
        for m in range(15):
            w = t ** (n + m) if printed else t**n * s**m
            terms.append(w / (factorial(n) * factorial(m)) * _hermite_ip(n, m))
    return math.fsum(terms)


@lru_cache(maxsize=None)
def _exp_hermite_fit():
    return tuple(hermite_series_fit(EXP, 20))


def _hermite_cases():
    pts = _grid(range(0, 11), X_LINE)
    pts1 = _grid(range(1, 11), X_LINE)
    ts = [(0.2, -0.15), (-0.3, 0.25), (0.25, 0.1)]
    return [
        case(
            "ch5.eq26.hermite-ode",
            "H_n'' - 2x H_n' = -2n H_n, by finite differences",
            lambda n, x: deriv(lambda s: hermite_h(n, s), x, 2, h=0.05) - 2 * x * deriv(lambda s: hermite_h(n, s), x, h=0.05),
            lambda n, x: -2 * n * hermite_h(n, x),
            pts,
            tol=1e-8,
            kind="finite-difference",
        ),
        case(
            "ch5.eq27.power-series",
            "H_n(x) = sum_r (-1)^r n!/(r!(n-2r)!) (2x)^{n-2r}, summed exactly",
            lambda n, x: hermite_h(n, x),
            lambda n, x: _hermite_sum(n, x),
            _grid([0, 1, 2, 5, 9, 14, 20, 24, 30], X_LINE),
            tol=1e-11,
            kind="series-truncation",
        ),
        case(
            "ch5.eq27.coefficient-table",
            "the library coefficient table equals the power series exactly",
            lambda n: float(any(hermite_coefficients(n).eval_exact(q) != _hermite_exact_at(n, q) for q in (Fraction(1, 3), Fraction(-7, 5), 2))),
            lambda n: 0.0,
            range(0, 21),
            tol=1e-300,
            mode="abs",
        ),
        case(
            "ch5.eq28.generating-function",
            "sum_{n<=30} H_n(x) t^n / n! = exp(2tx - t^2)",
            lambda t, x: math.fsum(hermite_h(n, x) * t**n / factorial(n) for n in range(31)),
            lambda t, x: EXP(2 * t * x - t * t),
            _grid(GEN_T, [-1.5, 0.1, 2.0]),
            tol=1e-13,
            kind="series-truncation",
        ),
        case(
            "ch5.eq29.orthogonality",
            "int e^{-x^2} H_n H_m / sqrt(N_n N_m) = delta_nm with N_n = 2^n n! sqrt(pi)",
            lambda n, m: _hermite_ip(n, m) / SQRT(2.0**n * factorial(n) * 2.0**m * factorial(m) * pi),
            lambda n, m: float(n == m),
            _grid(range(0, 9), range(0, 9)),
            tol=1e-12,
            kind="quadrature",
            mode="abs",
        ),
        case(
            "ch5.eq30.generating-integral",
            "int e^{-x^2} e^{2tx - t^2} e^{2sx - s^2} dx = sqrt(pi) e^{2ts}",
            lambda t, s: quad(lambda x: EXP(-x * x + 2 * t * x - t * t + 2 * s * x - s * s), -_HERMITE_HALF, _HERMITE_HALF),
            lambda t, s: SQRT(pi) * EXP(2 * t * s),
            ts,
            tol=1e-13,
            kind="quadrature",
        ),
        case(
            "ch5.eq30.double-series",
            "sum t^n s^m / (n! m!) int e^{-x^2} H_n H_m = sqrt(pi) e^{2ts}",
            lambda t, s: _hermite_double_sum(t, s, printed=False),
            lambda t, s: SQRT(pi) * EXP(2 * t * s),
            ts,
            tol=1e-12,
            kind="quadrature",
        ),
        case(
            "ch5.eq30.double-series.as-printed",
            "the double series with the printed weight t^{n+m} against sqrt(pi) e^{2ts}",
            lambda t, s: _hermite_double_sum(t, s, printed=True),
            lambda t, s: SQRT(pi) * EXP(2 * t * s),
            ts,
            tol=1e-10,
            kind="quadrature",
            xfail=True,
            notes="the weight should be t^n s^m",
        ),
        case(
            "ch5.eq31a.derivative",
            "H_n' = 2n H_{n-1}",
            lambda n, x: deriv(lambda s: hermite_h(n, s), x, h=0.05),
            lambda n, x: 2 * n * hermite_h(n - 1, x),
            pts1,
            tol=1e-9,
            kind="finite-difference",
        ),
        case(
            "ch5.eq31b.three-term",
            "H_{n+1} = 2x H_n - 2n H_{n-1}",
            lambda n, x: hermite_h(n + 1, x),
            lambda n, x: 2 * x * hermite_h(n, x) - 2 * n * hermite_h(n - 1, x),
            _grid(range(1, 30), X_LINE),
            tol=1e-12,
        ),
        case(
            "ch5.ex3a.exp-coefficients",
            "Hermite coefficients of e^x are e^{1/4} / (2^n n!)",
            lambda n: _exp_hermite_fit()[n],
            lambda n: EXP(0.25) / (2.0**n * factorial(n)),
            range(0, 12),
            tol=1e-12,
            kind="quadrature",
        ),
        case(
            "ch5.ex3b.exp-expansion",
            "e^x = sum_{n<=20} c_n H_n(x) with projected coefficients",
            lambda x: math.fsum(c * hermite_h(n, x) for n, c in enumerate(_exp_hermite_fit())),
            lambda x: EXP(x),
            [-1.0, -0.3, 0.0, 0.6, 1.0],
            tol=1e-11,
            kind="quadrature",
        ),
        case(
            "ch5.ex4a.lowering",
            "(x + d/dx) psi_n / sqrt 2 = sqrt(n) psi_{n-1}",
            lambda n, x: (x * _psi(n, x) + deriv(lambda s: _psi(n, s), x, h=0.05)) / SQRT(2),
            lambda n, x: SQRT(n) * _psi(n - 1, x),
            _grid(range(0, 7), [-3.0, -1.7, -0.4, 0.0, 0.9, 2.2, 3.0]),
            tol=1e-6,
            kind="finite-difference",
        ),
        case(
            "ch5.ex4b.raising",
            "(x - d/dx) psi_n / sqrt 2 = sqrt(n+1) psi_{n+1}",
            lambda n, x: (x * _psi(n, x) - deriv(lambda s: _psi(n, s), x, h=0.05)) / SQRT(2),
            lambda n, x: SQRT(n + 1) * _psi(n + 1, x),
            _grid(range(0, 7), [-3.0, -1.7, -0.4, 0.0, 0.9, 2.2, 3.0]),
            tol=1e-6,
            kind="finite-difference",
        ),
    ]


def _hermite_exact_at(n: int, q: Fraction) -> Fraction:
    return sum((Fraction((-1) ** r * factorial(n), factorial(r) * factorial(n - 2 * r)) * (2 * q) ** (n - 2 * r) for r in range(n // 2 + 1)), Fraction(0))


# ---------------------------------------------------------------------------
# Laguerre and associated Laguerre
# ---------------------------------------------------------------------------


def _hx(x: float) -> float:
    return min(0.1, x / 8)


def _lag_d(n, k, x, order=1):
    return deriv(lambda s: assoc_laguerre(n, k, s), x, order, h=_hx(x))


@lru_cache(maxsize=None)
def _laguerre_ip(n: int, m: int, k: int) -> float:
    return quad_inf(lambda x: EXP(-x) * x**k * assoc_laguerre(n, k, x) * assoc_laguerre(m, k, x))


def _laguerre_double_sum(k: int, t: float, s: float, printed: bool) -> float:
    """sum_{n,m<=40} (t^n s^m or t^{n+m}) int e^{-x} x^k L_n^k L_m^k, using the diagonal norms."""
    terms = []
    for n in range(41):
        w = t ** (2 * n) if printed else (t * s) ** n
        terms.append(w * _laguerre_ip(n, n, k) if n <= 8 else w * factorial(n + k) / factorial(n))
    return math.fsum(terms)


def _laguerre_cases():
    pts = _grid(range(0, 11), X_POS)
    pts1 = _grid(range(1, 11), X_POS)
    kpts = [(n, k, x) for n in range(0, 8) for k in range(0, 4) for x in X_POS]
    kpts1 = [(n, k, x) for n in range(1, 8) for k in range(1, 4) for x in X_POS]
    ts = [(0.2, -0.15), (-0.3, 0.25), (0.25, 0.1)]
    return [
        case(
            "ch5.eq33.laguerre-ode",
            "x L_n'' + (1-x) L_n' = -n L_n, by finite differences",
            lambda n, x: x * _lag_d(n, 0, x, 2) + (1 - x) * _lag_d(n, 0, x),
            lambda n, x: -n * laguerre_l(n, x),
            pts,
            tol=1e-8,
            kind="finite-difference",
        ),
        case(
            "ch5.eq34.power-series",
            "L_n(x) = sum_r (-1)^r n!/((r!)^2 (n-r)!) x^r, summed exactly",
            lambda n, x: laguerre_l(n, x),
            lambda n, x: _laguerre_sum(n, x),
            _grid([0, 1, 2, 5, 9, 14, 20, 24, 30], [0.4, 1.7, 4.5]),
            tol=1e-11,
            kind="series-truncation",
        ),
        case(
            "ch5.eq35.generating-function",
            "sum_{n<=40} L_n(x) t^n = exp(-xt/(1-t)) / (1-t)",
            lambda t, x: math.fsum(laguerre_l(n, x) * t**n for n in range(41)),
            lambda t, x: EXP(-x * t / (1 - t)) / (1 - t),
            _grid(GEN_T, [0.5, 2.0, 5.0]),
            tol=1e-13,
            kind="series-truncation",
        ),
        case(
            "ch5.eq36.orthogonality",
            "int_0^inf e^{-x} L_n L_m = delta_nm",
            lambda n, m: _laguerre_ip(n, m, 0),
            lambda n, m: float(n == m),
            _grid(range(0, 9), range(0, 9)),
            tol=1e-11,
            kind="quadrature",
            mode="abs",
        ),
        case(
            "ch5.eq37a.three-term",
            "(n+1) L_{n+1} = (2n+1-x) L_n - n L_{n-1}",
            lambda n, x: (n + 1) * laguerre_l(n + 1, x),
            lambda n, x: (2 * n + 1 - x) * laguerre_l(n, x) - n * laguerre_l(n - 1, x),
            _grid(range(1, 30), X_POS),
            tol=1e-11,
        ),
        case(
            "ch5.eq37b.derivative",
            "x L_n' = n L_n - n L_{n-1}",
            lambda n, x: x * _lag_d(n, 0, x),
            lambda n, x: n * laguerre_l(n, x) - n * laguerre_l(n - 1, x),
            pts1,
            tol=1e-9,
            kind="finite-difference",
        ),
        case(
            "ch5.eq37c.derivative-sum",
            "L_n' = -sum_{r<n} L_r",
            lambda n, x: _lag_d(n, 0, x),
            lambda n, x: -math.fsum(laguerre_l(r, x) for r in range(n)),
            pts1,
            tol=1e-9,
            kind="finite-difference",
        ),
        case(
            "ch5.eq38.generating-derivative",
            "sum_{n<=40} t^n L_n' = -(t/(1-t)) sum_{n<=40} t^n L_n, derivatives exact",
            lambda t, x: math.fsum(t**n * laguerre_coefficients(n).derivative()(x) for n in range(41)),
            lambda t, x: -t / (1 - t) * math.fsum(t**n * laguerre_l(n, x) for n in range(41)),
            _grid(GEN_T, [0.5, 2.0, 5.0]),
            tol=1e-12,
            kind="series-truncation",
        ),
        case(
            "ch5.eq39.assoc-laguerre-ode",
            "x y'' + (k+1-x) y' = -n y for y = L_n^k, by finite differences",
            lambda n, k, x: x * _lag_d(n, k, x, 2) + (k + 1 - x) * _lag_d(n, k, x),
            lambda n, k, x: -n * assoc_laguerre(n, k, x),
            kpts,
            tol=1e-8,
            kind="finite-difference",
        ),
        case(
            "ch5.eq40.derivative-definition",
            "L_n^k = (-1)^k d^k/dx^k L_{n+k}, derivative exact",
            lambda n, k, x: assoc_laguerre(n, k, x),
            lambda n, k, x: (-1) ** k * laguerre_coefficients(n + k).derivative(k)(x),
            kpts,
            tol=1e-13,
        ),
        case(
            "ch5.eq41.assoc-series",
            "L_n^k = sum_r (-1)^r (n+k)!/((n-r)!(k+r)! r!) x^r, summed exactly",
            lambda n, k, x: assoc_laguerre(n, k, x),
            lambda n, k, x: _assoc_laguerre_sum(n, k, x),
            [(n, k, x) for n in (0, 1, 3, 7, 12, 20, 26) for k in (0, 1, 2, 5) for x in X_POS],
            tol=1e-11,
            kind="series-truncation",
        ),
        case(
            "ch5.eq41.assoc-series.as-printed",
            "L_n^k against the printed sum_r (-1)^k (n+k)!/((n-r)!(k+r)!) x^r",
            lambda n, k, x: assoc_laguerre(n, k, x),
            lambda n, k, x: _assoc_laguerre_sum_printed(n, k, x),
            [(n, k, x) for n in (1, 3, 5) for k in (1, 2) for x in (0.4, 1.7)],
            tol=1e-10,
            xfail=True,
            notes="the sign should be (-1)^r and r! belongs in the denominator",
        ),
        case(
            "ch5.eq42.generating-function",
            "sum_{n<=40} L_n^k(x) t^n = exp(-xt/(1-t)) / (1-t)^{k+1}",
            lambda k, t, x: math.fsum(assoc_laguerre(n, k, x) * t**n for n in range(41)),
            lambda k, t, x: EXP(-x * t / (1 - t)) / (1 - t) ** (k + 1),
            [(k, t, x) for k in (1, 2, 3) for t in GEN_T for x in (0.5, 2.0, 5.0)],
            tol=1e-12,
            kind="series-truncation",
        ),
        case(
            "ch5.eq43.assoc-orthogonality",
            "int_0^inf e^{-x} x^k L_n^k L_m^k / sqrt(N_n N_m) = delta_nm with N_n = (n+k)!/n!",
            lambda n, m, k: _laguerre_ip(n, m, k) / SQRT(factorial(n + k) / factorial(n) * factorial(m + k) / factorial(m)),
            lambda n, m, k: float(n == m),
            [(n, m, k) for k in (1, 2, 3) for n in range(0, 9) for m in range(0, 9)],
            tol=1e-11,
            kind="quadrature",
            mode="abs",
        ),
        case(
            "ch5.eq44.generating-integral",
            "(1-t)^{-k-1} (1-s)^{-k-1} int_0^inf e^{-x} x^k e^{-xt/(1-t)} e^{-xs/(1-s)} = k!/(1-ts)^{k+1}",
            lambda k, t, s: quad_inf(lambda x: EXP(-x * (1 + t / (1 - t) + s / (1 - s))) * x**k) / ((1 - t) * (1 - s)) ** (k + 1),
            lambda k, t, s: factorial(k) / (1 - t * s) ** (k + 1),
            [(k,) + u for k in (1, 2) for u in ts],
            tol=1e-12,
            kind="quadrature",
        ),
        case(
            "ch5.eq44.double-series",
            "sum t^n s^m int e^{-x} x^k L_n^k L_m^k = k!/(1-ts)^{k+1}",
            lambda k, t, s: _laguerre_double_sum(k, t, s, printed=False),
            lambda k, t, s: factorial(k) / (1 - t * s) ** (k + 1),
            [(k,) + u for k in (1, 2) for u in ts],
            tol=1e-11,
            kind="quadrature",
        ),
        case(
            "ch5.eq44.double-series.as-printed",
            "the double series with the printed weight t^{n+m} against k!/(1-ts)^{k+1}",
            lambda k, t, s: _laguerre_double_sum(k, t, s, printed=True),
            lambda k, t, s: factorial(k) / (1 - t * s) ** (k + 1),
            [(k,) + u for k in (1, 2) for u in ts],
            tol=1e-10,
            kind="quadrature",
            xfail=True,
            notes="the weight should be t^n s^m",
        ),
        case(
            "ch5.eq45a.order-step",
            "L_{n-1}^k + L_n^{k-1} = L_n^k",
            lambda n, k, x: assoc_laguerre(n - 1, k, x) + assoc_laguerre(n, k - 1, x),
            lambda n, k, x: assoc_laguerre(n, k, x),
            kpts1,
            tol=1e-13,
        ),
        case(
            "ch5.eq45b.three-term",
            "(n+1) L_{n+1}^k = (2n+k+1-x) L_n^k - (n+k) L_{n-1}^k",
            lambda n, k, x: (n + 1) * assoc_laguerre(n + 1, k, x),
            lambda n, k, x: (2 * n + k + 1 - x) * assoc_laguerre(n, k, x) - (n + k) * assoc_laguerre(n - 1, k, x),
            kpts1,
            tol=1e-12,
        ),
        case(
            "ch5.eq45c.derivative",
            "x (L_n^k)' = n L_n^k - (n+k) L_{n-1}^k",
            lambda n, k, x: x * _lag_d(n, k, x),
            lambda n, k, x: n * assoc_laguerre(n, k, x) - (n + k) * assoc_laguerre(n - 1, k, x),
            kpts1,
            tol=1e-9,
            kind="finite-difference",
        ),
        case(
            "ch5.eq45d.derivative-sum",
            "(L_n^k)' = -sum_{r<n} L_r^k",
            lambda n, k, x: _lag_d(n, k, x),
            lambda n, k, x: -math.fsum(assoc_laguerre(r, k, x) for r in range(n)),
            kpts1,
            tol=1e-9,
            kind="finite-difference",
        ),
        case(
            "ch5.eq45e.derivative-raise",
            "(L_n^k)' = -L_{n-1}^{k+1}",
            lambda n, k, x: _lag_d(n, k, x),
            lambda n, k, x: -assoc_laguerre(n - 1, k + 1, x),
            kpts1,
            tol=1e-9,
            kind="finite-difference",
        ),
        case(
            "ch5.eq45f.partial-sum",
            "L_n^{k+1} = sum_{r<=n} L_r^k",
            lambda n, k, x: assoc_laguerre(n, k + 1, x),
            lambda n, k, x: math.fsum(assoc_laguerre(r, k, x) for r in range(n + 1)),
            kpts,
            tol=1e-12,
        ),
        case(
            "ch5.eq46.leibniz",
            "(fg)^{(k)} = sum_n C(k,n) f^{(n)} g^{(k-n)} for polynomials f = P_6, g = L_5, exactly",
            lambda k, x: float((_LEIB_F * _LEIB_G).derivative(k).eval_exact(Fraction(x))),
            lambda k, x: float(sum(comb(k, n) * _LEIB_F.derivative(n).eval_exact(Fraction(x)) * _LEIB_G.derivative(k - n).eval_exact(Fraction(x)) for n in range(k + 1))),
            _grid(range(0, 8), [-0.7, 0.3, 2.5]),
            tol=1e-300,
            mode="abs",
        ),
        case(
            "ch5.eq46.leibniz.as-printed",
            "(fg)^{(k)} against the printed weights k!/(n!(n-k)!) and orders g^{(n-k)}; only n = k survives",
            lambda k, x: float((_LEIB_F * _LEIB_G).derivative(k).eval_exact(Fraction(x))),
            lambda k, x: float(_LEIB_F.derivative(k).eval_exact(Fraction(x)) * _LEIB_G.eval_exact(Fraction(x))),
            _grid(range(1, 5), [-0.7, 0.3]),
            tol=1e-10,
            xfail=True,
            notes="the weight is C(k,n) = k!/(n!(k-n)!) and g carries order k-n",
        ),
        case(
            "ch5.ex5.laguerre-rodrigues",
            "L_n^k = x^{-k} e^x d^n/dx^n (e^{-x} x^{n+k}) / n!, exactly",
            lambda n, k: float(_laguerre_rodrigues(n, k) != _assoc_laguerre_exact(n, k)),
            lambda n, k: 0.0,
            [(n, k) for n in range(0, 11) for k in range(0, 5)],
            tol=1e-300,
            mode="abs",
        ),
    ]


_LEIB_F = legendre_coefficients(6)
_LEIB_G = laguerre_coefficients(5)


def _assoc_laguerre_exact(n: int, k: int) -> ExactPoly:
    return ExactPoly([Fraction((-1) ** r * factorial(n + k), factorial(n - r) * factorial(k + r) * factorial(r)) for r in range(n + 1)])


# ---------------------------------------------------------------------------
# Chebyshev
# ---------------------------------------------------------------------------


def _t_listed(n, x):
    return [1.0, x, 2 * x * x - 1, 4 * x**3 - 3 * x, 8 * x**4 - 8 * x * x + 1, 16 * x**5 - 20 * x**3 + 5 * x][n]


def _u_listed(n, x):
    s = SQRT(1 - x * x)
    return [0.0, s, s * 2 * x, s * (4 * x * x - 1), s * (8 * x**3 - 4 * x), s * (16 * x**4 - 12 * x * x + 1)][n]


def _cheb_ip(kind, n, m):
    f = chebyshev_t if kind == "t" else chebyshev_u
    return quad(lambda th: f(n, COS(th)) * f(m, COS(th)), 0.0, pi)


def _cheb_norm(kind, n, m):
    if n != m:
        return 0.0
    if kind == "t":
        return pi if n == 0 else pi / 2
    return 0.0 if n == 0 else pi / 2


def _cheb_gen_u(t, x, printed):
    num = SQRT(1 - t * t) if printed else SQRT(1 - x * x)
    return num / (1 - 2 * t * x + t * t)


def _chebyshev_cases():
    pts = _grid(range(0, 11), X_UNIT)
    pts1 = _grid(range(1, 11), X_OPEN)
    small = [(n, m) for n in range(0, 9) for m in range(0, 9)]
    return [
        case(
            "ch5.eq47.chebyshev-ode",
            "(1-x^2) y'' - x y' = -n^2 y for y = T_n and y = U_n (packed as real and imaginary parts)",
            lambda n, x: complex(
                (1 - x * x) * _d(lambda s: chebyshev_t(n, s), x, 2) - x * _d(lambda s: chebyshev_t(n, s), x),
                (1 - x * x) * _d(lambda s: chebyshev_u(n, s), x, 2) - x * _d(lambda s: chebyshev_u(n, s), x),
            ),
            lambda n, x: -n * n * complex(chebyshev_t(n, x), chebyshev_u(n, x)),
            _grid(range(0, 11), X_OPEN),
            tol=1e-7,
            kind="finite-difference",
        ),
        case(
            "ch5.eq48.listed-t",
            "T_n = cos(n arccos x) matches the listed T_0 .. T_5",
            lambda n, x: chebyshev_t(n, x),
            _t_listed,
            _grid(range(0, 6), X_UNIT),
            tol=1e-14,
        ),
        case(
            "ch5.eq49.listed-u",
            "U_n = sin(n arccos x) matches the listed U_0 .. U_5",
            lambda n, x: chebyshev_u(n, x),
            _u_listed,
            _grid(range(0, 6), X_UNIT),
            tol=1e-14,
        ),
        case(
            "ch5.eq50.complex-form-t",
            "T_n = ((x + i sqrt(1-x^2))^n + (x - i sqrt(1-x^2))^n) / 2",
            lambda n, x: chebyshev_t(n, x),
            lambda n, x: (((x + 1j * SQRT(1 - x * x)) ** n + (x - 1j * SQRT(1 - x * x)) ** n) / 2),
            pts,
            tol=1e-13,
        ),
        case(
            "ch5.eq51.complex-form-u",
            "U_n = -(i/2) ((x + i sqrt(1-x^2))^n - (x - i sqrt(1-x^2))^n)",
            lambda n, x: chebyshev_u(n, x),
            lambda n, x: -0.5j * ((x + 1j * SQRT(1 - x * x)) ** n - (x - 1j * SQRT(1 - x * x)) ** n),
            pts,
            tol=1e-13,
        ),
        case(
            "ch5.eq52.series-t",
            "T_n = sum_r (-1)^r n!/((2r)!(n-2r)!) (1-x^2)^r x^{n-2r}",
            lambda n, x: chebyshev_t(n, x),
            lambda n, x: chebyshev_t_series(n, x),
            _grid([0, 1, 2, 5, 9, 15, 22, 30], X_UNIT),
            tol=1e-13,
            kind="series-truncation",
        ),
        case(
            "ch5.eq53.series-u",
            "U_n = sum_r (-1)^r n!/((2r+1)!(n-2r-1)!) (1-x^2)^{r+1/2} x^{n-2r-1}",
            lambda n, x: chebyshev_u(n, x),
            lambda n, x: chebyshev_u_series(n, x),
            _grid([0, 1, 2, 5, 9, 15, 22, 30], X_UNIT),
            tol=1e-13,
            kind="series-truncation",
        ),
        case(
            "ch5.eq54.generating-t",
            "T_0 + 2 sum_{1<=n<=30} t^n T_n = (1-t^2)/(1-2tx+t^2)",
            lambda t, x: chebyshev_t(0, x) + 2 * math.fsum(t**n * chebyshev_t(n, x) for n in range(1, 31)),
            lambda t, x: (1 - t * t) / (1 - 2 * t * x + t * t),
            _grid(GEN_T, [-0.6, 0.1, 0.8]),
            tol=1e-13,
            kind="series-truncation",
        ),
        case(
            "ch5.eq55.generating-u",
            "sum_{n<=30} t^n U_{n+1} = sqrt(1-x^2)/(1-2tx+t^2)",
            lambda t, x: math.fsum(t**n * chebyshev_u(n + 1, x) for n in range(31)),
            lambda t, x: _cheb_gen_u(t, x, printed=False),
            _grid(GEN_T, [-0.6, 0.1, 0.8]),
            tol=1e-13,
            kind="series-truncation",
        ),
        case(
            "ch5.eq55.generating-u.as-printed",
            "sum t^n U_{n+1} against the printed sqrt(1-t^2)/(1-2tx+t^2)",
            lambda t, x: math.fsum(t**n * chebyshev_u(n + 1, x) for n in range(31)),
            lambda t, x: _cheb_gen_u(t, x, printed=True),
            _grid(GEN_T, [-0.6, 0.1, 0.8]),
            tol=1e-10,
            kind="series-truncation",
            xfail=True,
            notes="the numerator should be sqrt(1-x^2)",
        ),
        case(
            "ch5.eq56.orthogonality-t",
            "int T_n T_m / sqrt(1-x^2) = int_0^pi T_n(cos t) T_m(cos t) dt is pi, pi/2 or 0",
            lambda n, m: _cheb_ip("t", n, m),
            lambda n, m: _cheb_norm("t", n, m),
            small,
            tol=1e-12,
            kind="quadrature",
            mode="abs",
        ),
        case(
            "ch5.eq57.orthogonality-u",
            "int U_n U_m / sqrt(1-x^2) is pi/2 for n = m > 0 and 0 otherwise",
            lambda n, m: _cheb_ip("u", n, m),
            lambda n, m: _cheb_norm("u", n, m),
            small,
            tol=1e-12,
            kind="quadrature",
            mode="abs",
        ),
        case(
            "ch5.eq58a.three-term-t",
            "T_{n+1} - 2x T_n + T_{n-1} = 0",
            lambda n, x: chebyshev_t(n + 1, x) + chebyshev_t(n - 1, x),
            lambda n, x: 2 * x * chebyshev_t(n, x),
            _grid(range(1, 30), X_UNIT),
            tol=1e-13,
        ),
        case(
            "ch5.eq58b.derivative-t",
            "(1-x^2) T_n' = -n x T_n + n T_{n-1}",
            lambda n, x: (1 - x * x) * _d(lambda s: chebyshev_t(n, s), x),
            lambda n, x: -n * x * chebyshev_t(n, x) + n * chebyshev_t(n - 1, x),
            pts1,
            tol=1e-8,
            kind="finite-difference",
        ),
        case(
            "ch5.eq58c.three-term-u",
            "U_{n+1} - 2x U_n + U_{n-1} = 0",
            lambda n, x: chebyshev_u(n + 1, x) + chebyshev_u(n - 1, x),
            lambda n, x: 2 * x * chebyshev_u(n, x),
            _grid(range(1, 30), X_UNIT),
            tol=1e-13,
        ),
        case(
            "ch5.eq58d.derivative-u",
            "(1-x^2) U_n' = -n x U_n + n U_{n-1}",
            lambda n, x: (1 - x * x) * _d(lambda s: chebyshev_u(n, s), x),
            lambda n, x: -n * x * chebyshev_u(n, x) + n * chebyshev_u(n - 1, x),
            pts1,
            tol=1e-8,
            kind="finite-difference",
        ),
        case(
            "ch5.ex2a.t-from-u",
            "sqrt(1-x^2) T_n = U_{n+1} - x U_n",
            lambda n, x: SQRT(1 - x * x) * chebyshev_t(n, x),
            lambda n, x: chebyshev_u(n + 1, x) - x * chebyshev_u(n, x),
            _grid(range(0, 9), X_UNIT + [-1.0, 1.0]),
            tol=1e-12,
            mode="abs",
        ),
        case(
            "ch5.ex2b.product",
            "T_{n+m} + T_{n-m} = 2 T_n T_m for n >= m",
            lambda n, m, x: chebyshev_t(n + m, x) + chebyshev_t(n - m, x),
            lambda n, m, x: 2 * chebyshev_t(n, x) * chebyshev_t(m, x),
            [(n, m, x) for n in range(0, 9) for m in range(0, n + 1) for x in X_UNIT + [-1.0, 1.0]],
            tol=1e-12,
            mode="abs",
        ),
    ]


def cases():
    return _legendre_cases() + _assoc_cases() + _hermite_cases() + _laguerre_cases() + _chebyshev_cases()
