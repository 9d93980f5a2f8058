"""Bessel, modified Bessel, Hankel and spherical Bessel functions.

Ordinary functions J and Y come from the power series (summed in extended
precision once cancellation would cost digits) and, for large arguments,
from the Hankel asymptotic expansion. Integer-order Y and K are limits in
the order, obtained by Richardson extrapolation.
"""

from __future__ import annotations

import cmath
import math
from decimal import Decimal, localcontext

from .errors import DomainError, NonConvergence, PoleError
from .gamma import gamma, gamma_sign, lgamma
from .numkernel import (
    FN_TOL,
    QUAD_TOL,
    ComplexValue,
    EvalResult,
    ToleranceSpec,
    cospi,
    integrate_semi_infinite,
    richardson_limit,
    sinpi,
    sum_ratio_series,
)

__all__ = [
    "bessel_j",
    "bessel_y",
    "bessel_i",
    "bessel_k",
    "hankel1",
    "hankel2",
    "spherical_j",
    "spherical_y",
    "spherical_h1",
    "spherical_h2",
    "bessel_j_complex",
    "is_integer_order",
    "ASYMPTOTIC_SWITCH",
]

# J and Y switch to the Hankel expansion beyond this argument (and x > 2 nu^2)
ASYMPTOTIC_SWITCH = 40.0
# below this argument K uses the I-difference formula, above it an integral
_K_SERIES_MAX = 2.0
# orders this close to an integer count as integers
_INT_FLAG = 1e-9
_RICHARDSON_STEPS = (0.02, 0.01, 0.005)


def is_integer_order(nu: float) -> bool:
    """True when ``nu`` is within 1e-9 of an integer."""
    return abs(nu - round(nu)) < _INT_FLAG


def _prefactor(nu: float, x: float) -> float:
    """(x/2)^nu / Gamma(nu + 1)."""
    if abs(nu) < 160.0:
        return (0.5 * x) ** nu / gamma(nu + 1.0)
    return gamma_sign(nu + 1.0) * math.exp(nu * math.log(0.5 * x) - lgamma(nu + 1.0))


def _use_asymptotic(nu: float, x: float) -> bool:
    return x > ASYMPTOTIC_SWITCH and x > 2.0 * nu * nu


# ---------------------------------------------------------------------------
# series
# ---------------------------------------------------------------------------


def _power_series(nu: float, x: float, sign: int) -> float:
    """sum sign^r (x/2)^{2r+nu} / (r! Gamma(nu + r + 1)).

    sign = -1 gives J, sign = +1 gives I. Alternating sums with large
    terms are accumulated in decimal arithmetic with enough guard digits.
    """
    t0 = _prefactor(nu, x)
    if t0 == 0.0:
        return 0.0
    q = 0.25 * x * x
    if sign > 0 or x <= 5.0:
        s = sum_ratio_series(1.0, lambda r: sign * q / ((r + 1) * (nu + r + 1)), FN_TOL.replace(max_terms=5000))
        return t0 * s.value
    with localcontext() as ctx:
        # the largest term is about e^x, so keep 0.45 x extra decimal digits
        ctx.prec = 30 + int(0.45 * x)
        qd = Decimal(x) * Decimal(x) / 4
        nud = Decimal(nu)
        term = Decimal(1)
        total = Decimal(1)
        eps = Decimal(10) ** -(22)
        r = 0
        while True:
            term = -term * qd / ((r + 1) * (nud + r + 1))
            total += term
            r += 1
            if r > q and abs(term) < eps * abs(total):
                break
            if r > 20000:
                raise NonConvergence("Bessel series did not converge", EvalResult(float(total), r, False, float(abs(term))))
        return t0 * float(total)


def bessel_j_complex(nu: float, z: complex) -> complex:
    """J_nu at a complex argument by the power series.

    Intended for cross-checks and figure grids at moderate |z|.

    Parameters
    ----------
    nu : float
        Order; integer orders may be negative.
    z : complex
        Argument, |z| up to about 20.

    Returns
    -------
    complex
    """
    z = complex(z)
    if is_integer_order(nu):
        n = int(round(nu))
        if n < 0:
            return (-1) ** n * bessel_j_complex(-n, z)
        nu = float(n)
    if z == 0:
        return 1.0 if nu == 0 else 0.0
    t0 = cmath.exp(nu * cmath.log(0.5 * z)) / gamma(nu + 1.0)
    q = 0.25 * z * z
    s = sum_ratio_series(1.0 + 0j, lambda r: -q / ((r + 1) * (nu + r + 1)), FN_TOL.replace(max_terms=5000))
    return t0 * s.value


# ---------------------------------------------------------------------------
# Hankel asymptotic expansion
# ---------------------------------------------------------------------------


def _hankel_pq(nu: float, x: float) -> tuple[float, float]:
    """Asymptotic series P and Q, stopped at the smallest term."""
    mu = 4.0 * nu * nu
    p = 1.0
    q = 0.0
    term = 1.0
    last = math.inf
    for k in range(1, 200):
        term *= (mu - (2 * k - 1) ** 2) / (k * 8.0 * x)
        a = abs(term)
        if a == 0.0:
            break
        if a > last:
            break
        # P collects even k with sign (-1)^{k/2}, Q odd k with (-1)^{(k-1)/2}
        if k % 2 == 0:
            p += term if k % 4 == 0 else -term
        else:
            q += term if k % 4 == 1 else -term
        last = a
        if a < 1e-17:
            break
    return p, q


def _hankel_jy(nu: float, x: float) -> tuple[float, float]:
    p, q = _hankel_pq(nu, x)
    # chi = x - (nu/2 + 1/4) pi, expanded so the phase shift is exact
    c0 = cospi(0.5 * nu + 0.25)
    s0 = sinpi(0.5 * nu + 0.25)
    cx, sx = math.cos(x), math.sin(x)
    cchi = cx * c0 + sx * s0
    schi = sx * c0 - cx * s0
    amp = math.sqrt(2.0 / (math.pi * x))
    return amp * (p * cchi - q * schi), amp * (p * schi + q * cchi)


# ---------------------------------------------------------------------------
# J and Y
# ---------------------------------------------------------------------------


def bessel_j(nu: float, x: float, tol: ToleranceSpec | None = None) -> float:
    """Bessel function of the first kind J_nu(x).

    Parameters
    ----------
    nu : float
        Order. Integer orders may be negative; J_{-n} = (-1)^n J_n.
    x : float
        Argument, x >= 0.
    tol : ToleranceSpec, optional
        Accepted for a uniform signature; the series run to rounding level.

    Returns
    -------
    float

    Raises
    ------
    DomainError
        For x < 0, or at x = 0 with a negative non-integer order.
    """
    nu, x = float(nu), float(x)
    if x < 0:
        raise DomainError("domain: x must be >= 0")
    if is_integer_order(nu):
        n = int(round(nu))
        if n < 0:
            return (-1) ** n * bessel_j(-n, x)
        nu = float(n)
    if x == 0.0:
        if nu == 0.0:
            return 1.0
        if nu > 0:
            return 0.0
        raise DomainError("J_nu(0) diverges for negative non-integer order")
    if _use_asymptotic(nu, x):
        return _hankel_jy(nu, x)[0]
    return _power_series(nu, x, -1)


def _y_noninteger(nu: float, x: float) -> float:
    # Y_nu = (cos(nu pi) J_nu - J_{-nu}) / sin(nu pi)
    return (cospi(nu) * _power_series(nu, x, -1) - _power_series(-nu, x, -1)) / sinpi(nu)


def bessel_y(nu: float, x: float, tol: ToleranceSpec | None = None) -> float:
    """Bessel function of the second kind Y_nu(x).

    Non-integer orders use the cos/sin combination of J_nu and J_{-nu}.
    Integer orders are the limit of that combination, taken by Richardson
    extrapolation of the symmetric mean of orders n + d and n - d in d^2.

    Parameters
    ----------
    nu : float
        Order.
    x : float
        Argument, x > 0.
    tol : ToleranceSpec, optional
        Accepted for a uniform signature.

    Returns
    -------
    float
    """
    nu, x = float(nu), float(x)
    if not x > 0:
        raise DomainError("domain: x must be > 0")
    if is_integer_order(nu):
        n = int(round(nu))
        if n < 0:
            return (-1) ** n * bessel_y(-n, x)
        if _use_asymptotic(n, x):
            return _hankel_jy(float(n), x)[1]
        samples = [(d, 0.5 * (_y_noninteger(n + d, x) + _y_noninteger(n - d, x))) for d in _RICHARDSON_STEPS]
        return richardson_limit(samples, power=2)
    if _use_asymptotic(nu, x):
        return _hankel_jy(nu, x)[1]
    return _y_noninteger(nu, x)


# ---------------------------------------------------------------------------
# I and K
# ---------------------------------------------------------------------------


def _i_asymptotic(nu: float, x: float) -> float:
    mu = 4.0 * nu * nu
    total = 1.0
    term = 1.0
    last = math.inf
    for k in range(1, 200):
        term *= -(mu - (2 * k - 1) ** 2) / (k * 8.0 * x)
        a = abs(term)
        if a == 0.0 or a > last:
            break
        total += term
        last = a
        if a < 1e-17:
            break
    half = math.exp(0.5 * x)
    return half * (half / math.sqrt(2.0 * math.pi * x)) * total


def bessel_i(nu: float, x: float, tol: ToleranceSpec | None = None) -> float:
    """Modified Bessel function of the first kind I_nu(x).

    Parameters
    ----------
    nu : float
        Order. I_{-n} = I_n for integer n.
    x : float
        Argument, x >= 0.
    tol : ToleranceSpec, optional
        Accepted for a uniform signature.

    Returns
    -------
    float

    Raises
    ------
    OverflowError
        When the value exceeds the double range.
    """
    nu, x = float(nu), float(x)
    if x < 0:
        raise DomainError("domain: x must be >= 0")
    if is_integer_order(nu):
        nu = float(abs(int(round(nu))))
    if x == 0.0:
        if nu == 0.0:
            return 1.0
        if nu > 0:
            return 0.0
        raise DomainError("I_nu(0) diverges for negative non-integer order")
    if x > 700.0 and x > 2.0 * nu * nu:
        val = _i_asymptotic(nu, x)
    else:
        val = _power_series(nu, x, +1)
    if math.isinf(val):
        raise OverflowError(f"I_{nu}({x}) exceeds the double range")
    return val


def _k_from_i(nu: float, x: float) -> float:
    # K_nu = (pi/2) (I_{-nu} - I_nu) / sin(nu pi)
    return 0.5 * math.pi * (_power_series(-nu, x, +1) - _power_series(nu, x, +1)) / sinpi(nu)


def _k_integral(nu: float, x: float) -> float:
    """K_nu(x) = e^{-x} times the integral of e^{-x (cosh t - 1)} cosh(nu t) over [0, inf)."""

    def f(t):
        if t > 700.0:
            return 0.0
        base = -x * 2.0 * math.sinh(0.5 * t) ** 2  # -x (cosh t - 1) without cancellation
        return 0.5 * (math.exp(base + nu * t) + math.exp(base - nu * t))

    # stretch the variable so the bulk of the integrand sits near unit scale
    scale = 1.0 / math.sqrt(x) if x > 1.0 else 1.0
    res = integrate_semi_infinite(lambda s: f(s * scale) * scale, 0.0, QUAD_TOL)
    return math.exp(-x) * res.value


def bessel_k(nu: float, x: float, tol: ToleranceSpec | None = None) -> float:
    """Modified Bessel function of the second kind K_nu(x).

    For x <= 2 and non-integer order, K is the I-difference formula; integer
    orders are its limit by Richardson extrapolation. For x > 2, or orders
    within 0.01 of an integer that are not integers, the integral of
    e^{-x cosh t} cosh(nu t) over [0, inf) is used, which has no
    cancellation.

    Parameters
    ----------
    nu : float
        Order; K_{-nu} = K_nu.
    x : float
        Argument, x > 0.
    tol : ToleranceSpec, optional
        Accepted for a uniform signature.

    Returns
    -------
    float
    """
    nu, x = abs(float(nu)), float(x)
    if not x > 0:
        raise DomainError("domain: x must be > 0")
    if x > _K_SERIES_MAX:
        return _k_integral(nu, x)
    if is_integer_order(nu):
        n = int(round(nu))
        samples = [(d, 0.5 * (_k_from_i(n + d, x) + _k_from_i(n - d, x))) for d in _RICHARDSON_STEPS]
        return richardson_limit(samples, power=2)
    if abs(nu - round(nu)) < 0.01:
        return _k_integral(nu, x)
    return _k_from_i(nu, x)


# ---------------------------------------------------------------------------
# Hankel functions
# ---------------------------------------------------------------------------


def hankel1(nu: float, x: float, tol: ToleranceSpec | None = None) -> ComplexValue:
    """Hankel function of the first kind, J_nu(x) + i Y_nu(x)."""
    return ComplexValue(bessel_j(nu, x), bessel_y(nu, x))


def hankel2(nu: float, x: float, tol: ToleranceSpec | None = None) -> ComplexValue:
    """Hankel function of the second kind, J_nu(x) - i Y_nu(x)."""
    return ComplexValue(bessel_j(nu, x), -bessel_y(nu, x))


# ---------------------------------------------------------------------------
# spherical functions
# ---------------------------------------------------------------------------


def _check_n(n) -> int:
    if int(n) != n or n < 0:
        raise DomainError("spherical order must be a non-negative integer")
    return int(n)


def _double_factorial_odd(n: int) -> float:
    """(2n+1)!! as a float."""
    out = 1.0
    for k in range(3, 2 * n + 2, 2):
        out *= k
    return out


def spherical_j(n: int, x: float, tol: ToleranceSpec | None = None) -> float:
    """Spherical Bessel function j_n(x) = sqrt(pi/(2x)) J_{n+1/2}(x).

    Parameters
    ----------
    n : int
        Order, n >= 0.
    x : float
        Argument; j_n(-x) = (-1)^n j_n(x) and j_n(0) is the limit value.

    Returns
    -------
    float
    """
    n = _check_n(n)
    x = float(x)
    if x < 0:
        return (-1) ** n * spherical_j(n, -x)
    if x == 0.0:
        return 1.0 if n == 0 else 0.0
    if x < 1e-4:
        return x**n / _double_factorial_odd(n) * (1.0 - x * x / (2.0 * (2 * n + 3)))
    if n <= x:
        # upward recurrence is stable while n <= x
        j0 = math.sin(x) / x
        if n == 0:
            return j0
        j1 = math.sin(x) / (x * x) - math.cos(x) / x
        for k in range(1, n):
            j0, j1 = j1, (2 * k + 1) / x * j1 - j0
        return j1
    return math.sqrt(0.5 * math.pi / x) * bessel_j(n + 0.5, x)


def spherical_y(n: int, x: float, tol: ToleranceSpec | None = None) -> float:
    """Spherical Bessel function y_n(x) = sqrt(pi/(2x)) Y_{n+1/2}(x).

    Computed by upward recurrence from the closed forms of y_0 and y_1.

    Parameters
    ----------
    n : int
        Order, n >= 0.
    x : float
        Argument, x > 0.

    Returns
    -------
    float
    """
    n = _check_n(n)
    x = float(x)
    if not x > 0:
        raise DomainError("domain: x must be > 0")
    y0 = -math.cos(x) / x
    if n == 0:
        return y0
    y1 = -math.cos(x) / (x * x) - math.sin(x) / x
    for k in range(1, n):
        y0, y1 = y1, (2 * k + 1) / x * y1 - y0
    return y1


def spherical_h1(n: int, x: float, tol: ToleranceSpec | None = None) -> ComplexValue:
    """Spherical Hankel function j_n(x) + i y_n(x)."""
    return ComplexValue(spherical_j(n, x), spherical_y(n, x))


def spherical_h2(n: int, x: float, tol: ToleranceSpec | None = None) -> ComplexValue:
    """Spherical Hankel function j_n(x) - i y_n(x)."""
    return ComplexValue(spherical_j(n, x), -spherical_y(n, x))
