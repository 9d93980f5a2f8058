"""Error function, Fresnel integrals and the exponential-integral family.

None of these routines call the incomplete gamma functions, so that the
relations between the two families remain independent checks.
"""

from __future__ import annotations

import cmath
import math
from decimal import Decimal, localcontext

from .errors import DomainError, NonConvergence
from .gamma import EULER_GAMMA
from .numkernel import FN_TOL, QUAD_TOL, EvalResult, ToleranceSpec, exp_neg_square, integrate_semi_infinite, sum_ratio_series

__all__ = [
    "erf",
    "erfc",
    "fresnel_c",
    "fresnel_s",
    "ein",
    "e1",
    "ei",
    "li",
    "si",
    "ci",
    "aux_f",
    "aux_g",
    "FRESNEL_MAX",
]

_TWO_OVER_SQRT_PI = 1.1283791670955125739
_INV_SQRT_PI = 0.56418958354775628695
_PI_DEC = Decimal("3.14159265358979323846264338327950288419716939937510582097494")

FRESNEL_MAX = 4.0
_SICI_SWITCH = 4.0


def _tol(tol):
    return FN_TOL if tol is None else tol


def _qtol(tol):
    return QUAD_TOL if tol is None else tol


# ---------------------------------------------------------------------------
# error function
# ---------------------------------------------------------------------------


def _erf_alternating(x: float, tol: ToleranceSpec) -> float:
    """sum (-1)^n x^{2n+1} / (n! (2n+1)), scaled by 2/sqrt(pi)."""
    x2 = x * x
    # carry the factor x^{2n+1}/n! in the term and divide by 2n+1 on the fly
    res = sum_ratio_series(
        x,
        lambda n: -x2 * (2 * n + 1) / ((n + 1) * (2 * n + 3)),
        tol,
    )
    return _TWO_OVER_SQRT_PI * res.value


def _erf_positive(x: float, tol: ToleranceSpec) -> float:
    """e^{-x^2} sum 2^n x^{2n+1} / (1 3 5 ... (2n+1)), scaled by 2/sqrt(pi)."""
    x2 = x * x
    res = sum_ratio_series(x, lambda n: 2.0 * x2 / (2 * n + 3), tol.replace(max_terms=max(tol.max_terms, 400)))
    return _TWO_OVER_SQRT_PI * exp_neg_square(x) * res.value


def _erfc_fraction(x: float) -> float:
    """erfc for x >= 1 by the Laplace continued fraction, modified Lentz."""
    tiny = 1e-300
    # erfc(x) = e^{-x^2}/sqrt(pi) * 1/(x + (1/2)/(x + 1/(x + (3/2)/(x + ...))))
    f = x
    c = x
    d = 0.0
    for n in range(1, 5000):
        an = 0.5 * n
        d = x + an * d
        if abs(d) < tiny:
            d = tiny
        c = x + an / c
        if abs(c) < tiny:
            c = tiny
        d = 1.0 / d
        delta = c * d
        f *= delta
        if abs(delta - 1.0) < 1e-16:
            break
    else:
        raise NonConvergence("erfc continued fraction did not converge", EvalResult(f, n, False, abs(delta - 1)))
    return _INV_SQRT_PI * exp_neg_square(x) / f


def erf(x: float, tol: ToleranceSpec | None = None) -> float:
    """Error function, 2/sqrt(pi) times the integral of e^{-t^2} over [0, x].

    Parameters
    ----------
    x : float
        Real argument.
    tol : ToleranceSpec, optional
        Numeric policy for the series.

    Returns
    -------
    float
    """
    tol = _tol(tol)
    x = float(x)
    if math.isnan(x):
        return math.nan
    if x < 0:
        return -erf(-x, tol)
    if x == 0:
        return 0.0
    if x <= 2.0:
        return _erf_alternating(x, tol)
    if x <= 4.0:
        return _erf_positive(x, tol)
    return 1.0 - _erfc_fraction(x)


def erfc(x: float, tol: ToleranceSpec | None = None) -> float:
    """Complementary error function 1 - erf(x).

    Parameters
    ----------
    x : float
        Real argument.
    tol : ToleranceSpec, optional
        Numeric policy.

    Returns
    -------
    float
    """
    x = float(x)
    if math.isnan(x):
        return math.nan
    if x < 0:
        return 1.0 + erf(-x, tol)
    if x < 1.25:
        return 1.0 - erf(x, tol)
    return _erfc_fraction(x)


def _erf_complex(z: complex, tol: ToleranceSpec | None = None) -> complex:
    """erf for a complex argument of modest size, by the alternating series."""
    tol = _tol(tol)
    z2 = z * z
    res = sum_ratio_series(complex(z), lambda n: -z2 * (2 * n + 1) / ((n + 1) * (2 * n + 3)), tol)
    return _TWO_OVER_SQRT_PI * res.value


# ---------------------------------------------------------------------------
# Fresnel integrals
# ---------------------------------------------------------------------------


def _fresnel_series(x: float, odd: int) -> float:
    """Fresnel series in extended precision.

    odd = 0 gives C(x) = sum (-1)^n (pi/2)^{2n} x^{4n+1} / ((2n)! (4n+1)),
    odd = 1 gives S(x) = sum (-1)^n (pi/2)^{2n+1} x^{4n+3} / ((2n+1)! (4n+3)).
    The alternating terms reach about 1e9 near |x| = 4, so they are summed
    with enough decimal digits that the cancellation costs nothing.
    """
    if abs(x) > FRESNEL_MAX:
        raise NonConvergence(
            f"Fresnel series is only used for |x| <= {FRESNEL_MAX:g}",
            EvalResult(math.nan, 0, False, math.inf),
        )
    if x == 0.0:
        return 0.0
    with localcontext() as ctx:
        ctx.prec = 45
        xd = Decimal(x)
        a = _PI_DEC / 2 * xd * xd  # (pi/2) x^2
        # power = (pi/2 x^2)^k / k! for k = 2n + odd
        power = a if odd else Decimal(1)
        k = odd
        total = Decimal(0)
        sign = 1
        eps = Decimal(10) ** -40
        n = 0
        while True:
            term = power / (2 * k + 1)
            total += term if sign > 0 else -term
            if term < eps * abs(total) and k > a:
                break
            power = power * a * a / ((k + 1) * (k + 2))
            k += 2
            sign = -sign
            n += 1
            if n > 2000:
                raise NonConvergence("Fresnel series did not converge", EvalResult(float(total), n, False, float(term)))
        return float(total * xd)


def fresnel_c(x: float, tol: ToleranceSpec | None = None) -> float:
    """Fresnel cosine integral, the integral of cos(pi t^2 / 2) over [0, x].

    Evaluated by its power series for |x| <= 4.

    Parameters
    ----------
    x : float
        Real argument, |x| <= 4.
    tol : ToleranceSpec, optional
        Unused, accepted for a uniform signature.

    Returns
    -------
    float

    Raises
    ------
    NonConvergence
        For |x| > 4, where no expansion is provided.
    """
    x = float(x)
    if x < 0:
        return -fresnel_c(-x)
    return _fresnel_series(x, 0)


def fresnel_s(x: float, tol: ToleranceSpec | None = None) -> float:
    """Fresnel sine integral, the integral of sin(pi t^2 / 2) over [0, x].

    Evaluated by its power series for |x| <= 4.

    Parameters
    ----------
    x : float
        Real argument, |x| <= 4.
    tol : ToleranceSpec, optional
        Unused, accepted for a uniform signature.

    Returns
    -------
    float

    Raises
    ------
    NonConvergence
        For |x| > 4.
    """
    x = float(x)
    if x < 0:
        return -fresnel_s(-x)
    return _fresnel_series(x, 1)


# ---------------------------------------------------------------------------
# exponential integrals
# ---------------------------------------------------------------------------


def _ein_alternating(x: float, tol: ToleranceSpec) -> float:
    """sum (-1)^{n+1} x^n / (n! n)."""
    # term_n = (-1)^{n+1} x^n/(n! n); ratio t_{n+1}/t_n = -x n / (n+1)^2
    res = sum_ratio_series(x, lambda r: -x * (r + 1) / ((r + 2) ** 2), tol)
    return res.value


def _ein_positive(x: float, tol: ToleranceSpec) -> float:
    """e^{-x} sum x^n H_n / n!, free of cancellation for x > 0."""
    p = math.exp(-x)  # e^{-x} x^n / n!
    h = 0.0
    total = 0.0
    n = 0
    peak = int(x) + 1
    while True:
        n += 1
        p *= x / n
        h += 1.0 / n
        t = p * h
        total += t
        if n > peak and t <= 1e-17 * total:
            break
        if n > 20000:
            raise NonConvergence("Ein series did not converge", EvalResult(total, n, False, t))
    return total


def ein(x: float, tol: ToleranceSpec | None = None) -> float:
    """Entire exponential integral, the integral of (1 - e^{-t})/t over [0, x].

    Parameters
    ----------
    x : float
        Real argument.
    tol : ToleranceSpec, optional
        Numeric policy.

    Returns
    -------
    float
    """
    tol = _tol(tol)
    x = float(x)
    if x == 0.0:
        return 0.0
    if x <= 1.0:
        # for x < 0 every term of the alternating form has the same sign
        return _ein_alternating(x, tol.replace(max_terms=max(tol.max_terms, int(3 * abs(x)) + 100)))
    if x <= 50.0:
        return _ein_positive(x, tol)
    return _e1_fraction(x) + EULER_GAMMA + math.log(x)


def _e1_fraction(x: float) -> float:
    """E1 for x > 1 by its continued fraction, modified Lentz."""
    tiny = 1e-300
    b = x + 1.0
    c = 1.0 / tiny
    d = 1.0 / b
    h = d
    for i in range(1, 10000):
        an = -float(i * i)
        b += 2.0
        d = 1.0 / (an * d + b)
        c = b + an / c
        delta = c * d
        h *= delta
        if abs(delta - 1.0) < 1e-16:
            break
    else:
        raise NonConvergence("E1 continued fraction did not converge", EvalResult(h, i, False, abs(delta - 1)))
    return h * math.exp(-x)


def e1(x: float, tol: ToleranceSpec | None = None) -> float:
    """Exponential integral E1, the integral of e^{-t}/t over [x, inf).

    Uses -gamma - ln x + Ein(x) for x <= 2 and a continued fraction beyond.

    Parameters
    ----------
    x : float
        Positive argument.
    tol : ToleranceSpec, optional
        Numeric policy.

    Returns
    -------
    float
    """
    x = float(x)
    if not x > 0:
        raise DomainError("domain: x must be > 0")
    if x <= 2.0:
        return -EULER_GAMMA - math.log(x) + ein(x, tol)
    if x > 745.0:
        return 0.0
    return _e1_fraction(x)


def ei(x: float, tol: ToleranceSpec | None = None) -> float:
    """Exponential integral Ei, the principal value of the integral of e^t/t up to x.

    Parameters
    ----------
    x : float
        Non-zero argument.
    tol : ToleranceSpec, optional
        Numeric policy.

    Returns
    -------
    float
    """
    tol = _tol(tol)
    x = float(x)
    if x == 0.0:
        raise DomainError("domain: x must be != 0")
    if x < 0:
        return -e1(-x, tol)
    if x <= 40.0:
        # gamma + ln x + sum x^n / (n! n)
        res = sum_ratio_series(x, lambda r: x * (r + 1) / ((r + 2) ** 2), tol.replace(max_terms=max(tol.max_terms, 400)))
        return EULER_GAMMA + math.log(x) + res.value
    if x > 709.0:
        raise OverflowError(f"ei({x!r}) exceeds the double range")
    # asymptotic e^x/x sum k!/x^k, stopped at the smallest term
    total = 1.0
    term = 1.0
    for k in range(1, 200):
        nxt = term * k / x
        if nxt >= term or nxt < 1e-17:
            break
        term = nxt
        total += term
    return math.exp(x) / x * total


def li(x: float, tol: ToleranceSpec | None = None) -> float:
    """Logarithmic integral, the integral of 1/ln t over [0, x].

    Computed as Ei(ln x), a principal value for x > 1.

    Parameters
    ----------
    x : float
        Argument with x > 0 and x != 1.
    tol : ToleranceSpec, optional
        Numeric policy.

    Returns
    -------
    float
    """
    x = float(x)
    if not x > 0 or x == 1.0:
        raise DomainError("domain: x must be > 0 and != 1")
    return ei(math.log(x), tol)


# ---------------------------------------------------------------------------
# sine and cosine integrals
# ---------------------------------------------------------------------------


def aux_f(x: float, tol: ToleranceSpec | None = None) -> float:
    """Auxiliary function f(x), the integral of sin t/(x + t) over [0, inf).

    Evaluated through the equivalent Laplace form, the integral of
    e^{-x t}/(1 + t^2) over [0, inf), which is smooth and free of
    oscillation.

    Parameters
    ----------
    x : float
        Positive argument.

    Returns
    -------
    float
    """
    x = float(x)
    if not x > 0:
        raise DomainError("domain: x must be > 0")
    tol = _qtol(tol)
    # with s = x t the integral becomes (1/x) int e^{-s} / (1 + (s/x)^2) ds
    res = integrate_semi_infinite(lambda s: math.exp(-s) / (1.0 + (s / x) ** 2), 0.0, tol)
    return res.value / x


def aux_g(x: float, tol: ToleranceSpec | None = None) -> float:
    """Auxiliary function g(x), the integral of cos t/(x + t) over [0, inf).

    Evaluated through the Laplace form, the integral of t e^{-x t}/(1 + t^2).

    Parameters
    ----------
    x : float
        Positive argument.

    Returns
    -------
    float
    """
    x = float(x)
    if not x > 0:
        raise DomainError("domain: x must be > 0")
    tol = _qtol(tol)
    res = integrate_semi_infinite(lambda s: s * math.exp(-s) / (x * x + s * s), 0.0, tol)
    return res.value


def si(x: float, tol: ToleranceSpec | None = None) -> float:
    """Sine integral, the integral of sin t / t over [0, x].

    Power series for |x| <= 4, auxiliary functions f and g beyond.

    Parameters
    ----------
    x : float
        Real argument (odd function).
    tol : ToleranceSpec, optional
        Numeric policy.

    Returns
    -------
    float
    """
    tol = _tol(tol)
    x = float(x)
    if x < 0:
        return -si(-x, tol)
    if x == 0.0:
        return 0.0
    if x <= _SICI_SWITCH:
        x2 = x * x
        # term_n = (-1)^n x^{2n+1} / ((2n+1) (2n+1)!)
        res = sum_ratio_series(
            x,
            lambda n: -x2 * (2 * n + 1) / ((2 * n + 2) * (2 * n + 3) ** 2),
            tol,
        )
        return res.value
    return 0.5 * math.pi - aux_f(x) * math.cos(x) - aux_g(x) * math.sin(x)


def ci(x: float, tol: ToleranceSpec | None = None) -> float:
    """Cosine integral, minus the integral of cos t / t over [x, inf).

    Parameters
    ----------
    x : float
        Positive argument.
    tol : ToleranceSpec, optional
        Numeric policy.

    Returns
    -------
    float
    """
    tol = _tol(tol)
    x = float(x)
    if not x > 0:
        raise DomainError("domain: x must be > 0")
    if x <= _SICI_SWITCH:
        x2 = x * x
        # term_n = (-1)^n x^{2n} / (2n (2n)!), n >= 1
        res = sum_ratio_series(
            -x2 / 4.0,
            lambda n: -x2 * (2 * n + 2) / ((2 * n + 3) * (2 * n + 4) ** 2),
            tol,
        )
        return EULER_GAMMA + math.log(x) + res.value
    return aux_f(x) * math.sin(x) - aux_g(x) * math.cos(x)
