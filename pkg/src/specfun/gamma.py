"""Gamma function and relatives.

Gamma itself, its logarithm, the truncated Weierstrass product and Euler
limit, incomplete gamma functions, digamma, polygamma, beta and the leading
Stirling approximation.
"""

from __future__ import annotations

import math

from .errors import DomainError, NonConvergence, PoleError
from .numkernel import FN_TOL, EvalResult, ToleranceSpec, sinpi

__all__ = [
    "EULER_GAMMA",
    "gamma",
    "lgamma",
    "gamma_sign",
    "gamma_weierstrass",
    "gamma_euler_limit",
    "incomplete_gamma_lower",
    "incomplete_gamma_upper",
    "digamma",
    "polygamma",
    "beta",
    "stirling",
]

EULER_GAMMA = 0.57721566490153286061
_LN_SQRT_2PI = 0.91893853320467274178
_SQRT_2PI = 2.5066282746310005024

# Lanczos approximation, g = 7, nine coefficients
_LANCZOS_G = 7.0
_LANCZOS = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)

# B_{2k} for the Stirling and digamma asymptotic series
_BERNOULLI_2K = (
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
)

_GAMMA_MAX = 171.6243769563027


def _is_nonpositive_int(x: float) -> bool:
    return x <= 0 and x == math.floor(x)


def _lanczos_sum(z: float) -> float:
    s = _LANCZOS[0]
    for k in range(1, 9):
        s += _LANCZOS[k] / (z + k)
    return s


def _gamma_pos(x: float) -> float:
    """Gamma for x >= 0.5 by the Lanczos formula."""
    if x == math.floor(x) and x <= 171:
        return float(math.factorial(int(x) - 1))
    if x > _GAMMA_MAX:
        raise OverflowError(f"gamma({x!r}) exceeds the double range")
    z = x - 1.0
    t = z + _LANCZOS_G + 0.5
    # split the power so t**(z+1/2) cannot overflow before e**-t scales it
    half = t ** ((z + 0.5) / 2.0)
    return _SQRT_2PI * (half * math.exp(-t)) * half * _lanczos_sum(z)


def gamma(x: float) -> float:
    """Gamma function on the real line.

    Parameters
    ----------
    x : float
        Argument, not a non-positive integer.

    Returns
    -------
    float

    Raises
    ------
    PoleError
        At x = 0, -1, -2, ...
    OverflowError
        When the result exceeds the double range.
    """
    x = float(x)
    if math.isnan(x):
        return math.nan
    if _is_nonpositive_int(x):
        raise PoleError(f"gamma has a pole at x={x!r}")
    if x >= 0.5:
        return _gamma_pos(x)
    # reflection: Gamma(x) Gamma(1-x) = pi / sin(pi x)
    s = sinpi(x)
    g1 = _gamma_pos(1.0 - x) if 1.0 - x <= _GAMMA_MAX else math.inf
    if math.isinf(g1):
        return 0.0 * math.copysign(1.0, s)
    return math.pi / (s * g1)


def _lgamma_pos(x: float) -> float:
    if x < 10.0:
        z = x - 1.0
        t = z + _LANCZOS_G + 0.5
        return _LN_SQRT_2PI + (z + 0.5) * math.log(t) - t + math.log(_lanczos_sum(z))
    # Stirling series with Bernoulli corrections
    inv = 1.0 / x
    inv2 = inv * inv
    corr = 0.0
    p = inv
    for k, b in enumerate(_BERNOULLI_2K[:8], start=1):
        corr += b / (2 * k * (2 * k - 1)) * p
        p *= inv2
    return (x - 0.5) * math.log(x) - x + _LN_SQRT_2PI + corr


def lgamma(x: float) -> float:
    """Logarithm of |Gamma(x)|.

    Parameters
    ----------
    x : float
        Argument, not a non-positive integer.

    Returns
    -------
    float
    """
    x = float(x)
    if _is_nonpositive_int(x):
        raise PoleError(f"gamma has a pole at x={x!r}")
    if x >= 0.5:
        if x == 1.0 or x == 2.0:
            return 0.0
        return _lgamma_pos(x)
    return math.log(math.pi) - math.log(abs(sinpi(x))) - _lgamma_pos(1.0 - x)


def gamma_sign(x: float) -> float:
    """Sign of Gamma(x): +1 for x > 0, alternating between poles for x < 0."""
    x = float(x)
    if _is_nonpositive_int(x):
        raise PoleError(f"gamma has a pole at x={x!r}")
    if x > 0:
        return 1.0
    return -1.0 if math.floor(x) % 2 else 1.0


def gamma_weierstrass(x: float, n_factors: int) -> float:
    """Truncated Weierstrass product for Gamma.

    Evaluates e^{-gamma x}/x times the product over n = 1..n_factors of
    e^{x/n} / (1 + x/n).

    Parameters
    ----------
    x : float
        Argument, not a non-positive integer.
    n_factors : int
        Number of factors kept, at least 1.

    Returns
    -------
    float
    """
    x = float(x)
    if _is_nonpositive_int(x):
        raise PoleError(f"gamma has a pole at x={x!r}")
    if n_factors < 1:
        raise DomainError("n_factors must be >= 1")
    sign = -1.0 if x < 0 else 1.0
    terms = [-EULER_GAMMA * x, -math.log(abs(x))]
    for n in range(1, n_factors + 1):
        q = x / n
        if q <= -1.0:
            sign = -sign
            terms.append(q - math.log(abs(1.0 + q)))
        else:
            terms.append(q - math.log1p(q))
    return sign * math.exp(math.fsum(terms))


def gamma_euler_limit(x: float, m: int) -> float:
    """Euler's limit m! m^x / (x (x+1) ... (x+m)) truncated at m.

    Parameters
    ----------
    x : float
        Argument, not a non-positive integer.
    m : int
        Truncation index, at least 1.

    Returns
    -------
    float
    """
    x = float(x)
    if _is_nonpositive_int(x):
        raise PoleError(f"gamma has a pole at x={x!r}")
    if m < 1:
        raise DomainError("m must be >= 1")
    sign = -1.0 if x < 0 else 1.0
    terms = [x * math.log(m), -math.log(abs(x))]
    for k in range(1, m + 1):
        q = x / k
        if q <= -1.0:
            sign = -sign
            terms.append(-math.log(abs(1.0 + q)))
        else:
            terms.append(-math.log1p(q))
    return sign * math.exp(math.fsum(terms))


# ---------------------------------------------------------------------------
# incomplete gamma
# ---------------------------------------------------------------------------


def _check_incomplete(x, a):
    if not x > 0:
        raise DomainError("incomplete gamma requires x > 0")
    if not a >= 0:
        raise DomainError("incomplete gamma requires a >= 0")


def _lower_series(x: float, a: float, tol: ToleranceSpec) -> float:
    """a^x e^{-a} sum_n a^n / (x (x+1) ... (x+n))."""
    term = 1.0 / x
    total = term
    n = 0
    limit = max(tol.max_terms, int(4 * a) + 50)
    while True:
        n += 1
        term *= a / (x + n)
        total += term
        if abs(term) <= abs(total) * 1e-17:
            break
        if n > limit:
            raise NonConvergence(
                "incomplete gamma series did not converge",
                EvalResult(total, n, False, abs(term)),
            )
    return math.exp(x * math.log(a) - a) * total


def _upper_fraction(x: float, a: float, tol: ToleranceSpec) -> float:
    """Gamma(x, a) by the Legendre continued fraction (modified Lentz)."""
    tiny = 1e-300
    b = a + 1.0 - x
    c = 1.0 / tiny
    d = 1.0 / b if b != 0 else 1.0 / tiny
    h = d
    i = 0
    limit = max(tol.max_terms, 1000)
    while True:
        i += 1
        an = -i * (i - x)
        b += 2.0
        d = an * d + b
        if abs(d) < tiny:
            d = tiny
        c = b + an / c
        if abs(c) < tiny:
            c = tiny
        d = 1.0 / d
        delta = d * c
        h *= delta
        if abs(delta - 1.0) <= 1e-16:
            break
        if i > limit:
            raise NonConvergence(
                "incomplete gamma continued fraction did not converge",
                EvalResult(h, i, False, abs(delta - 1.0)),
            )
    return math.exp(x * math.log(a) - a) * h


def incomplete_gamma_lower(x: float, a: float, tol: ToleranceSpec | None = None) -> float:
    """Lower incomplete gamma, the integral of e^{-t} t^{x-1} over [0, a].

    Parameters
    ----------
    x : float
        Shape, x > 0.
    a : float
        Upper limit, a >= 0.
    tol : ToleranceSpec, optional
        Numeric policy.

    Returns
    -------
    float
    """
    tol = tol or FN_TOL
    x, a = float(x), float(a)
    _check_incomplete(x, a)
    if a == 0.0:
        return 0.0
    if a < x + 1.0:
        return _lower_series(x, a, tol)
    return gamma(x) - _upper_fraction(x, a, tol)


def incomplete_gamma_upper(x: float, a: float, tol: ToleranceSpec | None = None) -> float:
    """Upper incomplete gamma, the integral of e^{-t} t^{x-1} over [a, inf).

    Parameters
    ----------
    x : float
        Shape, x > 0.
    a : float
        Lower limit, a >= 0.
    tol : ToleranceSpec, optional
        Numeric policy.

    Returns
    -------
    float
    """
    tol = tol or FN_TOL
    x, a = float(x), float(a)
    _check_incomplete(x, a)
    if a == 0.0:
        return gamma(x)
    if a < x + 1.0:
        return gamma(x) - _lower_series(x, a, tol)
    return _upper_fraction(x, a, tol)


# ---------------------------------------------------------------------------
# digamma and polygamma
# ---------------------------------------------------------------------------


def _digamma_asymptotic(x: float) -> float:
    inv2 = 1.0 / (x * x)
    s = 0.0
    p = inv2
    for k, b in enumerate(_BERNOULLI_2K[:8], start=1):
        s += b / (2 * k) * p
        p *= inv2
    return math.log(x) - 0.5 / x - s


def digamma(x: float) -> float:
    """Digamma function, the logarithmic derivative of Gamma.

    Parameters
    ----------
    x : float
        Argument, not a non-positive integer.

    Returns
    -------
    float
    """
    x = float(x)
    if _is_nonpositive_int(x):
        raise PoleError(f"digamma has a pole at x={x!r}")
    if x < 0.5:
        # psi(1 - x) = psi(x) + pi cot(pi x)
        cot = math.cos(math.pi * x) / sinpi(x) if abs(x) < 1e15 else 0.0
        return digamma(1.0 - x) - math.pi * cot
    shift = 0.0
    while x < 10.0:
        shift += 1.0 / x
        x += 1.0
    return _digamma_asymptotic(x) - shift


def polygamma(m: int, x: float) -> float:
    """Polygamma function, the (m+1)-th derivative of ln Gamma.

    Parameters
    ----------
    m : int
        Order, m >= 0. m = 0 is the digamma function.
    x : float
        Argument, x > 0.

    Returns
    -------
    float
    """
    if m < 0 or int(m) != m:
        raise DomainError("polygamma order must be a non-negative integer")
    m = int(m)
    x = float(x)
    if not x > 0:
        raise DomainError("polygamma requires x > 0")
    if m == 0:
        return digamma(x)
    # direct sum until x + N is large, then an Euler-Maclaurin tail
    y_min = max(20.0, 2.0 * m)
    head = []
    y = x
    while y < y_min:
        head.append(y ** -(m + 1))
        y += 1.0
    tail = [y**-m / m, 0.5 * y ** -(m + 1)]
    rising = float(m + 1)  # (m+1)_{2j-1}, starts at j = 1
    fact = 2.0  # (2j)!
    for j, b in enumerate(_BERNOULLI_2K, start=1):
        if j > 1:
            rising *= (m + 2 * j - 2) * (m + 2 * j - 1)
            fact *= (2 * j - 1) * (2 * j)
        t = b / fact * rising * y ** -(m + 2 * j)
        tail.append(t)
        if abs(t) < 1e-18 * abs(tail[0]):
            break
    total = math.fsum(head + tail)
    return (-1.0) ** (m + 1) * math.factorial(m) * total


# ---------------------------------------------------------------------------
# beta and Stirling
# ---------------------------------------------------------------------------


def beta(x: float, y: float) -> float:
    """Beta function Gamma(x) Gamma(y) / Gamma(x + y).

    The arguments are sorted first so that the result is exactly
    symmetric. Large arguments go through ln Gamma to avoid overflow.

    Parameters
    ----------
    x, y : float
        Positive arguments.

    Returns
    -------
    float
    """
    x, y = float(x), float(y)
    if not (x > 0 and y > 0):
        raise DomainError("beta requires x > 0 and y > 0")
    x, y = min(x, y), max(x, y)
    if x + y < 100.0:
        return gamma(x) * gamma(y) / gamma(x + y)
    return math.exp(lgamma(x) + lgamma(y) - lgamma(x + y))


def stirling(x: float) -> float:
    """Leading Stirling approximation sqrt(2 pi x) x^x e^{-x} of Gamma(x+1).

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
        raise DomainError("stirling requires x > 0")
    expo = x * math.log(x) - x
    if expo > 709.0:
        raise OverflowError(f"stirling({x!r}) exceeds the double range")
    return math.sqrt(2.0 * math.pi * x) * math.exp(expo)
