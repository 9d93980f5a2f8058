"""Orthogonal polynomial families.

Legendre, associated Legendre, spherical harmonics, Hermite, Laguerre,
associated Laguerre and Chebyshev. Up to degree 20 each polynomial is held
as an exact rational coefficient vector and evaluated in integer arithmetic
with a single final rounding; above that, three-term recurrences are run in
floating point.
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Sequence

from .errors import DepthExceeded, DomainError, SingularEndpoint
from .numkernel import QUAD_TOL, ComplexValue, ToleranceSpec, integrate_finite

__all__ = [
    "ExactPoly",
    "MAX_EXACT_DEGREE",
    "MAX_DEGREE",
    "legendre_coefficients",
    "hermite_coefficients",
    "laguerre_coefficients",
    "assoc_laguerre_coefficients",
    "chebyshev_t_coefficients",
    "legendre_p",
    "legendre_p_derivative",
    "assoc_legendre",
    "spherical_harmonic",
    "hermite_h",
    "laguerre_l",
    "assoc_laguerre",
    "chebyshev_t",
    "chebyshev_u",
    "chebyshev_t_series",
    "chebyshev_u_series",
    "legendre_series_fit",
    "hermite_series_fit",
]

MAX_EXACT_DEGREE = 20
MAX_DEGREE = 60


class ExactPoly:
    """Polynomial with exact rational coefficients, lowest degree first.

    Parameters
    ----------
    coeffs : sequence of int or Fraction
        Coefficients c_0, c_1, ..., c_d.
    """

    __slots__ = ("coeffs", "_ints", "_den")

    def __init__(self, coeffs: Sequence):
        cs = [Fraction(c) for c in coeffs]
        while len(cs) > 1 and cs[-1] == 0:
            cs.pop()
        if not cs:
            cs = [Fraction(0)]
        self.coeffs = tuple(cs)
        den = 1
        for c in cs:
            den = den * c.denominator // math.gcd(den, c.denominator)
        self._den = den
        self._ints = tuple(int(c * den) for c in cs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __eq__(self, other):
        return isinstance(other, ExactPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"ExactPoly({[str(c) for c in self.coeffs]})"

    def __add__(self, other: "ExactPoly") -> "ExactPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (Fraction(0),) * (n - len(self.coeffs))
        b = other.coeffs + (Fraction(0),) * (n - len(other.coeffs))
        return ExactPoly([x + y for x, y in zip(a, b)])

    def __mul__(self, other) -> "ExactPoly":
        if not isinstance(other, ExactPoly):
            return ExactPoly([c * Fraction(other) for c in self.coeffs])
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return ExactPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "ExactPoly":
        out = ExactPoly([1])
        for _ in range(k):
            out = out * self
        return out

    def derivative(self, m: int = 1) -> "ExactPoly":
        """m-th derivative, exactly."""
        cs = list(self.coeffs)
        for _ in range(m):
            cs = [cs[k] * k for k in range(1, len(cs))] or [Fraction(0)]
        return ExactPoly(cs)

    def eval_exact(self, x) -> Fraction:
        """Value at a rational point, exactly."""
        x = Fraction(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __call__(self, x: float) -> float:
        """Value at a float point, rounded once from the exact result."""
        x = float(x)
        if not math.isfinite(x):
            return float(self.eval_exact(Fraction(0))) if self.degree == 0 else math.nan
        p, q = x.as_integer_ratio()
        d = self.degree
        ints = self._ints
        acc = ints[d]
        qpow = 1
        for k in range(d - 1, -1, -1):
            qpow *= q
            acc = acc * p + ints[k] * qpow
        if acc == 0:
            return 0.0
        return acc / (self._den * q**d)


def _check_degree(n, name="degree") -> int:
    if int(n) != n:
        raise IndexError(f"{name} must be an integer")
    n = int(n)
    if n < 0 or n > MAX_DEGREE:
        raise IndexError(f"{name} must lie in [0, {MAX_DEGREE}]")
    return n


def _check_unit(x: float) -> float:
    x = float(x)
    if not -1.0 <= x <= 1.0:
        raise DomainError("domain: x must lie in [-1, 1]")
    return x


# ---------------------------------------------------------------------------
# exact coefficient tables
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def legendre_coefficients(l: int) -> ExactPoly:
    """P_l from sum (-1)^r (2l-2r)! / (2^l r! (l-r)! (l-2r)!) x^{l-2r}."""
    f = math.factorial
    cs = [Fraction(0)] * (l + 1)
    for r in range(l // 2 + 1):
        cs[l - 2 * r] = Fraction((-1) ** r * f(2 * l - 2 * r), 2**l * f(r) * f(l - r) * f(l - 2 * r))
    return ExactPoly(cs)


@lru_cache(maxsize=None)
def hermite_coefficients(n: int) -> ExactPoly:
    """H_n from sum (-1)^r n! / (r! (n-2r)!) (2x)^{n-2r}."""
    f = math.factorial
    cs = [0] * (n + 1)
    for r in range(n // 2 + 1):
        cs[n - 2 * r] = (-1) ** r * f(n) // (f(r) * f(n - 2 * r)) * 2 ** (n - 2 * r)
    return ExactPoly(cs)


@lru_cache(maxsize=None)
def laguerre_coefficients(n: int) -> ExactPoly:
    """L_n from sum (-1)^r n! / ((n-r)! (r!)^2) x^r."""
    f = math.factorial
    return ExactPoly([Fraction((-1) ** r * f(n), f(n - r) * f(r) ** 2) for r in range(n + 1)])


@lru_cache(maxsize=None)
def assoc_laguerre_coefficients(n: int, k: int) -> ExactPoly:
    """L_n^k from sum (-1)^r (n+k)! / ((n-r)! (k+r)! r!) x^r."""
    f = math.factorial
    return ExactPoly([Fraction((-1) ** r * f(n + k), f(n - r) * f(k + r) * f(r)) for r in range(n + 1)])


@lru_cache(maxsize=None)
def chebyshev_t_coefficients(n: int) -> ExactPoly:
    """T_n expanded from sum (-1)^r C(n, 2r) (1 - x^2)^r x^{n-2r}."""
    one_minus_x2 = ExactPoly([1, 0, -1])
    out = ExactPoly([0])
    for r in range(n // 2 + 1):
        mono = ExactPoly([0] * (n - 2 * r) + [1])
        out = out + (one_minus_x2**r * mono) * ((-1) ** r * math.comb(n, 2 * r))
    return out


# ---------------------------------------------------------------------------
# Legendre family
# ---------------------------------------------------------------------------


def legendre_p(l: int, x: float) -> float:
    """Legendre polynomial P_l(x).

    Parameters
    ----------
    l : int
        Degree, 0 <= l <= 60.
    x : float
        Argument. Any real is accepted since P_l is a polynomial; the
        orthogonality interval is [-1, 1].

    Returns
    -------
    float
    """
    l = _check_degree(l)
    x = float(x)
    if l <= MAX_EXACT_DEGREE:
        return legendre_coefficients(l)(x)
    p0, p1 = legendre_coefficients(MAX_EXACT_DEGREE - 1)(x), legendre_coefficients(MAX_EXACT_DEGREE)(x)
    for k in range(MAX_EXACT_DEGREE, l):
        p0, p1 = p1, ((2 * k + 1) * x * p1 - k * p0) / (k + 1)
    return p1


def legendre_p_derivative(l: int, x: float, order: int = 1) -> float:
    """Derivative of P_l of the given order, from the exact coefficients.

    Parameters
    ----------
    l : int
        Degree, 0 <= l <= 20.
    x : float
        Argument.
    order : int
        Derivative order.

    Returns
    -------
    float
    """
    l = _check_degree(l)
    if l > MAX_EXACT_DEGREE:
        raise IndexError(f"exact derivatives are available up to degree {MAX_EXACT_DEGREE}")
    return legendre_coefficients(l).derivative(order)(x)


def _one_minus_x2(x: float) -> float:
    return (1.0 - x) * (1.0 + x)


def _assoc_legendre_pos(l: int, m: int, x: float, root: float | None = None) -> float:
    """P_l^m for 0 <= m <= l, without the Condon-Shortley sign.

    ``root`` is sqrt(1 - x^2) when the caller knows it more accurately,
    e.g. sin(theta) for x = cos(theta) near the poles.
    """
    if m == 0:
        return legendre_p(l, x)
    if root is None:
        root = math.sqrt(_one_minus_x2(x))
    if l <= MAX_EXACT_DEGREE:
        d = legendre_coefficients(l).derivative(m)(x)
        return d * root**m
    # recurrence in l from P_m^m = (2m-1)!! (1-x^2)^{m/2}
    pmm = 1.0
    for k in range(1, 2 * m, 2):
        pmm *= k
    pmm *= root**m
    if l == m:
        return pmm
    p0, p1 = pmm, (2 * m + 1) * x * pmm
    for k in range(m + 1, l):
        p0, p1 = p1, ((2 * k + 1) * x * p1 - (k + m) * p0) / (k - m + 1)
    return p1


def assoc_legendre(l: int, m: int, x: float) -> float:
    """Associated Legendre function P_l^m(x) = (1-x^2)^{m/2} d^m P_l / dx^m.

    No (-1)^m factor is included. Negative orders use
    P_l^{-m} = (-1)^m (l-m)!/(l+m)! P_l^m.

    Parameters
    ----------
    l : int
        Degree, 0 <= l <= 60.
    m : int
        Order, |m| <= l.
    x : float
        Argument in [-1, 1].

    Returns
    -------
    float
    """
    l = _check_degree(l)
    if int(m) != m or abs(m) > l:
        raise IndexError("order m must be an integer with |m| <= l")
    m = int(m)
    x = _check_unit(x)
    if m >= 0:
        return _assoc_legendre_pos(l, m, x)
    k = -m
    ratio = Fraction(math.factorial(l - k), math.factorial(l + k))
    return (-1) ** k * float(ratio) * _assoc_legendre_pos(l, k, x)


def spherical_harmonic(l: int, m: int, theta: float, phi: float) -> ComplexValue:
    """Spherical harmonic Y_l^m(theta, phi).

    Y_l^m = (-1)^m / sqrt(2 pi) sqrt((2l+1)(l-m)! / (2 (l+m)!)) e^{i m phi} P_l^m(cos theta),
    with P_l^m as in ``assoc_legendre``.

    Parameters
    ----------
    l : int
        Degree, 0 <= l <= 60.
    m : int
        Order, |m| <= l.
    theta : float
        Polar angle in [0, pi].
    phi : float
        Azimuth in radians.

    Returns
    -------
    ComplexValue
    """
    l = _check_degree(l)
    if int(m) != m or abs(m) > l:
        raise IndexError("order m must be an integer with |m| <= l")
    m = int(m)
    theta, phi = float(theta), float(phi)
    if not 0.0 <= theta <= math.pi:
        raise DomainError("domain: theta must lie in [0, pi]")
    norm_sq = Fraction((2 * l + 1) * math.factorial(l - m), 2 * math.factorial(l + m))
    amp = (-1) ** m * math.sqrt(norm_sq) / math.sqrt(2.0 * math.pi)
    # sin(theta) keeps the (1 - x^2)^{m/2} factor accurate near the poles
    p = _assoc_legendre_pos(l, abs(m), math.cos(theta), math.sin(theta))
    if m < 0:
        p *= (-1) ** m * float(Fraction(math.factorial(l + m), math.factorial(l - m)))
    z = amp * p * cmath.exp(1j * m * phi)
    return ComplexValue.from_complex(z)


# ---------------------------------------------------------------------------
# Hermite and Laguerre families
# ---------------------------------------------------------------------------


def hermite_h(n: int, x: float) -> float:
    """Hermite polynomial H_n(x), weight e^{-x^2}.

    Parameters
    ----------
    n : int
        Degree, 0 <= n <= 60.
    x : float
        Argument.

    Returns
    -------
    float
    """
    n = _check_degree(n)
    x = float(x)
    if n <= MAX_EXACT_DEGREE:
        return hermite_coefficients(n)(x)
    h0, h1 = hermite_coefficients(MAX_EXACT_DEGREE - 1)(x), hermite_coefficients(MAX_EXACT_DEGREE)(x)
    for k in range(MAX_EXACT_DEGREE, n):
        h0, h1 = h1, 2.0 * x * h1 - 2.0 * k * h0
    return h1


def laguerre_l(n: int, x: float) -> float:
    """Laguerre polynomial L_n(x), weight e^{-x} on [0, inf).

    Parameters
    ----------
    n : int
        Degree, 0 <= n <= 60.
    x : float
        Argument.

    Returns
    -------
    float
    """
    n = _check_degree(n)
    x = float(x)
    if n <= MAX_EXACT_DEGREE:
        return laguerre_coefficients(n)(x)
    l0, l1 = laguerre_coefficients(MAX_EXACT_DEGREE - 1)(x), laguerre_coefficients(MAX_EXACT_DEGREE)(x)
    for k in range(MAX_EXACT_DEGREE, n):
        l0, l1 = l1, ((2 * k + 1 - x) * l1 - k * l0) / (k + 1)
    return l1


def assoc_laguerre(n: int, k: int, x: float) -> float:
    """Associated Laguerre polynomial L_n^k(x).

    Series sum (-1)^r (n+k)! / ((n-r)! (k+r)! r!) x^r.

    Parameters
    ----------
    n : int
        Degree, n >= 0.
    k : int
        Superscript, k >= 0, with n + k <= 60.
    x : float
        Argument.

    Returns
    -------
    float
    """
    n = _check_degree(n)
    k = _check_degree(k, "k")
    if n + k > MAX_DEGREE:
        raise IndexError(f"n + k must not exceed {MAX_DEGREE}")
    x = float(x)
    if n <= MAX_EXACT_DEGREE:
        return assoc_laguerre_coefficients(n, k)(x)
    l0 = assoc_laguerre_coefficients(MAX_EXACT_DEGREE - 1, k)(x)
    l1 = assoc_laguerre_coefficients(MAX_EXACT_DEGREE, k)(x)
    for j in range(MAX_EXACT_DEGREE, n):
        l0, l1 = l1, ((2 * j + k + 1 - x) * l1 - (j + k) * l0) / (j + 1)
    return l1


# ---------------------------------------------------------------------------
# Chebyshev family
# ---------------------------------------------------------------------------


def chebyshev_t(n: int, x: float) -> float:
    """Chebyshev polynomial T_n(x) = cos(n arccos x).

    Parameters
    ----------
    n : int
        Degree, 0 <= n <= 60.
    x : float
        Argument in [-1, 1].

    Returns
    -------
    float
    """
    n = _check_degree(n)
    x = _check_unit(x)
    if x == 1.0:
        return 1.0
    if x == -1.0:
        return float((-1) ** n)
    return math.cos(n * math.acos(x))


def chebyshev_u(n: int, x: float) -> float:
    """U_n(x) = sin(n arccos x).

    This is the convention where U_n vanishes at x = +-1 and U_0 = 0; it
    equals sqrt(1-x^2) times the second-kind polynomial of degree n-1.

    Parameters
    ----------
    n : int
        Index, 0 <= n <= 60.
    x : float
        Argument in [-1, 1].

    Returns
    -------
    float
    """
    n = _check_degree(n)
    x = _check_unit(x)
    if abs(x) == 1.0:
        return 0.0
    return math.sin(n * math.acos(x))


def chebyshev_t_series(n: int, x: float) -> float:
    """T_n(x) by sum (-1)^r n!/((2r)!(n-2r)!) (1-x^2)^r x^{n-2r}.

    The sum is carried out in exact rational arithmetic, so the alternating
    binomial terms do not cancel catastrophically at high degree.
    """
    n = _check_degree(n)
    x = _check_unit(x)
    q = Fraction(x)
    s = 1 - q * q
    return float(sum((-1) ** r * math.comb(n, 2 * r) * s**r * q ** (n - 2 * r) for r in range(n // 2 + 1)))


def chebyshev_u_series(n: int, x: float) -> float:
    """U_n(x) by sum (-1)^r n!/((2r+1)!(n-2r-1)!) (1-x^2)^{r+1/2} x^{n-2r-1}.

    The polynomial factor is summed exactly; only sqrt(1-x^2) is rounded.
    """
    n = _check_degree(n)
    x = _check_unit(x)
    q = Fraction(x)
    s = 1 - q * q
    poly = sum((-1) ** r * math.comb(n, 2 * r + 1) * s**r * q ** (n - 2 * r - 1) for r in range((n - 1) // 2 + 1))
    return float(poly) * math.sqrt(_one_minus_x2(x))


# ---------------------------------------------------------------------------
# series projections
# ---------------------------------------------------------------------------


def _integrate_interval(g, a, b, tol):
    try:
        return integrate_finite(g, a, b, tol).value
    except (SingularEndpoint, DepthExceeded):
        # integrable endpoint singularities (logarithms, inverse roots) are
        # smoothed by t = a + h w^2 at both ends
        return integrate_finite(g, a, b, tol, left_power=0.5, right_power=0.5).value


def legendre_series_fit(f: Callable[[float], float], degree: int, tol: ToleranceSpec | None = None) -> list[float]:
    """Coefficients c_r = (r + 1/2) times the integral of f P_r over [-1, 1].

    Parameters
    ----------
    f : callable
        Function integrable on [-1, 1]; integrable endpoint singularities
        are handled by a smoothing substitution.
    degree : int
        Highest index, at most 40.
    tol : ToleranceSpec, optional
        Quadrature policy.

    Returns
    -------
    list of float
        c_0, ..., c_degree.
    """
    if not 0 <= degree <= 40:
        raise IndexError("degree must lie in [0, 40]")
    tol = QUAD_TOL if tol is None else tol
    out = []
    for r in range(degree + 1):
        val = _integrate_interval(lambda x, r=r: f(x) * legendre_p(r, x), -1.0, 1.0, tol)
        out.append((r + 0.5) * val)
    return out


def hermite_series_fit(f: Callable[[float], float], degree: int, tol: ToleranceSpec | None = None) -> list[float]:
    """Coefficients c_n = 1/(2^n sqrt(pi) n!) times the integral of f H_n e^{-x^2}.

    The integral is cut to [-L, L] with L = 6 + sqrt(2 degree + 1), beyond
    which the Gaussian weight is below double precision relative to the
    bulk.

    Parameters
    ----------
    f : callable
        Function of at most polynomial growth.
    degree : int
        Highest index, at most 40.
    tol : ToleranceSpec, optional
        Quadrature policy.

    Returns
    -------
    list of float
    """
    if not 0 <= degree <= 40:
        raise IndexError("degree must lie in [0, 40]")
    tol = QUAD_TOL if tol is None else tol
    half = 6.0 + math.sqrt(2 * degree + 1)
    out = []
    for n in range(degree + 1):
        val = integrate_finite(lambda x, n=n: f(x) * hermite_h(n, x) * math.exp(-x * x), -half, half, tol).value
        out.append(val / (2.0**n * math.sqrt(math.pi) * math.factorial(n)))
    return out
