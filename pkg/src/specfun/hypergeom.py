"""Hypergeometric series.

Pochhammer symbols, the Gauss function 2F1, the confluent function 1F1, the
generalized pFq, and evaluation of other families through their
hypergeometric representations.
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction
from typing import Sequence

from .errors import DivergenceError, DomainError, PoleError
from .gamma import gamma, gamma_sign, lgamma
from .numkernel import FN_TOL, EvalResult, ToleranceSpec, sum_ratio_series

__all__ = [
    "pochhammer",
    "gauss_2f1",
    "gauss_sum_at_1",
    "kummer_1f1",
    "pfq",
    "reduce_to_family",
    "FAMILIES",
]

_PRODUCT_LIMIT = 50
_EXACT_TERM_LIMIT = 400


def _nonpositive_int(a: float) -> int | None:
    """Return N when a == -N for an integer N >= 0, else None."""
    if a <= 0 and a == math.floor(a):
        return int(-a)
    return None


def pochhammer(alpha: float, r: int) -> float:
    """Rising factorial (alpha)_r = alpha (alpha+1) ... (alpha+r-1).

    Parameters
    ----------
    alpha : float
        Base.
    r : int
        Number of factors, r >= 0.

    Returns
    -------
    float
        Product form for r <= 50, otherwise Gamma(alpha+r)/Gamma(alpha)
        through log-gamma. Exactly zero when alpha is a non-positive integer
        with |alpha| < r.
    """
    if int(r) != r or r < 0:
        raise ValueError("r must be a non-negative integer")
    r = int(r)
    alpha = float(alpha)
    n = _nonpositive_int(alpha)
    if n is not None and n < r:
        return 0.0
    if r <= _PRODUCT_LIMIT or n is not None:
        out = 1.0
        for k in range(r):
            out *= alpha + k
        return out
    if alpha + r <= 0 or alpha <= 0:
        # negative non-integer base: sign from the Gamma ratio
        sign = gamma_sign(alpha + r) * gamma_sign(alpha)
    else:
        sign = 1.0
    return sign * math.exp(lgamma(alpha + r) - lgamma(alpha))


def _termination(upper: Sequence[float], lower: Sequence[float]) -> int | None:
    """Index of the last term when the series terminates, else None.

    An upper parameter -N ends the series after the term of index N. A lower
    parameter -M with no upper parameter ending the series first is a pole;
    when both exist the smaller integer wins.
    """
    n_up = [n for n in map(_nonpositive_int, upper) if n is not None]
    n_low = [m for m in map(_nonpositive_int, lower) if m is not None]
    stop = min(n_up) if n_up else None
    if n_low:
        m = min(n_low)
        if stop is None:
            raise PoleError(f"domain: lower parameter {-m} is a non-positive integer")
        stop = min(stop, m)
    return stop


def _exact_sum(upper, lower, x, stop) -> float:
    """Finite series summed in rational arithmetic, rounded once."""
    up = [Fraction(a) for a in upper]
    lo = [Fraction(b) for b in lower]
    z = Fraction(x)
    term = Fraction(1)
    total = Fraction(1)
    for r in range(stop):
        num = Fraction(1)
        for a in up:
            num *= a + r
        den = Fraction(r + 1)
        for b in lo:
            den *= b + r
        term = term * num / den * z
        total += term
    return float(total)


def _ratio(upper, lower, x):
    def q(r):
        num = x
        for a in upper:
            num *= a + r
        den = r + 1.0
        for b in lower:
            den *= b + r
        return num / den

    return q


def pfq(upper: Sequence[float], lower: Sequence[float], x: float, tol: ToleranceSpec | None = None) -> EvalResult:
    """Generalized hypergeometric series with m upper and n lower parameters.

    Sum over r of prod (alpha_i)_r / prod (beta_j)_r x^r / r!.

    Parameters
    ----------
    upper, lower : sequence of float
        Parameters alpha_1..alpha_m and beta_1..beta_n.
    x : float
        Argument.
    tol : ToleranceSpec, optional
        Summation policy.

    Returns
    -------
    EvalResult

    Raises
    ------
    DivergenceError
        When m = n + 1 and |x| >= 1, or m > n + 1 and x != 0, unless the
        series terminates.
    PoleError
        When a lower parameter is a non-positive integer not preceded by a
        terminating upper parameter.
    NonConvergence
        When the term budget runs out; ``partial`` carries the partial sum
        with ``converged`` false.
    """
    # canonical parameter order makes the value exactly symmetric in them
    upper = sorted(float(a) for a in upper)
    lower = sorted(float(b) for b in lower)
    x = float(x)
    tol = FN_TOL if tol is None else tol
    stop = _termination(upper, lower)
    if stop is not None:
        if stop <= _EXACT_TERM_LIMIT and math.isfinite(x) and all(map(math.isfinite, upper + lower)):
            return EvalResult(_exact_sum(upper, lower, x, stop), stop + 1, True, 0.0)
        base = _ratio(upper, lower, x)
        return sum_ratio_series(1.0, lambda r: base(r) if r < stop else 0.0, tol)
    m, n = len(upper), len(lower)
    if x == 0.0:
        return EvalResult(1.0, 1, True, 0.0)
    if m > n + 1:
        raise DivergenceError(f"{m}F{n} diverges for every x != 0 unless it terminates")
    if m == n + 1 and abs(x) >= 1.0:
        raise DivergenceError(f"{m}F{n} diverges for |x| >= 1 unless it terminates")
    return sum_ratio_series(1.0, _ratio(upper, lower, x), tol)


def gauss_sum_at_1(alpha: float, beta: float, gamma_: float) -> float:
    """Value of 2F1(alpha, beta; gamma; 1).

    Gamma(gamma) Gamma(gamma-alpha-beta) / (Gamma(gamma-alpha) Gamma(gamma-beta))
    when gamma > alpha + beta. A terminating series (alpha or beta = -N) is
    finite for any gamma and equals (gamma-beta)_N / (gamma)_N.

    Parameters
    ----------
    alpha, beta, gamma_ : float
        Parameters.

    Returns
    -------
    float

    Raises
    ------
    DomainError
        When gamma <= alpha + beta and the series does not terminate.
    PoleError
        When gamma is a non-positive integer.
    """
    alpha, beta = sorted((float(alpha), float(beta)))
    gamma_ = float(gamma_)
    stop = _termination([alpha, beta], [gamma_])
    if stop is not None:
        return _exact_sum([alpha, beta], [gamma_], 1.0, stop)
    s = gamma_ - alpha - beta
    if not s > 0:
        raise DomainError("domain: the series at x = 1 requires gamma > alpha + beta")
    args_num = (gamma_, s)
    args_den = (gamma_ - alpha, gamma_ - beta)
    if any(_nonpositive_int(a) is not None for a in args_den):
        return 0.0
    if all(abs(a) < 170 for a in args_num + args_den):
        return gamma(gamma_) * gamma(s) / (gamma(gamma_ - alpha) * gamma(gamma_ - beta))
    sign = 1.0
    for a in args_num + args_den:
        sign *= gamma_sign(a)
    log = lgamma(gamma_) + lgamma(s) - lgamma(gamma_ - alpha) - lgamma(gamma_ - beta)
    return sign * math.exp(log)


def gauss_2f1(
    alpha: float, beta: float, gamma_: float, x: float, tol: ToleranceSpec | None = None
) -> EvalResult:
    """Gauss hypergeometric function 2F1(alpha, beta; gamma; x).

    Parameters
    ----------
    alpha, beta, gamma_ : float
        Parameters.
    x : float
        Argument with |x| < 1; x = 1 is accepted when gamma > alpha + beta,
        and any x when the series terminates.
    tol : ToleranceSpec, optional
        Summation policy.

    Returns
    -------
    EvalResult
    """
    x = float(x)
    if x == 1.0 and _termination([alpha, beta], [gamma_]) is None:
        return EvalResult(gauss_sum_at_1(alpha, beta, gamma_), 0, True, 0.0)
    return pfq([alpha, beta], [gamma_], x, tol)


def kummer_1f1(alpha: float, beta: float, x: float, tol: ToleranceSpec | None = None) -> EvalResult:
    """Confluent hypergeometric function 1F1(alpha; beta; x).

    The series converges for every real x.

    Parameters
    ----------
    alpha, beta : float
        Parameters.
    x : float
        Argument.
    tol : ToleranceSpec, optional
        Summation policy.

    Returns
    -------
    EvalResult
    """
    return pfq([alpha], [beta], x, tol)


def _kummer_complex(alpha: float, beta: float, z: complex, tol: ToleranceSpec) -> complex:
    """1F1 at a complex argument, by direct summation."""

    def q(r):
        return z * (alpha + r) / ((beta + r) * (r + 1.0))

    return complex(sum_ratio_series(1.0 + 0.0j, q, tol).value)


# ---------------------------------------------------------------------------
# other families through hypergeometric representations
# ---------------------------------------------------------------------------


def _v(res: EvalResult) -> float:
    return float(res.value)


def _legendre(idx, x, tol):
    (n,) = idx
    return _v(gauss_2f1(-n, n + 1, 1, 0.5 * (1 - x), tol))


def _chebyshev_t(idx, x, tol):
    (n,) = idx
    return _v(gauss_2f1(-n, n, 0.5, 0.5 * (1 - x), tol))


def _chebyshev_u(idx, x, tol):
    (n,) = idx
    # sin(n arccos x) convention: U_0 = 0
    if n == 0:
        return 0.0
    return math.sqrt((1 - x) * (1 + x)) * n * _v(gauss_2f1(1 - n, n + 1, 1.5, 0.5 * (1 - x), tol))


def _assoc_legendre(idx, x, tol):
    n, m = idx
    if not 0 <= m <= n:
        raise IndexError("order m must satisfy 0 <= m <= n")
    pref = math.factorial(n + m) / math.factorial(n - m) / (2**m * math.factorial(m))
    return pref * ((1 - x) * (1 + x)) ** (0.5 * m) * _v(gauss_2f1(m - n, m + n + 1, m + 1, 0.5 * (1 - x), tol))


def _hermite(idx, x, tol):
    (n,) = idx
    h, odd = divmod(n, 2)
    if odd:
        pref = (-1) ** h * 2 * math.factorial(2 * h + 1) / math.factorial(h)
        return pref * x * _v(kummer_1f1(-h, 1.5, x * x, tol))
    pref = (-1) ** h * math.factorial(2 * h) / math.factorial(h)
    return pref * _v(kummer_1f1(-h, 0.5, x * x, tol))


def _laguerre(idx, x, tol):
    (n,) = idx
    return _v(kummer_1f1(-n, 1, x, tol))


def _assoc_laguerre(idx, x, tol):
    n, k = idx
    pref = math.exp(lgamma(n + k + 1) - lgamma(n + 1) - lgamma(k + 1))
    return pref * _v(kummer_1f1(-n, k + 1, x, tol))


def _bessel_j(idx, x, tol):
    (n,) = idx
    if n < 0:
        raise IndexError("order must be >= 0")
    if x == 0.0:
        return 1.0 if n == 0 else 0.0
    f = _kummer_complex(n + 0.5, 2 * n + 1, 2j * x, tol)
    z = (0.5 * x) ** n / gamma(n + 1) * cmath.exp(-1j * x) * f
    return z.real


FAMILIES = {
    "legendre": _legendre,
    "chebyshev_t": _chebyshev_t,
    "chebyshev_u": _chebyshev_u,
    "assoc_legendre": _assoc_legendre,
    "hermite": _hermite,
    "laguerre": _laguerre,
    "assoc_laguerre": _assoc_laguerre,
    "bessel_j": _bessel_j,
}


def reduce_to_family(family_id: str, indices: Sequence, x: float, tol: ToleranceSpec | None = None) -> float:
    """Evaluate a special function through its hypergeometric form.

    Parameters
    ----------
    family_id : str
        One of ``FAMILIES``: legendre (n), chebyshev_t (n), chebyshev_u (n),
        assoc_legendre (n, m), hermite (n), laguerre (n),
        assoc_laguerre (n, k), bessel_j (n).
    indices : sequence
        Family indices as listed.
    x : float
        Argument.
    tol : ToleranceSpec, optional
        Summation policy.

    Returns
    -------
    float
        For bessel_j, the real part of
        (x/2)^n / Gamma(n+1) e^{-ix} 1F1(n + 1/2; 2n + 1; 2ix), whose
        imaginary part vanishes.
    """
    try:
        fn = FAMILIES[family_id]
    except KeyError:
        raise KeyError(f"unknown family {family_id!r}; choose from {sorted(FAMILIES)}") from None
    tol = FN_TOL if tol is None else tol
    return fn(tuple(indices), float(x), tol)
