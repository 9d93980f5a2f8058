"""Shared numeric machinery.

Tolerance-driven series summation, adaptive Gauss-Kronrod quadrature on
finite and semi-infinite intervals, and polynomial extrapolation of limits.
Every other module builds on these few routines.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator, Sequence

from .errors import DepthExceeded, InsufficientSamples, NonConvergence, SingularEndpoint

__all__ = [
    "ToleranceSpec",
    "EvalResult",
    "ComplexValue",
    "DEFAULT_TOL",
    "FN_TOL",
    "QUAD_TOL",
    "exp_neg_square",
    "sum_series",
    "sum_ratio_series",
    "integrate_finite",
    "integrate_semi_infinite",
    "kronrod_rule",
    "richardson_limit",
    "averaged_partial_sums",
    "sinpi",
    "cospi",
]

_EPS = 2.220446049250313e-16


@dataclass(frozen=True)
class ToleranceSpec:
    """Numeric policy shared by series, quadrature and extrapolation.

    Parameters
    ----------
    target_rel_tol : float
        Relative tolerance, must be positive.
    target_abs_tol : float
        Absolute tolerance floor, must be positive.
    max_terms : int
        Term budget for series summation.
    max_quad_depth : int
        Largest bisection depth allowed in adaptive quadrature.
    """

    target_rel_tol: float = 1e-12
    target_abs_tol: float = 1e-14
    max_terms: int = 500
    max_quad_depth: int = 30

    def __post_init__(self):
        if not self.target_rel_tol > 0:
            raise ValueError("target_rel_tol must be > 0")
        if not self.target_abs_tol > 0:
            raise ValueError("target_abs_tol must be > 0")
        if self.max_terms < 1:
            raise ValueError("max_terms must be >= 1")
        if self.max_quad_depth < 1:
            raise ValueError("max_quad_depth must be >= 1")

    def bound(self, value) -> float:
        """Mixed absolute/relative error allowance around ``value``."""
        return max(self.target_abs_tol, abs(value) * self.target_rel_tol)

    def replace(self, **changes) -> "ToleranceSpec":
        """Return a copy with some fields changed."""
        fields = dict(
            target_rel_tol=self.target_rel_tol,
            target_abs_tol=self.target_abs_tol,
            max_terms=self.max_terms,
            max_quad_depth=self.max_quad_depth,
        )
        fields.update(changes)
        return ToleranceSpec(**fields)


DEFAULT_TOL = ToleranceSpec()

# policy used by the function modules when the caller supplies none: series
# run to rounding level, quadrature to a few units above it
FN_TOL = ToleranceSpec(target_rel_tol=1e-16, target_abs_tol=1e-300, max_terms=2000, max_quad_depth=40)
QUAD_TOL = ToleranceSpec(target_rel_tol=1e-14, target_abs_tol=1e-300, max_terms=2000, max_quad_depth=40)


@dataclass(frozen=True)
class EvalResult:
    """A computed value with convergence metadata.

    Parameters
    ----------
    value : float or complex
        The estimate.
    terms_used : int
        Series terms or integrand evaluations consumed.
    converged : bool
        Whether the tolerance was met.
    err_estimate : float
        Absolute error estimate.
    """

    value: float
    terms_used: int
    converged: bool
    err_estimate: float

    def __float__(self):
        return float(self.value)

    def __complex__(self):
        return complex(self.value)


@dataclass(frozen=True)
class ComplexValue:
    """Real and imaginary parts of a complex result."""

    re: float
    im: float

    @classmethod
    def from_complex(cls, z) -> "ComplexValue":
        z = complex(z)
        return cls(z.real, z.imag)

    def __complex__(self):
        return complex(self.re, self.im)

    def __abs__(self):
        return math.hypot(self.re, self.im)

    def conjugate(self) -> "ComplexValue":
        return ComplexValue(self.re, -self.im)

    def __add__(self, other):
        return ComplexValue.from_complex(complex(self) + complex(other))

    def __sub__(self, other):
        return ComplexValue.from_complex(complex(self) - complex(other))

    def __mul__(self, other):
        return ComplexValue.from_complex(complex(self) * complex(other))

    __rmul__ = __mul__

    def __neg__(self):
        return ComplexValue(-self.re, -self.im)


def _tol(tol):
    return DEFAULT_TOL if tol is None else tol


# ---------------------------------------------------------------------------
# series summation
# ---------------------------------------------------------------------------


def _sum_terms(terms: Iterator, tol: ToleranceSpec) -> EvalResult:
    """Sum an iterator of terms under the two-small-terms stopping rule.

    The error estimate is the first omitted term, inflated by the geometric
    tail factor 1/(1-q) when the last terms share a sign and shrink by a
    ratio q < 1, so that it also bounds the remainder of positive series.
    """
    total = 0
    small_run = 0
    prev = None
    used = 0
    for t in terms:
        if small_run >= 2:
            err = _tail_estimate(prev, t)
            if err <= tol.bound(total):
                return EvalResult(total, used, True, err)
            small_run = 0
        if used >= tol.max_terms:
            break
        if not _finite(t):
            raise NonConvergence(
                f"non-finite series term at index {used}",
                EvalResult(total, used, False, math.inf),
            )
        total += t
        used += 1
        if abs(t) <= tol.bound(total):
            small_run += 1
        else:
            small_run = 0
        prev = t
    else:
        # iterator exhausted: a finite sum, exact up to rounding
        return EvalResult(total, used, True, 0.0)
    partial = EvalResult(total, used, False, abs(prev) if prev is not None else math.inf)
    raise NonConvergence(f"series did not converge within {tol.max_terms} terms", partial)


def _finite(t) -> bool:
    if isinstance(t, complex):
        return math.isfinite(t.real) and math.isfinite(t.imag)
    return math.isfinite(t)


def _tail_estimate(prev, nxt) -> float:
    a = abs(nxt)
    if prev is None or prev == 0 or a == 0:
        return a
    if isinstance(prev, complex) or isinstance(nxt, complex):
        return a
    if (prev > 0) == (nxt > 0):
        q = a / abs(prev)
        if q < 1.0:
            return a / (1.0 - q)
    return a


def sum_series(term: Callable[[int], float], tol: ToleranceSpec | None = None, start: int = 0) -> EvalResult:
    """Sum ``term(r)`` for r = start, start+1, ... until convergence.

    Parameters
    ----------
    term : callable
        Rule giving the r-th additive term. Complex terms are accepted.
    tol : ToleranceSpec, optional
        Numeric policy; defaults to ``DEFAULT_TOL``.
    start : int
        First index.

    Returns
    -------
    EvalResult
        Converged once two successive terms are both below the mixed
        tolerance of the running sum.

    Raises
    ------
    NonConvergence
        When ``max_terms`` terms did not meet the tolerance. The exception
        carries the partial result in ``.partial``.
    """
    tol = _tol(tol)

    def gen():
        r = start
        while True:
            yield term(r)
            r += 1

    return _sum_terms(gen(), tol)


def sum_ratio_series(first, ratio: Callable[[int], float], tol: ToleranceSpec | None = None) -> EvalResult:
    """Sum a series given its first term and successive term ratios.

    Term r+1 equals term r times ``ratio(r)``. A zero ratio terminates the
    series, which is then summed exactly.

    Parameters
    ----------
    first : float or complex
        Term of index 0.
    ratio : callable
        ``ratio(r)`` returns t_{r+1} / t_r.
    tol : ToleranceSpec, optional
        Numeric policy.

    Returns
    -------
    EvalResult
    """
    tol = _tol(tol)

    def gen():
        t = first
        r = 0
        yield t
        while True:
            q = ratio(r)
            if q == 0:
                return
            t = t * q
            r += 1
            yield t

    return _sum_terms(gen(), tol)


def averaged_partial_sums(partials: Sequence[float]) -> float:
    """Accelerate an alternating sequence of partial sums.

    Repeatedly replaces the sequence by the means of neighbouring entries
    (the averaging form of the Euler transform) and returns the last
    surviving entry.

    Parameters
    ----------
    partials : sequence of float
        Partial sums S_0, S_1, ... of an alternating series.

    Returns
    -------
    float
    """
    s = list(partials)
    if not s:
        raise InsufficientSamples("no partial sums given")
    while len(s) > 1:
        s = [(s[i] + s[i + 1]) / 2.0 for i in range(len(s) - 1)]
    return s[0]


# ---------------------------------------------------------------------------
# adaptive quadrature
# ---------------------------------------------------------------------------

# Kronrod 15-point abscissae (symmetric), Gauss 7-point nodes are the odd ones.
_XK = (
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
)
_WK = (
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
)
_WG = (
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
)


def _gk15(f, a, b):
    """Apply the G7/K15 pair on [a, b]; return (kronrod, error, abs integral, evals)."""
    c = 0.5 * (a + b)
    h = 0.5 * (b - a)
    fc = f(c)
    resk = fc * _WK[7]
    resg = fc * _WG[3]
    resabs = abs(resk)
    fv1 = [0.0] * 7
    fv2 = [0.0] * 7
    for j in range(7):
        dx = h * _XK[j]
        f1 = f(c - dx)
        f2 = f(c + dx)
        fv1[j] = f1
        fv2[j] = f2
        resk += _WK[j] * (f1 + f2)
        resabs += _WK[j] * (abs(f1) + abs(f2))
        if j % 2 == 1:
            resg += _WG[j // 2] * (f1 + f2)
    reskh = resk * 0.5
    resasc = _WK[7] * abs(fc - reskh)
    for j in range(7):
        resasc += _WK[j] * (abs(fv1[j] - reskh) + abs(fv2[j] - reskh))
    result = resk * h
    resabs *= abs(h)
    resasc *= abs(h)
    diff = abs((resk - resg) * h)
    # embedded-rule difference, rescaled the QUADPACK way for smooth integrands
    if resasc != 0.0 and diff != 0.0:
        err = resasc * min(1.0, (200.0 * diff / resasc) ** 1.5)
    else:
        err = diff
    if resabs > 0.0:
        err = max(err, 50.0 * _EPS * resabs)
    if not math.isfinite(result) or not math.isfinite(err):
        err = math.inf
    return result, err, resabs, 15


def kronrod_rule(a: float, b: float, pieces: int = 1) -> tuple[list[float], list[float]]:
    """Nodes and weights of the composite 15-point Kronrod rule on [a, b].

    Useful when many integrands share one fixed grid, so their values can
    be tabulated once and reused.

    Parameters
    ----------
    a, b : float
        Interval.
    pieces : int
        Number of equal panels, at least 1.

    Returns
    -------
    nodes, weights : list of float
    """
    if pieces < 1:
        raise ValueError("pieces must be >= 1")
    nodes: list[float] = []
    weights: list[float] = []
    step = (b - a) / pieces
    for k in range(pieces):
        c = a + (k + 0.5) * step
        h = 0.5 * step
        for j in range(7):
            nodes += [c - h * _XK[j], c + h * _XK[j]]
            weights += [h * _WK[j], h * _WK[j]]
        nodes.append(c)
        weights.append(h * _WK[7])
    return nodes, weights


def _adaptive(f, a, b, tol: ToleranceSpec):
    """Global adaptive G7/K15 integration of f over [a, b]."""
    val, err, rabs, n = _gk15(f, a, b)
    heap = [(-err, a, b, 0, val, rabs)]
    total, total_err, total_abs = val, err, rabs
    evals = n
    splits = 0
    max_splits = 50 * tol.max_quad_depth + 2000
    while True:
        if math.isfinite(total) and total_err <= max(tol.bound(total), 100.0 * _EPS * total_abs):
            return EvalResult(total, evals, True, total_err)
        neg_err, lo, hi, depth, v, ra = heapq.heappop(heap)
        if depth >= tol.max_quad_depth or splits >= max_splits:
            heapq.heappush(heap, (neg_err, lo, hi, depth, v, ra))
            raise DepthExceeded(
                f"adaptive quadrature exceeded depth {tol.max_quad_depth} near [{lo!r}, {hi!r}]",
                EvalResult(total, evals, False, total_err),
            )
        mid = 0.5 * (lo + hi)
        v1, e1, r1, _ = _gk15(f, lo, mid)
        v2, e2, r2, _ = _gk15(f, mid, hi)
        evals += 30
        splits += 1
        heapq.heappush(heap, (-e1, lo, mid, depth + 1, v1, r1))
        heapq.heappush(heap, (-e2, mid, hi, depth + 1, v2, r2))
        # recompute sums from the heap to avoid drift from repeated updates
        total = math.fsum(item[4] for item in heap)
        total_err = math.fsum(-item[0] for item in heap)
        total_abs = math.fsum(item[5] for item in heap)


def _endpoint_finite(f, t) -> bool:
    try:
        v = f(t)
    except (ZeroDivisionError, ValueError, OverflowError):
        return False
    return _finite(v)


def _resolvable(end: float, h: float, s: float) -> float:
    """Smallest mapped variable w whose node stays distinct from ``end``.

    Below it the mapped integrand is close to its limiting behaviour, so
    the value at this w is reused instead of evaluating at a rounded node.
    """
    delta = 8.0 * _EPS * abs(end)
    if delta == 0.0:
        return 0.0
    return (delta / h) ** s


def _power_map_left(f, a, b, s):
    """Integrand in w on [0, 1] after t = a + (b - a) * w**(1/s)."""
    h = b - a
    inv = 1.0 / s
    w_min = _resolvable(a, h, s)

    def g(w):
        if w <= 0.0:
            return 0.0
        # nodes closer to a than the double spacing reuse the nearest resolvable one
        w = max(w, w_min)
        wp = w ** inv
        t = a + h * wp
        if t == a:
            # underflow at a = 0; the node's weight is negligible
            return 0.0
        return f(t) * h * inv * wp / w

    return g


def _power_map_right(f, a, b, s):
    """Integrand in w on [0, 1] after t = b - (b - a) * w**(1/s)."""
    h = b - a
    inv = 1.0 / s
    w_min = _resolvable(b, h, s)

    def g(w):
        if w <= 0.0:
            return 0.0
        w = max(w, w_min)
        wp = w ** inv
        t = b - h * wp
        if t == b:
            return 0.0
        return f(t) * h * inv * wp / w

    return g


def integrate_finite(
    f: Callable[[float], float],
    a: float,
    b: float,
    tol: ToleranceSpec | None = None,
    *,
    left_power: float | None = None,
    right_power: float | None = None,
) -> EvalResult:
    """Integrate ``f`` over [a, b] by global adaptive Gauss-Kronrod.

    Parameters
    ----------
    f : callable
        Real integrand. It is never evaluated exactly at an endpoint when a
        substitution is active.
    a, b : float
        Interval, a < b.
    tol : ToleranceSpec, optional
        Numeric policy; ``max_quad_depth`` bounds bisection depth.
    left_power, right_power : float, optional
        If the integrand behaves like (t - a)**(s - 1) near a (or
        (b - t)**(s - 1) near b), pass s > 0. For s < 1 the substitution
        t = a + (b - a) * w**(1/s) removes the singularity; for s >= 1 the
        integrand is bounded and a linear map keeps smooth factors smooth.

    Notes
    -----
    An integrand that forms ``b - t`` itself carries a relative error of
    about eps * |b| / (b - t) near a nonzero endpoint. The adaptive scheme
    cannot refine past that noise, so a singular endpoint is best moved to
    zero by reflection before integrating.

    Returns
    -------
    EvalResult
        ``err_estimate`` is the summed local error model of the G7/K15 pair.

    Raises
    ------
    DepthExceeded
        When an interval at maximum depth still needs refinement.
    SingularEndpoint
        When an endpoint sample is not finite, no substitution was supplied
        and the adaptive scheme could not resolve the integral.
    """
    tol = _tol(tol)
    if not a < b:
        if a == b:
            return EvalResult(0.0, 0, True, 0.0)
        raise ValueError("integrate_finite requires a < b")
    if left_power is not None and right_power is not None:
        m = 0.5 * (a + b)
        r1 = integrate_finite(f, a, m, tol, left_power=left_power)
        r2 = integrate_finite(f, m, b, tol, right_power=right_power)
        return EvalResult(
            r1.value + r2.value,
            r1.terms_used + r2.terms_used,
            r1.converged and r2.converged,
            r1.err_estimate + r2.err_estimate,
        )
    if left_power is not None:
        if not left_power > 0:
            raise ValueError("left_power must be > 0")
        return _adaptive(_power_map_left(f, a, b, min(left_power, 1.0)), 0.0, 1.0, tol)
    if right_power is not None:
        if not right_power > 0:
            raise ValueError("right_power must be > 0")
        return _adaptive(_power_map_right(f, a, b, min(right_power, 1.0)), 0.0, 1.0, tol)
    try:
        return _adaptive(f, a, b, tol)
    except DepthExceeded as exc:
        if not (_endpoint_finite(f, a) and _endpoint_finite(f, b)):
            raise SingularEndpoint(
                "integrand is not finite at an endpoint; supply left_power/right_power"
            ) from exc
        raise


def integrate_semi_infinite(
    f: Callable[[float], float],
    a: float,
    tol: ToleranceSpec | None = None,
    *,
    left_power: float | None = None,
) -> EvalResult:
    """Integrate ``f`` over [a, inf).

    The substitution t = a + u/(1 - u) maps the half line onto [0, 1),
    after which ``integrate_finite`` does the work. The transformed
    integrand is taken to vanish at u = 1.

    Parameters
    ----------
    f : callable
        Integrand decaying at infinity.
    a : float
        Lower limit.
    tol : ToleranceSpec, optional
        Numeric policy.
    left_power : float, optional
        Endpoint exponent at t = a, as in ``integrate_finite``.

    Returns
    -------
    EvalResult
    """

    def g(u):
        if u >= 1.0:
            return 0.0
        v = 1.0 - u
        t = a + u / v
        if math.isinf(t):
            return 0.0
        y = f(t)
        if y == 0.0:
            return 0.0
        return y / (v * v)

    return integrate_finite(g, 0.0, 1.0, tol, left_power=left_power)


# ---------------------------------------------------------------------------
# extrapolation
# ---------------------------------------------------------------------------


def richardson_limit(samples: Iterable[tuple[float, float]], power: int = 1) -> float:
    """Extrapolate sampled values to h = 0.

    Fits the interpolating polynomial in h**power through all samples and
    evaluates it at zero (Neville's scheme). Use ``power=2`` when the
    sampled quantity is even in h.

    Parameters
    ----------
    samples : iterable of (h, value)
        At least two pairs with strictly decreasing positive h.
    power : int
        Exponent of h used as the interpolation variable.

    Returns
    -------
    float

    Raises
    ------
    InsufficientSamples
        Fewer than two samples, or h not strictly decreasing and positive.
    """
    pts = list(samples)
    if len(pts) < 2:
        raise InsufficientSamples("richardson_limit needs at least two samples")
    hs = [float(h) for h, _ in pts]
    for i, h in enumerate(hs):
        if not h > 0 or (i > 0 and not h < hs[i - 1]):
            raise InsufficientSamples("step sizes must be positive and strictly decreasing")
    if power < 1:
        raise ValueError("power must be >= 1")
    hs = [h**power for h in hs]
    p = [v for _, v in pts]
    n = len(p)
    for k in range(1, n):
        for i in range(n - k):
            # value at 0 of the polynomial through points i..i+k
            p[i] = (hs[i] * p[i + 1] - hs[i + k] * p[i]) / (hs[i] - hs[i + k])
    return p[0]


# ---------------------------------------------------------------------------
# trigonometric helpers
# ---------------------------------------------------------------------------


def sinpi(x: float) -> float:
    """sin(pi x), exactly zero at integers."""
    r = math.fmod(x, 2.0)
    if r == math.floor(r):
        return 0.0
    if r > 1.0:
        r -= 2.0
    elif r < -1.0:
        r += 2.0
    # fold into [-1/2, 1/2] to keep the argument small
    if r > 0.5:
        r = 1.0 - r
    elif r < -0.5:
        r = -1.0 - r
    return math.sin(math.pi * r)


def cospi(x: float) -> float:
    """cos(pi x), exactly zero at half-integers."""
    return sinpi(x + 0.5) if abs(x) < 2**52 else 1.0


def exp_neg_square(x: float) -> float:
    """e^{-x^2} without the rounding error of forming x*x.

    x is split into a 26-bit head and a tail so that the head squared is
    exact and the remainder (x - h)(x + h) is small and accurate.
    """
    ax = abs(x)
    if ax == 0.0 or not math.isfinite(ax):
        return math.exp(-ax * ax)
    m, e = math.frexp(ax)
    h = math.ldexp(math.floor(math.ldexp(m, 26)), e - 26)
    return math.exp(-h * h) * math.exp(-(ax - h) * (ax + h))
