"""Identities for the exponential, logarithmic, sine and cosine integrals."""

from __future__ import annotations

import cmath
import math
from fractions import Fraction

from ..gamma import EULER_GAMMA
from ..integral_fns import aux_f, aux_g, ci, e1, ei, ein, li, si
from .core import case
from .tools import deriv, oscillatory_integral, quad, quad_inf

pi = math.pi
EXP, LOG, SIN, COS = math.exp, math.log, math.sin, math.cos
E1_POINTS = [1e-3, 0.1, 0.5, 1.0, 2.5, 5.0, 7.5, 10.0]
SICI_POINTS = [0.1, 0.5, 1.0, 2.0, 5.0, 10.0]
_CUT = Fraction(1, 10**30)


def _ein_exact(x: float) -> float:
    """sum_{n>=1} (-1)^{n+1} x^n / (n! n) in exact rationals."""
    q = Fraction(x)
    term = q  # (-1)^{n+1} x^n / n!
    total = Fraction(0)
    n = 1
    while True:
        piece = term / n
        total += piece
        if n > 4 and abs(piece) < _CUT:
            return float(total)
        n += 1
        term = -term * q / n


def _si_exact(x: float) -> float:
    """sum_n (-1)^n x^{2n+1} / ((2n+1) (2n+1)!) in exact rationals."""
    q = Fraction(x)
    term = q  # (-1)^n x^{2n+1} / (2n+1)!
    total = Fraction(0)
    n = 0
    while True:
        piece = term / (2 * n + 1)
        total += piece
        if n > 4 and abs(piece) < _CUT:
            return float(total)
        n += 1
        term = -term * q * q / ((2 * n) * (2 * n + 1))


def _ci_sum_exact(x: float) -> float:
    """sum_{n>=1} (-1)^n x^{2n} / (2n (2n)!) in exact rationals."""
    q = Fraction(x)
    term = Fraction(1)  # (-1)^n x^{2n} / (2n)!
    total = Fraction(0)
    n = 0
    while True:
        n += 1
        term = -term * q * q / ((2 * n - 1) * (2 * n))
        piece = term / (2 * n)
        total += piece
        if n > 4 and abs(piece) < _CUT:
            return float(total)


def _e1_complex_series(z: complex) -> complex:
    """E1(z) = -gamma - log z - sum_{n>=1} (-z)^n / (n n!) for complex z."""
    s = 0j
    term = 1 + 0j
    for n in range(1, 120):
        term *= -z / n
        s += term / n
    return -EULER_GAMMA - cmath.log(z) - s


def _ei_pv(x: float) -> float:
    """Principal-value integral of e^t / t over (-inf, x]."""
    tail = -quad_inf(lambda u: EXP(-u) / u, abs(x))
    if x < 0:
        return tail
    # pair t and -t across the origin: the 1/t singularities cancel
    return tail + quad(lambda t: 2.0 * math.sinh(t) / t, 0.0, x)


def _f_osc(x: float) -> float:
    return oscillatory_integral(lambda t: SIN(t) / (x + t), 0.0, pi, 40)


def _g_osc(x: float) -> float:
    return oscillatory_integral(lambda t: COS(t) / (x + t), 0.0, pi, 40)


def _ex5_lhs(x: float) -> float:
    """int_{-inf}^x e^t / (t^2 (1-t)) dt for x < 0, with t = x - u."""
    return quad_inf(lambda u: EXP(x - u) / ((x - u) ** 2 * (1 - x + u)))


def cases():
    q = "quadrature"
    s = "series-truncation"
    fd = "finite-difference"
    return [
        case("ch4.eq1.ei-integral", "Ei(x) = PV int_{-inf}^x e^t / t dt", _ei_pv, ei,
             [-3.0, -0.5, 0.2, 1.0, 3.0, 8.0], 1e-11, q),
        case("ch4.eq2.e1-integral", "E1(x) = int_x^inf e^{-t} / t dt", lambda x: quad_inf(lambda t: EXP(-t) / t, x),
             e1, [0.01, 0.5, 1.0, 4.0, 20.0], 1e-11, q, mode="rel"),
        case("ch4.eq2.e1-ei", "E1(x) = -Ei(-x) for x > 0", e1, lambda x: -ei(-x), [0.01, 0.5, 1.0, 4.0, 20.0], 1e-13,
             mode="rel"),
        case("ch4.eq21.ein-integral", "Ein(x) = int_0^x (1 - e^{-t}) / t dt",
             lambda x: quad(lambda t: -math.expm1(-t) / t, 0.0, x), ein, [0.5, 1.0, 5.0, 12.0], 1e-12, q),
        case("ch4.eq22.ein-series", "Ein(x) = sum_{n>=1} (-1)^{n+1} x^n / (n! n), exact rational sum",
             _ein_exact, ein, [-2.0, 0.5, 1.0, 5.0, 12.0], 1e-14, s),
        case("ch4.eq3.decomposition", "E1(x) = -gamma - ln x + Ein(x), Ein summed exactly, on (0, 10]",
             e1, lambda x: -EULER_GAMMA - LOG(x) + _ein_exact(x), E1_POINTS, 1e-12, s, "abs"),
        case("ch4.eq4.small-x", "E1(x) / (-ln x) -> 1 as x -> 0+; the gap is -gamma / ln x",
             lambda x: e1(x) / -LOG(x), lambda x: 1.0, [1e-100, 1e-200], 3e-3, s, "abs"),
        case("ch4.eq5.large-x", "E1(x) x e^x -> 1 as x -> inf; the gap is about -1/x",
             lambda x: e1(x) * x * EXP(x), lambda x: 1.0, [100.0, 200.0, 500.0], 1.1e-2, s, "abs"),
        case("ch4.eq6.li-integral", "Li(x) = int_0^x dt / ln t for 0 < x < 1",
             lambda x: quad(lambda t: 1.0 / LOG(t), 0.0, x), li, [0.2, 0.5, 0.8], 1e-10, q),
        case("ch4.eq6.li-e1", "Li(x) = -E1(-ln x) for 0 < x < 1", li, lambda x: -e1(-LOG(x)), [0.2, 0.5, 0.8],
             1e-13),
        case("ch4.eq6.li-e1.as-printed", "Li(x) = -E1(ln x) for 0 < x < 1 as printed, E1(-y) read as -Ei(y)",
             lambda x: quad(lambda t: 1.0 / LOG(t), 0.0, x), lambda x: ei(-LOG(x)), [0.2, 0.5, 0.8], 1e-10, q,
             xfail=True, notes="misprint: the argument of E1 is -ln x, which is positive on (0, 1)"),
        case("ch4.eq6.li-above-one", "Li(x) = Ei(ln x) = gamma + ln ln x + sum_n (ln x)^n / (n n!) for x > 1",
             li, lambda x: EULER_GAMMA + LOG(LOG(x)) - _ein_exact(-LOG(x)), [1.5, 3.0, 10.0, 100.0], 1e-12, s),
        case("ch4.eq7.si-integral", "Si(x) = int_0^x sin t / t dt", lambda x: quad(lambda t: SIN(t) / t, 0.0, x), si,
             SICI_POINTS, 1e-12, q),
        case("ch4.eq8.ci-integral", "Ci(x) = -int_x^inf cos t / t dt",
             lambda x: -oscillatory_integral(lambda t: COS(t) / t, x, pi, 40), ci, SICI_POINTS, 1e-9, q),
        case("ch4.sici.origin", "Si(0) = 0", lambda: si(0.0), lambda: 0.0, [()], 1e-300, mode="abs"),
        case("ch4.sici.si-limit", "Si(inf) = pi/2, by oscillatory quadrature of sin t / t",
             lambda: quad(lambda t: SIN(t) / t, 0.0, pi) + oscillatory_integral(lambda t: SIN(t) / t, pi, pi, 60),
             lambda: pi / 2, [()], 1e-9, q),
        case("ch4.sici.si-large", "Si(x) -> pi/2 as x -> inf", si, lambda x: pi / 2, [1e6, 1e8], 1e-5, s, "abs"),
        case("ch4.sici.ci-origin", "Ci(x) - ln x -> gamma as x -> 0+, so Ci(0) = -inf",
             lambda x: ci(x) - LOG(x), lambda x: EULER_GAMMA, [1e-8, 1e-100], 1e-12, s, "abs"),
        case("ch4.sici.ci-large", "Ci(x) -> 0 as x -> inf", ci, lambda x: 0.0, [1e6, 1e8], 1e-5, s, "abs"),
        case("ch4.sici.derivatives", "Si'(x) = sin x / x and Ci'(x) = cos x / x",
             lambda x: complex(deriv(si, x), deriv(ci, x)), lambda x: complex(SIN(x), COS(x)) / x,
             [0.5, 1.0, 3.0, 6.0], 1e-9, fd),
        case("ch4.eq9.si-series", "Si(x) = sum_n (-1)^n x^{2n+1} / ((2n+1)(2n+1)!), exact rational sum",
             _si_exact, si, SICI_POINTS, 1e-14, s),
        case("ch4.eq10.ci-series", "Ci(x) = gamma + ln x + sum_{n>=1} (-1)^n x^{2n} / (2n (2n)!), exact rational sum",
             ci, lambda x: EULER_GAMMA + LOG(x) + _ci_sum_exact(x), SICI_POINTS, 1e-13, s, "abs"),
        case("ch4.ex1a", "int_x^inf sin t / t dt = pi/2 - Si(x)",
             lambda x: oscillatory_integral(lambda t: SIN(t) / t, x, pi, 40), lambda x: pi / 2 - si(x),
             [0.5, 2.0, 5.0], 1e-9, q),
        case("ch4.ex1b", "int_eps^x cos t / t dt = Ci(x) - Ci(eps)",
             lambda eps, x: quad(lambda t: COS(t) / t, eps, x), lambda eps, x: ci(x) - ci(eps),
             [(1e-8, 0.5), (1e-8, 2.0), (1e-3, 5.0)], 1e-9, q),
        case("ch4.ex1b.as-printed", "int_0^x cos t / t dt = Ci(x) as printed, lower limit taken at 1e-8",
             lambda eps, x: quad(lambda t: COS(t) / t, eps, x), lambda eps, x: ci(x),
             [(1e-8, 0.5), (1e-8, 2.0), (1e-8, 5.0)], 1e-9, q, xfail=True,
             notes="misprint: the integral diverges at 0 since Ci(0) = -inf, not 0"),
        case("ch4.ex2a", "E1(ix) = -Ci(x) + i(Si(x) - pi/2), E1 summed as a complex series",
             lambda x: _e1_complex_series(1j * x), lambda x: complex(-ci(x), si(x) - pi / 2), [0.5, 1.0, 2.0, 5.0],
             1e-12, s),
        case("ch4.ex2b", "E1(ix) = int_0^inf cos(x+t)/(x+t) dt - i int_0^inf sin(x+t)/(x+t) dt",
             lambda x: _e1_complex_series(1j * x),
             lambda x: complex(oscillatory_integral(lambda t: COS(x + t) / (x + t), 0.0, pi, 40),
                               -oscillatory_integral(lambda t: SIN(x + t) / (x + t), 0.0, pi, 40)),
             [0.5, 1.0, 2.0, 5.0], 1e-9, q),
        case("ch4.ex2c", "Si(x) = -f(x) cos x - g(x) sin x + pi/2, f and g by oscillatory quadrature",
             si, lambda x: -_f_osc(x) * COS(x) - _g_osc(x) * SIN(x) + pi / 2, [0.5, 1.5, 3.5], 1e-9, q),
        case("ch4.ex2d", "Ci(x) = f(x) sin x - g(x) cos x, f and g by oscillatory quadrature",
             ci, lambda x: _f_osc(x) * SIN(x) - _g_osc(x) * COS(x), [0.5, 1.5, 3.5], 1e-9, q),
        case("ch4.ex2.aux-f", "f(x) = int_0^inf sin t / (x+t) dt", aux_f, _f_osc, [0.5, 1.5, 3.5, 8.0], 1e-9, q),
        case("ch4.ex2.aux-g", "g(x) = int_0^inf cos t / (x+t) dt", aux_g, _g_osc, [0.5, 1.5, 3.5, 8.0], 1e-9, q),
        case("ch4.ex3", "int_0^inf e^{-t} ln t dt = -gamma",
             lambda: quad(lambda t: EXP(-t) * LOG(t), 0.0, 1.0, left=0.5)
             + quad_inf(lambda t: EXP(-t) * LOG(t), 1.0), lambda: -EULER_GAMMA, [()], 1e-8, q),
        case("ch4.ex4", "int_0^1 (1 - e^{-t} - e^{-1/t}) / t dt = gamma",
             lambda: quad(lambda t: (-math.expm1(-t) - EXP(-1 / t)) / t, 0.0, 1.0), lambda: EULER_GAMMA, [()], 1e-8,
             q),
        case("ch4.ex5", "int_{-inf}^x e^t / (t^2 (1-t)) dt = 2 Ei(x) - e^x / x - e Ei(x-1) for x < 0",
             _ex5_lhs, lambda x: 2 * ei(x) - EXP(x) / x - math.e * ei(x - 1), [-0.5, -1.0, -2.0, -4.0], 1e-8, q),
        case("ch4.ex5.as-printed", "int_{-inf}^x e^t / (t^2 (1-t)) dt = e^x / x - 2 Ei(x) + e Ei(x-1) as printed",
             _ex5_lhs, lambda x: EXP(x) / x - 2 * ei(x) + math.e * ei(x - 1), [-0.5, -1.0, -2.0, -4.0], 1e-8, q,
             xfail=True, notes="misprint: the closed form has the opposite overall sign"),
    ]
