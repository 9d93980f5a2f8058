"""Identities for the gamma, incomplete gamma, digamma and beta functions."""

from __future__ import annotations

import math

from ..gamma import (
    EULER_GAMMA,
    beta,
    digamma,
    gamma,
    gamma_euler_limit,
    gamma_weierstrass,
    incomplete_gamma_lower,
    incomplete_gamma_upper,
    lgamma,
    polygamma,
    stirling,
)
from .core import case
from .tools import deriv, quad, quad_inf, richardson_in

SQRT_PI = math.sqrt(math.pi)
EXP, LOG, SIN, COS, TAN = math.exp, math.log, math.sin, math.cos, math.tan


def _sine_doubling(n, theta):
    m = 2**n
    p = 1.0
    for k in range(m):
        p *= SIN((theta + k * math.pi) / m)
    return 2.0 ** (m - 1) * p


def _sine_paired(n, theta):
    m = 2**n
    p = SIN(theta / m)
    for k in range(1, m // 2):
        p *= SIN((k * math.pi + theta) / m) * SIN((k * math.pi - theta) / m)
    return 2.0 ** (m - 1) * p * SIN((m // 2 * math.pi + theta) / m)


def _sine_squares(n, theta):
    m = 2**n
    s2 = SIN(theta / m) ** 2
    p = SIN(theta / m) * COS(theta / m)
    for k in range(1, m // 2):
        p *= SIN(k * math.pi / m) ** 2 - s2
    return 2.0 ** (m - 1) * p


def _sine_constant(n):
    m = 2**n
    p = 1.0
    for k in range(1, m // 2):
        p *= SIN(k * math.pi / m) ** 2
    return 2.0 ** (m - 1) * p


def _sine_product(x, n):
    p = x
    for k in range(1, n + 1):
        p *= 1.0 - (x / k) ** 2
    return p


def _double_integral(x, y):
    # quarter-plane integral in polar coordinates, inner radial integral by quadrature
    def radial(th):
        c, s = COS(th), SIN(th)
        ang = c ** (2 * x - 1) * s ** (2 * y - 1)
        return ang * quad_inf(lambda r: EXP(-r * r) * r ** (2 * x + 2 * y - 1), 0.0)

    return quad(radial, 0.0, 0.5 * math.pi, left=2 * y, right=2 * x)


def cases():
    pi = math.pi
    out = [
        case("ch1.eq1.euler-integral", "Gamma(x) = int_0^inf t^{x-1} e^{-t} dt",
             lambda x: quad_inf(lambda t: t ** (x - 1) * EXP(-t), 0.0, left=x), gamma,
             [0.5, 1.5, 2.5, 4.2, 7.0], 1e-10, "quadrature"),
        case("ch1.eq2.recurrence", "Gamma(x+1) = x Gamma(x)",
             lambda x: gamma(x + 1), lambda x: x * gamma(x), [-2.5, -0.3, 0.7, 3.3, 10.1, 25.5], 1e-13),
        case("ch1.eq3.factorial", "Gamma(n+1) = n! for integers n >= 0",
             lambda n: gamma(n + 1), lambda n: float(math.factorial(n)), range(16), 1e-13, mode="rel"),
        case("ch1.eq4.gaussian-form", "Gamma(x) = 2 int_0^inf e^{-t^2} t^{2x-1} dt",
             lambda x: 2 * quad_inf(lambda t: EXP(-t * t) * t ** (2 * x - 1), 0.0, left=2 * x), gamma,
             [0.5, 1.0, 2.3, 4.0], 1e-10, "quadrature"),
        case("ch1.eq5.log-form", "Gamma(x) = int_0^1 (ln 1/t)^{x-1} dt",
             lambda x: quad(lambda t: (-LOG(t)) ** (x - 1), 0.0, 0.5, left=0.5)
             + quad(lambda s: (-math.log1p(-s)) ** (x - 1), 0.0, 0.5, left=x), gamma,
             [0.7, 1.5, 3.0], 1e-10, "quadrature"),
        case("ch1.eq6.trig-form",
             "int_0^{pi/2} sin^{2x-1} t cos^{2y-1} t dt = Gamma(x) Gamma(y) / (2 Gamma(x+y))",
             lambda x, y: quad(lambda t: SIN(t) ** (2 * x - 1) * COS(t) ** (2 * y - 1), 0.0, pi / 2,
                               left=2 * x, right=2 * y),
             lambda x, y: gamma(x) * gamma(y) / (2 * gamma(x + y)),
             [(0.5, 0.5), (1.5, 2.0), (0.75, 1.25)], 1e-10, "quadrature"),
        case("ch1.eq7.double-integral",
             "quarter-plane int int e^{-t^2-u^2} t^{2x-1} u^{2y-1} dt du = Gamma(x) Gamma(y) / 4",
             _double_integral, lambda x, y: gamma(x) * gamma(y) / 4, [(1.0, 1.0), (0.75, 1.5)],
             1e-9, "quadrature"),
        case("ch1.eq7a.weierstrass",
             "Gamma(x) = e^{-gamma x}/x prod_n e^{x/n} (1 + x/n)^{-1}, truncated products extrapolated in 1/N",
             lambda x: richardson_in(lambda n: gamma_weierstrass(x, n), (250, 500, 1000, 2000, 4000)), gamma,
             [0.5, 1.7, 3.2, -0.4], 1e-9, "series-truncation"),
        case("ch1.eq7b.sine-product",
             "1/(Gamma(x) Gamma(1-x)) = x prod_n (1 - x^2/n^2), truncated products extrapolated in 1/N",
             lambda x: richardson_in(lambda n: _sine_product(x, n), (250, 500, 1000, 2000, 4000)),
             lambda x: 1.0 / (gamma(x) * gamma(1 - x)), [0.2, 0.5, 0.9, 1.3], 1e-9, "series-truncation"),
        case("ch1.eq8.reflection", "Gamma(x) Gamma(1-x) = pi / sin(pi x)",
             lambda x: gamma(x) * gamma(1 - x), lambda x: pi / SIN(pi * x),
             [-3.7, -0.5, 0.1, 0.3, 0.5, 0.9, 2.5, 7.25], 1e-10, mode="rel"),
        case("ch1.eq8d.sine-doubling",
             "sin t = 2^{2^n-1} prod_{k=0}^{2^n-1} sin((t + k pi)/2^n)",
             _sine_doubling, lambda n, t: SIN(t), [(1, 0.3), (2, 1.1), (3, 2.0), (4, 0.7)], 1e-13),
        case("ch1.eq8e.paired-sines",
             "sin t = 2^{2^n-1} sin(t/2^n) prod_k sin((k pi + t)/2^n) sin((k pi - t)/2^n) sin((2^{n-1} pi + t)/2^n)",
             _sine_paired, lambda n, t: SIN(t), [(2, 1.1), (3, 2.0), (4, 0.7)], 1e-13),
        case("ch1.eq8f.sine-squares",
             "sin t = 2^{2^n-1} sin(t/2^n) prod_k (sin^2(k pi/2^n) - sin^2(t/2^n)) cos(t/2^n)",
             _sine_squares, lambda n, t: SIN(t), [(2, 1.1), (3, 2.0), (4, 0.7)], 1e-13),
        case("ch1.eq8g.sine-constant",
             "2^n = 2^{2^n-1} prod_{k=1}^{2^{n-1}-1} sin^2(k pi/2^n)",
             _sine_constant, lambda n: 2.0**n, [2, 3, 4, 5], 1e-13),
        case("ch1.eq9.duplication", "Gamma(2x) = 2^{2x-1} Gamma(x) Gamma(x + 1/2) / sqrt(pi)",
             lambda x: gamma(2 * x), lambda x: 2 ** (2 * x - 1) * gamma(x) * gamma(x + 0.5) / SQRT_PI,
             [-0.3, 0.25, 0.5, 1.3, 3.7, 7.1, 20.2], 1e-10, mode="rel"),
        case("ch1.eq9a.half-integer", "Gamma(n + 1/2) = (2n)!/n! sqrt(pi)/2^{2n}",
             lambda n: gamma(n + 0.5),
             lambda n: math.factorial(2 * n) / math.factorial(n) * SQRT_PI / 4**n, range(9), 1e-13, mode="rel"),
        case("ch1.eq10.stirling", "Gamma(x+1) ~ sqrt(2 pi x) x^x e^{-x}; relative gap below 1/(10x)",
             stirling, lambda x: gamma(x + 1), [10.0, 50.0, 100.0], 1e-2, mode="rel"),
        case("ch1.eq10.stirling-limit", "Gamma(x+1) / (sqrt(2 pi x) x^x e^{-x}) -> 1, extrapolated in 1/x",
             lambda: richardson_in(lambda n: gamma(n + 1.0) / stirling(float(n)), (20, 40, 80, 160)),
             lambda: 1.0, [()], 1e-8, "series-truncation"),
        case("ch1.eq11.lower-incomplete", "gamma(x, a) = int_0^a e^{-t} t^{x-1} dt",
             lambda x, a: quad(lambda t: EXP(-t) * t ** (x - 1), 0.0, a, left=x), incomplete_gamma_lower,
             [(0.5, 0.3), (0.5, 2.0), (2.5, 1.0), (3.0, 7.0)], 1e-10, "quadrature"),
        case("ch1.eq12.upper-incomplete", "Gamma(x, a) = int_a^inf e^{-t} t^{x-1} dt",
             lambda x, a: quad_inf(lambda t: EXP(-t) * t ** (x - 1), a), incomplete_gamma_upper,
             [(0.5, 0.3), (0.5, 2.0), (2.5, 1.0), (3.0, 7.0)], 1e-10, "quadrature"),
        case("ch1.eq13a.incomplete-sum", "gamma(x, a) + Gamma(x, a) = Gamma(x)",
             lambda x, a: incomplete_gamma_lower(x, a) + incomplete_gamma_upper(x, a), lambda x, a: gamma(x),
             [(0.5, 0.3), (1.5, 1.5), (2.5, 4.0), (6.0, 3.0)], 1e-12),
        case("ch1.eq13b.lower-recurrence", "gamma(x+1, a) = x gamma(x, a) - a^x e^{-a}",
             lambda x, a: incomplete_gamma_lower(x + 1, a),
             lambda x, a: x * incomplete_gamma_lower(x, a) - a**x * EXP(-a),
             [(0.5, 0.3), (1.5, 1.5), (2.5, 4.0)], 1e-12),
        case("ch1.eq13c.upper-recurrence", "Gamma(x+1, a) = x Gamma(x, a) + a^x e^{-a}",
             lambda x, a: incomplete_gamma_upper(x + 1, a),
             lambda x, a: x * incomplete_gamma_upper(x, a) + a**x * EXP(-a),
             [(0.5, 0.3), (1.5, 1.5), (2.5, 4.0)], 1e-12),
        case("ch1.eq13d.lower-derivative", "d/da [a^{-x} gamma(x, a)] = -a^{-x-1} gamma(x+1, a)",
             lambda x, a: deriv(lambda s: s ** (-x) * incomplete_gamma_lower(x, s), a, h=0.05),
             lambda x, a: -(a ** (-x - 1)) * incomplete_gamma_lower(x + 1, a),
             [(0.5, 1.0), (1.5, 2.0), (3.0, 0.7)], 1e-8, "finite-difference"),
        case("ch1.eq13e.upper-derivative", "d/da [a^{-x} Gamma(x, a)] = -a^{-x-1} Gamma(x+1, a)",
             lambda x, a: deriv(lambda s: s ** (-x) * incomplete_gamma_upper(x, s), a, h=0.05),
             lambda x, a: -(a ** (-x - 1)) * incomplete_gamma_upper(x + 1, a),
             [(0.5, 1.0), (1.5, 2.0), (3.0, 0.7)], 1e-8, "finite-difference"),
        case("ch1.eq14.digamma-derivative", "psi(x) = d/dx ln Gamma(x)",
             lambda x: deriv(lgamma, x, h=0.05), digamma, [0.5, 2.0, 7.5, -0.5], 1e-9, "finite-difference"),
        case("ch1.eq15a.digamma-shift", "psi(x+1) = psi(x) + 1/x",
             lambda x: digamma(x + 1), lambda x: digamma(x) + 1 / x, [-2.5, 0.3, 1.0, 4.7], 1e-12),
        case("ch1.eq15b.digamma-reflection", "psi(1-x) = psi(x) + pi cot(pi x)",
             lambda x: digamma(1 - x), lambda x: digamma(x) + pi / TAN(pi * x), [-1.3, 0.2, 0.5, 0.75, 2.4],
             1e-12),
        case("ch1.eq15c.digamma-harmonic", "psi(n+1) = -gamma + sum_{k=1}^n 1/k",
             lambda n: digamma(n + 1), lambda n: -EULER_GAMMA + math.fsum(1 / k for k in range(1, n + 1)),
             range(12), 1e-13),
        case("ch1.eq16.polygamma", "psi^{(m)}(x) = d^{m+1}/dx^{m+1} ln Gamma(x), checked for m = 1, 2",
             lambda m, x: deriv(digamma, x, order=m, h=0.05), polygamma,
             [(1, 0.5), (1, 3.0), (2, 1.5), (2, 4.0)], 1e-7, "finite-difference"),
        case("ch1.eq17.beta-integral", "B(x, y) = int_0^1 t^{x-1} (1-t)^{y-1} dt",
             lambda x, y: quad(lambda t: t ** (x - 1) * (1 - t) ** (y - 1), 0.0, 0.5, left=x)
             + quad(lambda s: s ** (y - 1) * (1 - s) ** (x - 1), 0.0, 0.5, left=y), beta,
             [(0.5, 0.5), (2.0, 3.0), (0.3, 1.7), (4.5, 0.8)], 1e-10, "quadrature"),
        case("ch1.eq18.beta-half-line", "B(x, y) = int_0^inf t^{x-1}/(1+t)^{x+y} dt",
             lambda x, y: quad(lambda t: t ** (x - 1) * (1 + t) ** (-x - y), 0.0, 1.0, left=x)
             + quad(lambda s: s ** (y - 1) * (1 + s) ** (-x - y), 0.0, 1.0, left=y),
             beta, [(0.5, 0.5), (2.0, 3.0), (0.3, 1.7)], 1e-10, "quadrature"),
        case("ch1.eq19.beta-trig", "B(x, y) = 2 int_0^{pi/2} cos^{2x-1} t sin^{2y-1} t dt = Gamma(x)Gamma(y)/Gamma(x+y)",
             lambda x, y: 2 * (quad(lambda t: COS(t) ** (2 * x - 1) * SIN(t) ** (2 * y - 1), 0.0, pi / 4, left=2 * y)
                                  + quad(lambda u: SIN(u) ** (2 * x - 1) * COS(u) ** (2 * y - 1), 0.0, pi / 4,
                                         left=2 * x)),
             lambda x, y: gamma(x) * gamma(y) / gamma(x + y), [(0.5, 0.5), (2.0, 3.0), (0.3, 1.7)],
             1e-10, "quadrature"),
        case("ch1.eq20a.beta-shift-x", "B(x+1, y) = x/(x+y) B(x, y)",
             lambda x, y: beta(x + 1, y), lambda x, y: x / (x + y) * beta(x, y),
             [(0.5, 0.5), (2.0, 3.0), (0.3, 1.7)], 1e-12),
        case("ch1.eq20b.beta-shift-y", "B(x, y+1) = y/(x+y) B(x, y)",
             lambda x, y: beta(x, y + 1), lambda x, y: y / (x + y) * beta(x, y),
             [(0.5, 0.5), (2.0, 3.0), (0.3, 1.7)], 1e-12),
        case("ch1.eq20c.beta-sum", "B(x+1, y) + B(x, y+1) = B(x, y)",
             lambda x, y: beta(x + 1, y) + beta(x, y + 1), beta, [(0.5, 0.5), (2.0, 3.0), (0.3, 1.7)], 1e-12),
        case("ch1.eq20d.beta-diagonal", "B(x, x) = 2^{1-2x} B(x, 1/2)",
             lambda x: beta(x, x), lambda x: 2 ** (1 - 2 * x) * beta(x, 0.5), [0.3, 0.5, 1.0, 2.5, 6.0], 1e-12),
    ]
    out += _exercises()
    return out


def _exercises():
    pi = math.pi
    q = "quadrature"
    return [
        case("ch1.ex1a", "int_0^inf u^4 e^{-u^3} du = Gamma(5/3)/3",
             lambda: quad_inf(lambda u: u**4 * EXP(-(u**3))), lambda: gamma(5 / 3) / 3, [()], 1e-9, q),
        case("ch1.ex1b", "int_a^inf e^{2au - u^2} du = sqrt(pi) e^{a^2} / 2",
             lambda a: quad_inf(lambda u: EXP(2 * a * u - u * u), a), lambda a: SQRT_PI * EXP(a * a) / 2,
             [0.5, 1.0, 2.0], 1e-9, q, mode="rel"),
        case("ch1.ex1c", "int_0^{pi/2} sqrt(tan t) dt = Gamma(1/4) Gamma(3/4) / 2",
             lambda: quad(lambda t: math.sqrt(TAN(t)), 0.0, pi / 2, left=1.5, right=0.5),
             lambda: gamma(0.25) * gamma(0.75) / 2, [()], 1e-9, q),
        case("ch1.ex1d", "int_0^inf u^{-3/4} e^{-sqrt u} du = 2 sqrt(pi)",
             lambda: quad_inf(lambda u: u**-0.75 * EXP(-math.sqrt(u)), 0.0, left=0.25), lambda: 2 * SQRT_PI,
             [()], 1e-9, q),
        case("ch1.ex1e", "int_0^1 (1 - u^4)^{-1/3} du = B(1/4, 2/3) / 4",
             lambda: quad(lambda u: (1 - u**4) ** (-1 / 3), 0.0, 0.5)
             + quad(lambda s: (s * (2 - s) * (1 + (1 - s) ** 2)) ** (-1 / 3), 0.0, 0.5, left=2 / 3), lambda: beta(0.25, 2 / 3) / 4,
             [()], 1e-9, q),
        case("ch1.ex1f", "int_{-1}^1 sqrt((1+u)/(1-u)) du = 2 B(3/2, 1/2) = pi",
             lambda: quad(lambda u: math.sqrt((1 + u) / (1 - u)), -1.0, 1.0, left=1.5, right=0.5),
             lambda: pi, [()], 1e-9, q),
        case("ch1.ex2a", "int_0^1 sqrt(1 - u^2) du = pi/4",
             lambda: quad(lambda u: math.sqrt(1 - u * u), 0.0, 1.0, right=1.5), lambda: pi / 4, [()], 1e-9, q),
        case("ch1.ex2b", "int_0^1 (1/u - 1)^{1/4} du = Gamma(3/4) Gamma(5/4)",
             lambda: quad(lambda u: (1 / u - 1) ** 0.25, 0.0, 1.0, left=0.75, right=1.25),
             lambda: gamma(0.75) * gamma(1.25), [()], 1e-9, q),
        case("ch1.ex2c", "int_0^1 (ln 1/u)^2 du = 2",
             lambda: quad(lambda u: LOG(u) ** 2, 0.0, 1.0, left=0.5), lambda: 2.0, [()], 1e-9, q),
        case("ch1.ex2d", "int_0^1 (1 - u^4)^{-1/2} du = Gamma(1/4)^2 / (4 sqrt(2 pi))",
             lambda: quad(lambda u: (1 - u**4) ** -0.5, 0.0, 1.0, right=0.5),
             lambda: gamma(0.25) ** 2 / (4 * math.sqrt(2 * pi)), [()], 1e-9, q),
        case("ch1.ex2e", "int_0^inf u^n e^{-a u^2} du = Gamma((n+1)/2) / (2 a^{(n+1)/2})",
             lambda n, a: quad_inf(lambda u: u**n * EXP(-a * u * u), 0.0, left=n + 1),
             lambda n, a: gamma((n + 1) / 2) / (2 * a ** ((n + 1) / 2)),
             [(0.0, 1.0), (1.0, 2.0), (2.5, 0.5), (-0.5, 1.0)], 1e-9, q),
        case("ch1.ex2f", "B(n, n+1) = Gamma(n)^2 / (2 Gamma(2n)), integral form of B",
             lambda n: quad(lambda t: t ** (n - 1) * (1 - t) ** n, 0.0, 1.0, left=n),
             lambda n: gamma(n) ** 2 / (2 * gamma(2 * n)), [0.5, 1.0, 2.5, 4.0], 1e-9, q),
        case("ch1.ex2g", "int_0^{pi/2} sin^n t dt = int_0^{pi/2} cos^n t dt = (sqrt(pi)/2) Gamma((1+n)/2)/Gamma((2+n)/2)",
             lambda n: quad(lambda t: SIN(t) ** n, 0.0, pi / 2, left=n + 1),
             lambda n: SQRT_PI / 2 * gamma((1 + n) / 2) / gamma((2 + n) / 2), [-0.5, 0.5, 1.0, 2.0, 3.5], 1e-9, q),
        case("ch1.ex2g.cosine", "int_0^{pi/2} cos^n t dt = (sqrt(pi)/2) Gamma((1+n)/2)/Gamma((2+n)/2)",
             lambda n: quad(lambda t: COS(t) ** n, 0.0, pi / 2, right=n + 1),
             lambda n: SQRT_PI / 2 * gamma((1 + n) / 2) / gamma((2 + n) / 2), [-0.5, 0.5, 1.0, 2.0, 3.5], 1e-9, q),
        case("ch1.ex2h", "int_0^{pi/2} tan^n t dt = Gamma((1+n)/2) Gamma((1-n)/2) / 2 for |n| < 1",
             lambda n: quad(lambda t: TAN(t) ** n, 0.0, pi / 4, left=n + 1)
             + quad(lambda u: TAN(u) ** -n, 0.0, pi / 4, left=1 - n),
             lambda n: gamma((1 + n) / 2) * gamma((1 - n) / 2) / 2, [-0.5, 0.3, 0.7], 1e-9, q),
        case("ch1.ex2i", "int_0^inf u^m e^{-u^n} du = Gamma((m+1)/n) / n",
             lambda m, n: quad_inf(lambda u: u**m * EXP(-(u**n)), 0.0, left=m + 1),
             lambda m, n: gamma((m + 1) / n) / n, [(1.0, 2.0), (2.0, 3.0), (0.5, 1.5), (3.0, 4.0)], 1e-9, q),
        case("ch1.ex3", "Euler limit m! m^x / (x (x+1) ... (x+m)) at m = 10^5 is within 1e-4 of Gamma(x)",
             lambda x: gamma_euler_limit(x, 100_000), gamma, [0.5, 1.5, 3.0], 1e-4, "series-truncation", mode="rel"),
        case("ch1.ex3.limit", "Euler limit extrapolated in 1/m reproduces Gamma(x)",
             lambda x: richardson_in(lambda m: gamma_euler_limit(x, m), (500, 1000, 2000, 4000, 8000)), gamma,
             [0.5, 1.5, 3.0], 1e-9, "series-truncation"),
    ]
