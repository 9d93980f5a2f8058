"""Numeric helpers shared by the identity cases."""

from __future__ import annotations

import math
from typing import Callable

from ..numkernel import (
    QUAD_TOL,
    averaged_partial_sums,
    integrate_finite,
    integrate_semi_infinite,
    richardson_limit,
)

__all__ = ["quad", "quad_inf", "deriv", "oscillatory_integral", "richardson_in", "cplx"]


def quad(f: Callable[[float], float], a: float, b: float, left=None, right=None) -> float:
    """Integral of f over [a, b] with optional endpoint exponents."""
    return integrate_finite(f, a, b, QUAD_TOL, left_power=left, right_power=right).value


def quad_inf(f: Callable[[float], float], a: float = 0.0, left=None) -> float:
    """Integral of f over [a, inf)."""
    return integrate_semi_infinite(f, a, QUAD_TOL, left_power=left).value


def deriv(f: Callable[[float], float], x: float, order: int = 1, h: float | None = None) -> float:
    """Central-difference derivative of order 1 or 2, Richardson-extrapolated in h^2.

    The default first step is 0.1, shrunk to |x|/8 near the origin so that
    functions with a pole or branch point at 0 stay resolved.
    """
    if h is None:
        h = min(0.1, abs(x) / 8) if x else 0.1
    samples = []
    for k in range(5):
        s = h / 2**k
        if order == 1:
            d = (f(x + s) - f(x - s)) / (2.0 * s)
        elif order == 2:
            d = (f(x + s) - 2.0 * f(x) + f(x - s)) / (s * s)
        else:
            raise ValueError("order must be 1 or 2")
        samples.append((s, d))
    return richardson_limit(samples, power=2)


def oscillatory_integral(f: Callable[[float], float], a: float, half_period: float, panels: int = 40) -> float:
    """Integral of a slowly decaying oscillatory f over [a, inf).

    Integrates panel by panel over consecutive half periods and
    accelerates the alternating partial sums by repeated averaging.
    """
    partial = []
    total = 0.0
    for k in range(panels):
        lo = a + k * half_period
        total += quad(f, lo, lo + half_period)
        partial.append(total)
    return averaged_partial_sums(partial)


def richardson_in(values: Callable[[int], float], ns, power: int = 1) -> float:
    """Limit of values(n) as n -> inf, extrapolated in h = 1/n."""
    return richardson_limit([(1.0 / n, values(n)) for n in ns], power=power)


def cplx(v) -> complex:
    """Coerce a float, complex or ComplexValue to complex."""
    return complex(v)
