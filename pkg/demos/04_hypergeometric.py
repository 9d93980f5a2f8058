"""Hypergeometric series and the families they reduce to.

Run: python3 demos/04_hypergeometric.py
"""

import math

from specfun import hypergeom as h
from specfun.errors import NonConvergence
from specfun.bessel import bessel_j
from specfun.orthopoly import hermite_h, laguerre_l, legendre_p

x = 0.4
print("2F1(1,1;2;x) =", h.gauss_2f1(1, 1, 2, x).value, " -ln(1-x)/x =", -math.log(1 - x) / x)
print("2F1(1/2,1;3/2;x^2) =", h.gauss_2f1(0.5, 1, 1.5, x * x).value, " artanh(x)/x =", math.atanh(x) / x)

print("\nReductions against the native evaluators:")
for fam, idx, native in [
    ("legendre", (5,), legendre_p(5, x)),
    ("laguerre", (4,), laguerre_l(4, x)),
    ("hermite", (6,), hermite_h(6, x)),
    ("bessel_j", (2,), bessel_j(2, x)),
]:
    print(f"  {fam:9} {h.reduce_to_family(fam, idx, x):+.15f}  {native:+.15f}")

print("\nGauss sum 2F1(a,b;c;1) = Gamma(c)Gamma(c-a-b)/(Gamma(c-a)Gamma(c-b)):")
print("  (1/2, 1/2; 2):", h.gauss_sum_at_1(0.5, 0.5, 2), " 4/pi =", 4 / math.pi)

try:
    h.gauss_2f1(0.5, 0.5, 1.0, 0.99999)
    print("\n2F1 near x = 1 converged")
except NonConvergence as e:  # slow convergence near the boundary is reported, not hidden
    print("\n2F1 near x = 1:", type(e).__name__, e)
