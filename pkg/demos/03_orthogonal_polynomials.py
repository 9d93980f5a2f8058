"""Orthogonal polynomials: exact tables, a Legendre expansion, Hermite ladders.

Run: python3 demos/03_orthogonal_polynomials.py
"""

import math

from specfun import orthopoly as o

print("P_4 coefficients (exact):", [str(c) for c in o.legendre_coefficients(4).coeffs])
print("H_4 coefficients (exact):", [str(c) for c in o.hermite_coefficients(4).coeffs])

print("\nLegendre coefficients of ln((1+x)/(1-x)) against 2(2n+1)/(n(n+1)):")
c = o.legendre_series_fit(lambda x: math.log((1 + x) / (1 - x)), 7)
for n in (1, 3, 5, 7):
    print(f"  n={n}: {c[n]:.10f}  {2 * (2 * n + 1) / (n * (n + 1)):.10f}")

print("\nAssociated Legendre functions carry no (-1)^m phase here:")
print("  P_1^1(0)    =", o.assoc_legendre(1, 1, 0.0))
print("  P_2^-1(0.6) =", o.assoc_legendre(2, -1, 0.6))

print("\nChebyshev U uses U_n(cos t) = sin(n t), so U_0 = 0:")
print("  U_0(0.3) =", o.chebyshev_u(0, 0.3), "  U_1(0.6) =", o.chebyshev_u(1, 0.6))

print("\nSpherical harmonic Y_2^1(1.0, 0.5) =", complex(o.spherical_harmonic(2, 1, 1.0, 0.5)))
