"""Gamma function tour: special values, reflection, and two slow limits.

Run: python3 demos/01_gamma.py
"""

import math

from specfun.gamma import beta, gamma, gamma_euler_limit, gamma_weierstrass, stirling

print("Gamma(1/2) =", gamma(0.5), " sqrt(pi) =", math.sqrt(math.pi))
print("Gamma(-1/2) =", gamma(-0.5), " -2 sqrt(pi) =", -2 * math.sqrt(math.pi))

print("\nReflection Gamma(x) Gamma(1-x) sin(pi x) / pi:")
for x in (0.1, 0.37, 1.5, -2.3):
    print(f"  x={x:5}: {gamma(x) * gamma(1 - x) * math.sin(math.pi * x) / math.pi:.15f}")

print("\nEuler limit and Weierstrass product converge slowly, about like 1/m:")
for m in (10, 100, 1000, 10**4, 10**5):
    e = gamma_euler_limit(1.5, m) / gamma(1.5) - 1
    w = gamma_weierstrass(1.5, m) / gamma(1.5) - 1
    print(f"  m={m:>6}: Euler rel err {e:+.2e}   Weierstrass rel err {w:+.2e}")

print("\nStirling ratio Gamma(x+1) / stirling(x) tends to 1:")
for x in (1, 5, 10, 50):
    print(f"  x={x:3}: {gamma(x + 1) / stirling(x):.8f}")

print("\nBeta(2, 3) =", beta(2, 3), "= 1/12")
