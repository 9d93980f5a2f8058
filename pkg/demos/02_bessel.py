"""Bessel functions: half-order closed forms and the three-term ladder.

Run: python3 demos/02_bessel.py
"""

import math

from specfun.bessel import bessel_i, bessel_j, bessel_k, bessel_y, hankel1

x = 2.0
s = math.sqrt(2 / (math.pi * x))
print(f"At x = {x}:")
print(f"  J_1/2  {bessel_j(0.5, x):+.15f}  vs sqrt(2/pi x) sin x  {s * math.sin(x):+.15f}")
print(f"  Y_1/2  {bessel_y(0.5, x):+.15f}  vs -sqrt(2/pi x) cos x {-s * math.cos(x):+.15f}")
print(f"  I_1/2  {bessel_i(0.5, x):+.15f}  vs sqrt(2/pi x) sinh x {s * math.sinh(x):+.15f}")
print(f"  K_1/2  {bessel_k(0.5, x):+.15f}  vs sqrt(pi/2x) e^-x    {math.sqrt(math.pi / (2 * x)) * math.exp(-x):+.15f}")
print(f"  H1_1/2 {complex(hankel1(0.5, x)):.15f}")

print("\nLadder residual (2n/x) J_n - J_(n-1) - J_(n+1):")
for n in range(1, 6):
    r = 2 * n / x * bessel_j(n, x) - bessel_j(n - 1, x) - bessel_j(n + 1, x)
    print(f"  n={n}: {r:+.2e}")

print("\nInteger-order Y as the limit of the non-integer definition:")
for n in (0, 1, 3):
    print(f"  Y_{n}(5) = {bessel_y(n, 5.0):+.15f}")
