"""Normal CDF and tail evaluation: accuracy, symmetry, and the explicit
upper tail bound.

The CDF goes through the complementary error function in both directions,
so tail values keep full relative precision arbitrarily far out. The last
section shows the classical tail majorant exp(-x^2/2)/(sqrt(2*pi)*x),
which is loose near zero but asymptotically tight.
"""

import numpy as np

from be_nonuniform import phi_cdf, phi_tail, tail_bound_check

print("central values")
for x in (0.0, 0.5, 1.0, 2.0):
    print(f"  Phi({x:+.1f}) = {phi_cdf(x):.15f}   tail = {phi_tail(x):.15f}")

print("\nfar tails stay relatively accurate (no cancellation)")
for x in (5.0, 10.0, 20.0, 38.0):
    print(f"  tail({x:4.0f}) = {phi_tail(x):.6e}")

print("\nsymmetry defect |Phi(x) + Phi(-x) - 1| on a grid:")
grid = np.linspace(-12, 12, 49)
worst = max(abs(phi_cdf(float(x)) + phi_cdf(float(-x)) - 1.0) for x in grid)
print(f"  worst over {grid.size} points: {worst:.2e}")

print("\npolynomially weighted tails vanish: (1 + x^2) * tail(x)")
for x in (10.0, 20.0, 40.0):
    print(f"  x = {x:4.0f}: {(1 + x * x) * phi_tail(x):.3e}")

print("\ntail majorant exp(-x^2/2)/(sqrt(2*pi)*x):")
for x in (0.01, 1.0, 3.3912, 10.0):
    lhs, rhs, holds = tail_bound_check(x)
    print(f"  x = {x:7.4f}: tail = {lhs:.6e} <= bound = {rhs:.6e}  ({holds})")
