"""
Interface optics and the two-medium Green's function
=====================================================

A wave travelling in medium 1 (x > 0) towards the interface at x = 0 is
partly reflected with amplitude R_L.  The figures below use R_L close to -1,
i.e. a very dense medium 2.
"""
# %%
import numpy as np

from interface_dce import GreensContext, fresnel, greens, helmholtz_residual, index_ratio_for_reflection

for r in (-0.967, -0.980, -0.988, -0.99998):
    ratio = index_ratio_for_reflection(r)
    c = fresnel(1.0, ratio)
    print(f"R_L = {r:9.5f}  ->  n2/n1 = {ratio:12.3f}   T_L = {c.t_left.real:.5f}   T_R = {c.t_right.real:.3f}")

# %%
# The Green's function is reciprocal, continuous across the interface, and
# satisfies the Helmholtz equation away from the source.  A small loss in
# medium 1 damps both the direct and the echo term.
ctx = GreensContext(1.2 + 0.02j, 3.0)
xs = np.linspace(-3, 3, 13)
for x in xs:
    g = greens(ctx, 1.0, x, 0.8)
    print(f"x = {x:5.2f}   |G| = {abs(g):.5f}   arg G = {np.angle(g):+.4f}")

print("G(0.5, -1) =", greens(ctx, 1.0, 0.5, -1.0))
print("G(-1, 0.5) =", greens(ctx, 1.0, -1.0, 0.5))

# %%
# Residual of the finite-difference Helmholtz operator: second order in h.
for h in (4e-3, 2e-3, 1e-3):
    print(f"h = {h:.0e}   |residual| = {abs(helmholtz_residual(ctx, 1.0, 2.0, 0.8, h)):.3e}")
