"""
Small slab (0.001 pi): integral versus the limiting formulas
============================================================

For a thin slab the spectrum peaks close to y = 1/2, but the full integral
keeps a visible asymmetry: at R_L = -0.99998 the y^4 (1-y)^2 contribution is
as large as the y^2 (1-y)^2 one.  The small-slab expansion and the
perfect-mirror formula are evaluated for comparison; they differ from the
integral in magnitude and (for the mirror formula) in sign.
"""
# %%
import math

import numpy as np

from interface_dce import (
    FixedReflection,
    PerfectMirror,
    Scenario,
    density_closed_form,
    density_expansion,
    density_mirror_limit,
    density_quadrature,
)

L = 0.001 * math.pi
sc = Scenario(L, FixedReflection(-0.99998))
mirror = Scenario(L, PerfectMirror(), method="mirror_limit")

print("    y   quadrature    closed form   expansion    mirror limit")
for y in (0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9):
    print(f"{y:5.2f}  {density_quadrature(sc, y):.5e}  {density_closed_form(sc, y):.5e}  "
          f"{density_expansion(sc, y):.5e}  {density_mirror_limit(mirror, y):+.5e}")

# %%
# Symmetry about y = 1/2, relative to the peak
fine = np.arange(1, 1000) * 1e-3
dens = np.array([density_quadrature(sc, y) for y in fine])
peak = np.abs(dens).max()
for y in (0.1, 0.2, 0.3, 0.4):
    diff = density_quadrature(sc, y) - density_quadrature(sc, 1 - y)
    print(f"|d({y}) - d({1 - y:.1f})| / peak = {abs(diff) / peak:.3e}")
print("peak at y =", fine[np.argmax(np.abs(dens))])
