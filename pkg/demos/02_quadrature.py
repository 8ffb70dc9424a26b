"""
Gauss-Legendre quadrature on the slab square
============================================

The spectral density is a double integral over [0, L]^2.  The integrand is
entire and varies slowly over the slab, so a modest tensor rule converges to
round-off.
"""
# %%
import math

import numpy as np

from interface_dce import gauss_legendre, integrate_2d

rule = gauss_legendre(5)
print("nodes  ", rule.nodes)
print("weights", rule.weights)

# %%
# Exact answer: int int cos(a - a') over [0, pi]^2 = 2 (1 - cos pi) = 4
for order in (2, 4, 8, 16):
    value = integrate_2d(lambda a, b: np.cos(a - b), math.pi, gauss_legendre(order))
    print(f"order {order:3d}: {value.real:.16f}   error {abs(value - 4):.2e}")
