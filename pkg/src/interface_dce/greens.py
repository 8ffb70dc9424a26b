"""
Frequency-domain Green's function of the 1D Helmholtz operator with a
two-region permittivity: eps = n1**2 for x > 0 and eps = n2**2 for x < 0.

    (d^2/dx^2 + eps(x) k^2) G(x, x') = -delta(x - x') / (scale * c)

Units: c = 1, so omega = k and ``scale`` stands for the product
eps_0 * c * S (vacuum permittivity, light speed, interface area).

The same-side branch for x, x' < 0 uses the direct term exp(i k n2 |x - x'|);
this is the form that satisfies the equation above with a point source at x'
and keeps G continuous and reciprocal.
"""
from __future__ import annotations

import cmath
from dataclasses import dataclass, field

from .errors import DomainError, StencilError
from .interface_optics import InterfaceCoefficients, fresnel


@dataclass(frozen=True)
class GreensContext:
    """Media and normalization needed to evaluate G at one frequency."""

    n1: complex
    n2: complex
    scale: float = 1.0
    coefficients: InterfaceCoefficients = field(init=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "n1", complex(self.n1))
        object.__setattr__(self, "n2", complex(self.n2))
        if not self.scale > 0:
            raise DomainError(f"scale must be positive, got {self.scale}")
        object.__setattr__(self, "coefficients", fresnel(self.n1, self.n2))

    def permittivity_at(self, x: float) -> complex:
        return self.n1 * self.n1 if x >= 0 else self.n2 * self.n2


def greens(ctx: GreensContext, k: float, x: float, x_prime: float) -> complex:
    """
    Evaluate G(x, x', omega = k) for any pair of points.

    Points exactly at x = 0 are assigned to the x > 0 branch; G is
    continuous there so the choice is immaterial.
    """
    if not k > 0:
        raise DomainError(f"wavenumber must be positive, got k={k}")
    n1, n2 = ctx.n1, ctx.n2
    co = ctx.coefficients
    omega = k  # c = 1
    if x >= 0 and x_prime >= 0:
        pre = 1j / (2.0 * ctx.scale * omega * n1)
        return pre * (co.r_left * cmath.exp(1j * k * n1 * (x + x_prime))
                      + cmath.exp(1j * k * n1 * abs(x - x_prime)))
    if x >= 0:
        pre = 1j / (2.0 * ctx.scale * omega * n2)
        return pre * co.t_right * cmath.exp(1j * k * (n1 * x - n2 * x_prime))
    if x_prime < 0:
        pre = 1j / (2.0 * ctx.scale * omega * n2)
        return pre * (co.r_right * cmath.exp(-1j * k * n2 * (x + x_prime))
                      + cmath.exp(1j * k * n2 * abs(x - x_prime)))
    pre = 1j / (2.0 * ctx.scale * omega * n1)
    return pre * co.t_left * cmath.exp(-1j * k * (n2 * x - n1 * x_prime))


def helmholtz_residual(ctx: GreensContext, k: float, x: float, x_prime: float, h: float) -> complex:
    """
    Centered-difference residual G'' + eps(x) k^2 G at `x`, step `h`.

    Vanishes as O(h^2) away from the source point and the interface. Intended
    for verification only.
    """
    if not h > 0:
        raise StencilError(f"step must be positive, got h={h}")
    if not abs(x - x_prime) > 3 * h:
        raise StencilError(f"stencil at x={x} with h={h} is too close to the source x'={x_prime}")
    if not (x - h > 0 or x + h < 0):
        raise StencilError(f"stencil at x={x} with h={h} crosses the interface at x=0")
    g0 = greens(ctx, k, x, x_prime)
    gp = greens(ctx, k, x + h, x_prime)
    gm = greens(ctx, k, x - h, x_prime)
    second = (gp - 2.0 * g0 + gm) / (h * h)
    return second + ctx.permittivity_at(x) * k * k * g0
