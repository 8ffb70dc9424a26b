"""Quick invariant checks runnable from an installed package (``interface-dce selftest``)."""
from __future__ import annotations

import math

import numpy as np

from .greens import GreensContext, greens, helmholtz_residual
from .interface_optics import fresnel, index_ratio_for_reflection
from .quadrature import gauss_legendre, integrate_2d
from .scenarios_io import load_scenario
from .spectrum import (
    FixedReflection,
    MediaPair,
    PerfectMirror,
    Scenario,
    density_closed_form,
    density_mirror_limit,
    density_quadrature,
)
from .dispersion import ConstantReal


def _rel(a, b):
    scale = max(abs(a), abs(b))
    return 0.0 if scale == 0 else abs(a - b) / scale


def check_fresnel(rng):
    worst = 0.0
    for _ in range(200):
        n1 = complex(rng.uniform(0.1, 5), rng.uniform(0, 2))
        n2 = complex(rng.uniform(0.1, 5), rng.uniform(0, 2))
        c = fresnel(n1, n2)
        worst = max(worst, abs(c.r_left + c.r_right), abs(1 + c.r_left - c.t_left),
                    abs(1 + c.r_right - c.t_right), _rel(c.t_left / n1, c.t_right / n2))
    for r in np.linspace(-0.999, 0.0, 50):
        worst = max(worst, abs(fresnel(1.0, index_ratio_for_reflection(r)).r_left - r))
    return worst < 1e-12, f"worst identity error {worst:.2e}"


def check_quadrature(rng):
    worst = 0.0
    for n in (1, 2, 5, 16, 32, 64):
        rule = gauss_legendre(n)
        for k in range(2 * n):
            exact = 2.0 / (k + 1) if k % 2 == 0 else 0.0
            worst = max(worst, abs(np.sum(rule.weights * rule.nodes**k) - exact))
    area = integrate_2d(lambda a, b: np.cos(a - b), math.pi, gauss_legendre(16))
    ok = worst < 1e-13 and abs(area - 4.0) < 1e-10
    return ok, f"worst monomial error {worst:.2e}, cos-square error {abs(area - 4):.2e}"


def check_greens(rng):
    worst = 0.0
    for _ in range(100):
        ctx = GreensContext(complex(rng.uniform(0.5, 4), rng.uniform(0, 0.3)),
                            complex(rng.uniform(0.5, 4), rng.uniform(0, 0.3)))
        k = rng.uniform(0.2, 3)
        x, xp = rng.uniform(-3, 3, size=2)
        worst = max(worst, _rel(greens(ctx, k, x, xp), greens(ctx, k, xp, x)))
        worst = max(worst, _rel(greens(ctx, k, 1e-15, xp), greens(ctx, k, -1e-15, xp)))
    ctx = GreensContext(1.0, 3.0)
    r1 = abs(helmholtz_residual(ctx, 1.0, 2.0, 0.5, 2e-3))
    r2 = abs(helmholtz_residual(ctx, 1.0, 2.0, 0.5, 1e-3))
    ratio = r1 / r2
    ok = worst < 1e-12 and abs(ratio - 4.0) < 0.5
    return ok, f"reciprocity/continuity {worst:.2e}, residual ratio {ratio:.3f}"


def check_spectrum(rng):
    worst = 0.0
    for name in ("fig3", "fig4"):
        for sc in load_scenario(name).scenarios():
            for y in np.arange(1, 20) * 0.05:
                worst = max(worst, _rel(density_quadrature(sc, y), density_closed_form(sc, y)))
            for y in (1.0, 1.2):
                if density_quadrature(sc, y) != 0.0 or density_closed_form(sc, y) != 0.0:
                    return False, f"nonzero density above cutoff for {sc.label}"
    null = Scenario(0.3, MediaPair(ConstantReal(1.5), ConstantReal(1.5)), (0.5,))
    mirror = Scenario(0.1, PerfectMirror(), (0.5,), method="mirror_limit")
    shape = [density_mirror_limit(mirror, y) / (y * y * (1 - y) ** 2) for y in np.linspace(0.02, 0.98, 50)]
    shape_err = max(_rel(s, shape[0]) for s in shape)
    ok = (worst < 1e-10 and density_quadrature(null, 0.5) == 0.0 and shape_err < 1e-12
          and FixedReflection(-0.5).r_left == -0.5)
    return ok, f"quadrature vs closed form {worst:.2e}, mirror shape {shape_err:.2e}"


CHECKS = (
    ("fresnel identities", check_fresnel),
    ("gauss-legendre exactness", check_quadrature),
    ("green's function", check_greens),
    ("spectrum oracles", check_spectrum),
)


def run(stream=None, seed=12345) -> bool:
    """Run all checks, print one line each, return True if all pass."""
    rng = np.random.default_rng(seed)
    all_ok = True
    for name, check in CHECKS:
        ok, detail = check(rng)
        all_ok &= ok
        print(f"{'PASS' if ok else 'FAIL'}  {name}: {detail}", file=stream)
    return all_ok
