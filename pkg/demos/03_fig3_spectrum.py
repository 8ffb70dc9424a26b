"""
Spectrum for a fast boundary (slab parameter 0.1 pi)
====================================================

Three reflection coefficients close to -1.  The spectrum vanishes above the
modulation frequency (y >= 1), is not symmetric about y = 1/2, and drops
quickly as |R_L| decreases.  Quadrature and the exact closed form agree to
round-off.
"""
# %%
import numpy as np

from interface_dce import density_closed_form, load_scenario, render_svg, run_scenario

sf = load_scenario("fig3")
results = [run_scenario(sc) for sc in sf.scenarios()]
for res in results:
    y_peak, d_peak = res.peak()
    print(f"{res.label:>12s}: peak at y = {y_peak:.3f}, dN/dy = {d_peak:.4e}, "
          f"imaginary residual {res.max_imag_residual:.1e}")

# %%
sc = sf.scenarios()[0]
for y in (0.1, 0.3, 0.5, 0.7, 0.9):
    q = results[0].density[np.argmin(np.abs(results[0].y - y))]
    print(f"y = {y:.1f}: grid value {q:.6e} at y = {results[0].y[np.argmin(np.abs(results[0].y - y))]:.3f}, "
          f"closed form at y = {y:.1f}: {density_closed_form(sc, y):.6e}")

# %%
render_svg(results, "fig3.svg", title="slab parameter 0.1 pi")
print("wrote fig3.svg")

# %%
try:
    import matplotlib.pyplot as plt
except ImportError:
    plt = None
if plt is not None:
    for res, style in zip(results, ("--", ":", "-")):
        plt.plot(res.y, res.density, style, color="k", label=res.label)
    plt.xlabel("y = omega / omega_0")
    plt.ylabel("dN/dy (reduced units)")
    plt.legend()
    plt.savefig("fig3.png", dpi=120)
