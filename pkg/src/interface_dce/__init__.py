"""
Spectra of photons created by a simulated moving interface between two
semi-infinite dielectrics in 1+1 dimensions (dynamical Casimir effect).

Submodules
----------
dispersion        refractive index models n(y) = eta + i kappa
interface_optics  Fresnel coefficients
greens            two-medium Helmholtz Green's function
quadrature        Gauss-Legendre rules, 2D tensor integration
spectrum          dN/dy by quadrature, closed form, and limiting formulas
scenarios_io      scenario files, CSV and SVG output
"""
from .dispersion import (
    ConstantComplex,
    ConstantReal,
    LorentzOscillator,
    RefractiveIndex,
    permittivity,
    refractive_index,
)
from .errors import (
    ConfigurationError,
    DceError,
    DomainError,
    ScenarioFileError,
    SingularInterfaceError,
    StencilError,
    UnsupportedRegimeError,
)
from .greens import GreensContext, greens, helmholtz_residual
from .interface_optics import InterfaceCoefficients, fresnel, index_ratio_for_reflection
from .quadrature import QuadratureRule, gauss_legendre, integrate_2d
from .scenarios_io import (
    ScenarioFile,
    format_scenario_file,
    load_scenario,
    parse_scenario_file,
    render_svg,
    write_csv,
)
from .spectrum import (
    FixedReflection,
    MediaPair,
    PerfectMirror,
    Scenario,
    SpectrumResult,
    closed_form_density,
    commutator_kernel_rl,
    commutator_kernel_rr,
    density_closed_form,
    density_expansion,
    density_mirror_limit,
    density_quadrature,
    expansion_density,
    kernel,
    mirror_limit_density,
    quadrature_density,
    run_scenario,
)

__version__ = "0.1.0"
