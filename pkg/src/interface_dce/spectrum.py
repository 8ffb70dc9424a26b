"""
Spectral density dN/dy of photons created by a thin slab at x in [0, delta_q]
whose permittivity is switched between eps_1 and eps_2 at frequency omega_0.

Dimensionless variables: y = omega/omega_0, a = x omega_0/c, and the slab
parameter L = delta_q omega_0 / c.  Reported densities are in reduced units
(eps_0 = c = S = 1) and include the 1/(2 pi) of the mode counting.

For lossless media the density is the double integral over [0, L]^2 of

    P(y) * B1(a, a') * B2(a, a')

    P  = (n1 - n2)^2 (y - 1)^2 Theta(1 - y) / (2 pi (4 n1)^2)
    B1 = R^2 exp(-i mu (a' - a)) + 2 R cos(mu (a' + a)) + exp(i mu (a' - a))
    B2 = 2 [cos(mu (a' - a)) + R cos(mu (a' + a))]

with mu = y n1 and R the left reflection coefficient.  Close to R = -1 the
literal braces cancel to many digits, so :func:`kernel` evaluates the same
expression rewritten in terms of d = 1 + R and s = sin(mu a):

    B1 = d^2 cos(mu (a' - a)) - 4 R s s' + i d (1 - R) sin(mu (a' - a))
    B2 = 2 [2 s s' + d cos(mu (a' + a))]

Four evaluation routes are provided: tensor Gauss-Legendre quadrature, an
exact closed form of the same integral, the small-slab expansion and the
perfect-mirror limit formula.  The last two are implemented as stated
below; they do not follow from the integral as L -> 0 (see README).
"""
from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Tuple, Union

import numpy as np

from .dispersion import ConstantComplex, ConstantReal, MediumModel, refractive_index
from .errors import ConfigurationError, DceError, DomainError, UnsupportedRegimeError
from .interface_optics import fresnel, index_ratio_for_reflection
from .quadrature import gauss_legendre, integrate_2d

METHODS = ("quadrature", "closed_form", "expansion", "mirror_limit")
PROFILES = ("sharp", "exponential")
DEFAULT_QUAD_ORDER = 32
# exponential profile: weights exp(-(a + a')/L) truncated at this many decay lengths
EXPONENTIAL_CUTOFF = 8.0


@dataclass(frozen=True)
class FixedReflection:
    """Bare reflection coefficient; media are taken as n1 = 1, n2 = (1 - R)/(1 + R)."""

    r_left: float

    def __post_init__(self):
        # validates the range (-1, 0]
        index_ratio_for_reflection(self.r_left)

    @property
    def label(self):
        return f"R_L={self.r_left!r}"


@dataclass(frozen=True)
class MediaPair:
    """Explicit media: medium1 fills x > 0 (contains the slab), medium2 fills x < 0."""

    medium1: MediumModel
    medium2: MediumModel

    @property
    def label(self):
        return f"media({_medium_label(self.medium1)}|{_medium_label(self.medium2)})"


@dataclass(frozen=True)
class PerfectMirror:
    """
    R_L = -1.  The index contrast n2 - n1 cannot be derived from R_L here
    and is carried as a finite parameter (default 1, i.e. densities per unit
    squared contrast).
    """

    contrast: float = 1.0

    def __post_init__(self):
        if not math.isfinite(self.contrast):
            raise DomainError(f"contrast must be finite, got {self.contrast}")

    @property
    def label(self):
        return "mirror"


Reflection = Union[FixedReflection, MediaPair, PerfectMirror]


def _medium_label(m):
    if isinstance(m, ConstantReal):
        return f"{m.eta!r}"
    if isinstance(m, ConstantComplex):
        return f"{m.eta!r}+{m.kappa!r}i"
    return f"lorentz({m.resonance_y!r},{m.plasma_y!r},{m.damping_y!r})"


def _is_constant(m):
    return isinstance(m, (ConstantReal, ConstantComplex))


@dataclass(frozen=True)
class Scenario:
    """One spectrum request: slab, reflection, frequency grid and method."""

    slab_L: float
    reflection: Reflection
    y_grid: Tuple[float, ...] = ()
    method: str = "quadrature"
    quad_order: int = DEFAULT_QUAD_ORDER
    profile: str = "sharp"
    name: str = ""

    def __post_init__(self):
        object.__setattr__(self, "y_grid", tuple(float(y) for y in self.y_grid))
        if not (math.isfinite(self.slab_L) and self.slab_L > 0):
            raise DomainError(f"slab_L must be positive, got {self.slab_L}")
        if not isinstance(self.reflection, (FixedReflection, MediaPair, PerfectMirror)):
            raise ConfigurationError(f"unknown reflection specification {self.reflection!r}")
        grid = self.y_grid
        if any(not 0.0 < y <= 1.0 for y in grid):
            raise DomainError("grid frequencies must lie in (0, 1]")
        if any(b <= a for a, b in zip(grid, grid[1:])):
            raise DomainError("grid frequencies must be strictly increasing")
        if self.method not in METHODS:
            raise ConfigurationError(f"unknown method {self.method!r}; expected one of {METHODS}")
        if self.profile not in PROFILES:
            raise ConfigurationError(f"unknown profile {self.profile!r}; expected one of {PROFILES}")
        gauss_legendre(self.quad_order)

        mirror = isinstance(self.reflection, PerfectMirror)
        if self.method == "mirror_limit" and not mirror:
            raise ConfigurationError("method mirror_limit requires a perfect-mirror reflection")
        if mirror and self.method in ("quadrature", "closed_form"):
            raise ConfigurationError(f"method {self.method} is undefined for a perfect mirror")
        if (self.method == "closed_form" and isinstance(self.reflection, MediaPair)
                and not (_is_constant(self.reflection.medium1) and _is_constant(self.reflection.medium2))):
            raise ConfigurationError("method closed_form requires constant indices")
        if self.profile == "exponential" and self.method != "quadrature":
            raise ConfigurationError("the exponential profile is only available with quadrature")

    @property
    def label(self):
        return self.name or self.reflection.label


@dataclass(frozen=True)
class SpectrumResult:
    y: np.ndarray
    density: np.ndarray
    max_imag_residual: float
    method: str
    scenario: Scenario

    @property
    def points(self):
        return list(zip(self.y.tolist(), self.density.tolist()))

    @property
    def label(self):
        return self.scenario.label

    def peak(self):
        """(y, density) at the largest |density|; (nan, nan) for an empty grid."""
        if self.y.size == 0:
            return math.nan, math.nan
        i = int(np.argmax(np.abs(self.density)))
        return float(self.y[i]), float(self.density[i])


# ---------------------------------------------------------------- kernels

def commutator_kernel_rr(n1, y, a, a_prime):
    """Spatial factor exp(i y n1 (a - a')) of the rightward/rightward commutator."""
    _check_y(y)
    return np.exp(1j * y * n1 * (np.asarray(a) - np.asarray(a_prime)))


def commutator_kernel_rl(r_left, n1, y, a, a_prime):
    """Spatial factor R_L exp(i y n1 (a + a')) of the rightward/leftward commutator."""
    _check_y(y)
    return r_left * np.exp(1j * y * n1 * (np.asarray(a) + np.asarray(a_prime)))


def spectral_prefactor(y, n1, n2):
    """(n1 - n2)^2 (y - 1)^2 Theta(1 - y) / (2 pi (4 n1)^2); exactly 0 for y >= 1."""
    _check_y(y)
    if y >= 1.0:
        return 0.0
    return (n1 - n2) ** 2 * (y - 1.0) ** 2 / (2.0 * math.pi * (4.0 * n1) ** 2)


def kernel(y, n1, n2, r_left, a, a_prime):
    """
    Integrand of the spectral density at (a, a'), vectorized over a, a'.

    Lossless (real) indices only.  Evaluated in the cancellation-free form
    given in the module docstring.
    """
    pre = spectral_prefactor(y, n1, n2)
    a = np.asarray(a, dtype=float)
    a_prime = np.asarray(a_prime, dtype=float)
    mu = y * n1
    d = 1.0 + r_left
    s = np.sin(mu * a)
    sp = np.sin(mu * a_prime)
    diff = mu * (a_prime - a)
    ss = s * sp
    b1 = (d * d * np.cos(diff) - 4.0 * r_left * ss) + 1j * (d * (1.0 - r_left) * np.sin(diff))
    b2 = 2.0 * (2.0 * ss + d * np.cos(mu * (a_prime + a)))
    return pre * b1 * b2


def kernel_from_commutators(y, n1, n2, r_left, a, a_prime):
    """
    The same integrand assembled term by term from the commutator factors.

    Algebraically identical to :func:`kernel` but loses relative accuracy
    like 1e-16 / (1 + R)^2 as R -> -1.
    """
    pre = spectral_prefactor(y, n1, n2)
    rr = commutator_kernel_rr(n1, y, a, a_prime)          # exp(i mu (a - a'))
    rr_swap = commutator_kernel_rr(n1, y, a_prime, a)     # exp(i mu (a' - a))
    rl = commutator_kernel_rl(r_left, n1, y, a, a_prime)  # R exp(i mu (a + a'))
    b1 = r_left**2 * rr + rr_swap + rl + np.conj(rl)
    b2 = rr + rr_swap + rl + np.conj(rl)
    return pre * b1 * b2


# ------------------------------------------------------ explicit-parameter densities

def quadrature_density(y, n1, n2, r_left, slab_L, order=DEFAULT_QUAD_ORDER, profile="sharp") -> complex:
    """
    Complex value of the double integral by tensor Gauss-Legendre quadrature.

    The exact integral is real; the imaginary part of the return value is
    the quadrature's round-off residual.
    """
    _check_y(y)
    if not slab_L > 0:
        raise DomainError(f"slab_L must be positive, got {slab_L}")
    if y >= 1.0:
        return 0j
    rule = gauss_legendre(order)
    if profile == "sharp":
        return integrate_2d(lambda a, ap: kernel(y, n1, n2, r_left, a, ap), slab_L, rule)
    if profile == "exponential":
        def weighted(a, ap):
            return kernel(y, n1, n2, r_left, a, ap) * np.exp(-(a + ap) / slab_L)
        return integrate_2d(weighted, EXPONENTIAL_CUTOFF * slab_L, rule)
    raise ConfigurationError(f"unknown profile {profile!r}")


def _x_minus_sin(x):
    # x - sin(x) without cancellation for small x
    if abs(x) > 0.5:
        return x - math.sin(x)
    term = x**3 / 6.0
    total = 0.0
    k = 1
    while True:
        total += term
        k += 2
        term *= -x * x / ((k + 1) * (k + 2))
        if abs(term) <= 1e-18 * abs(total):
            return total + term


def closed_form_density(y, n1, n2, r_left, slab_L) -> float:
    """
    Exact value of the double integral over the sharp slab [0, L]^2.

    With s = sin(mu a), c = cos(mu a) the integrand separates into products of
    the one-dimensional integrals I_ss = int s^2, I_sc = int s c and
    I_cc = int c^2 over [0, L]; the imaginary part integrates to zero by
    antisymmetry under a <-> a'.
    """
    _check_y(y)
    if not slab_L > 0:
        raise DomainError(f"slab_L must be positive, got {slab_L}")
    if y >= 1.0:
        return 0.0
    pre = spectral_prefactor(y, n1, n2)
    mu = y * n1
    L = slab_L
    R = r_left
    d = 1.0 + R
    i_ss = _x_minus_sin(2.0 * mu * L) / (4.0 * mu)
    i_sc = math.sin(mu * L) ** 2 / (2.0 * mu)
    # I_cc^2 - I_ss^2 = (I_cc - I_ss)(I_cc + I_ss) = L * int cos(2 mu a)
    cc_minus_ss = L * math.sin(2.0 * mu * L) / (2.0 * mu)
    sc2 = i_sc * i_sc
    ss2 = i_ss * i_ss
    bracket = (2.0 * d * d * (sc2 + ss2)
               + d**3 * cc_minus_ss
               - 8.0 * R * ss2
               - 4.0 * R * d * (sc2 - ss2))
    return 2.0 * pre * bracket


def expansion_density(y, slab_L, r_left, contrast) -> float:
    """
    Small-slab formula

        contrast^2 (y - 1)^2 Theta(1 - y) / (2 pi 4^2) * [(1 - R)^3 - 2 R^2 (L y)^2]

    with contrast = n2 - n1.
    """
    _check_y(y)
    if y >= 1.0:
        return 0.0
    braces = (1.0 - r_left) ** 3 - 2.0 * r_left**2 * (slab_L * y) ** 2
    return contrast**2 * (y - 1.0) ** 2 / (2.0 * math.pi * 16.0) * braces


def mirror_limit_density(y, slab_L, contrast=1.0) -> float:
    """
    Perfect-mirror formula -2 contrast^2 L^2 (y - 1)^2 y^2 Theta(1 - y) / (2 pi 4^2).

    The overall sign is kept as derived; it is negative for 0 < y < 1.
    """
    _check_y(y)
    if y >= 1.0:
        return 0.0
    return -2.0 * contrast**2 * slab_L**2 * (y - 1.0) ** 2 * y**2 / (2.0 * math.pi * 16.0)


# ------------------------------------------------------------ scenario-level API

def _check_y(y):
    if not y > 0:
        raise DomainError(f"dimensionless frequency must be positive, got y={y}")


def lossless_parameters(scenario: Scenario, y: float):
    """(n1, n2, r_left) as real numbers at frequency `y`, or UnsupportedRegimeError."""
    _check_y(y)
    refl = scenario.reflection
    if isinstance(refl, FixedReflection):
        return 1.0, index_ratio_for_reflection(refl.r_left), float(refl.r_left)
    if isinstance(refl, MediaPair):
        i1 = refractive_index(refl.medium1, y)
        i2 = refractive_index(refl.medium2, y)
        if not (i1.lossless and i2.lossless):
            raise UnsupportedRegimeError(
                f"lossy media (kappa1={i1.kappa}, kappa2={i2.kappa}); "
                "the spectrum is only derived for lossless dielectrics")
        return i1.eta, i2.eta, fresnel(i1.eta, i2.eta).r_left.real
    raise UnsupportedRegimeError("a perfect mirror has no finite index pair; use expansion or mirror_limit")


def _quadrature_value(scenario, y):
    n1, n2, r = lossless_parameters(scenario, y)
    return quadrature_density(y, n1, n2, r, scenario.slab_L, scenario.quad_order, scenario.profile)


def density_quadrature(scenario: Scenario, y: float) -> float:
    """Spectral density at `y` by Gauss-Legendre quadrature (real part)."""
    return _quadrature_value(scenario, y).real


def density_closed_form(scenario: Scenario, y: float) -> float:
    """Spectral density at `y` from the exact closed form (sharp slab, constant indices)."""
    refl = scenario.reflection
    if isinstance(refl, MediaPair) and not (_is_constant(refl.medium1) and _is_constant(refl.medium2)):
        raise UnsupportedRegimeError("closed form requires constant (non-dispersive) indices")
    if scenario.profile != "sharp":
        raise UnsupportedRegimeError("closed form is only available for the sharp slab profile")
    n1, n2, r = lossless_parameters(scenario, y)
    return closed_form_density(y, n1, n2, r, scenario.slab_L)


def density_expansion(scenario: Scenario, y: float) -> float:
    """Spectral density at `y` from the small-slab formula."""
    _check_y(y)
    refl = scenario.reflection
    if isinstance(refl, PerfectMirror):
        return expansion_density(y, scenario.slab_L, -1.0, refl.contrast)
    n1, n2, r = lossless_parameters(scenario, y)
    return expansion_density(y, scenario.slab_L, r, n2 - n1)


def density_mirror_limit(scenario: Scenario, y: float) -> float:
    """Spectral density at `y` from the perfect-mirror formula."""
    refl = scenario.reflection
    if not isinstance(refl, PerfectMirror):
        raise ConfigurationError("mirror_limit applies only to a perfect-mirror scenario")
    return mirror_limit_density(y, scenario.slab_L, refl.contrast)


_DENSITY = {
    "closed_form": density_closed_form,
    "expansion": density_expansion,
    "mirror_limit": density_mirror_limit,
}


def _evaluate_point(scenario, y):
    try:
        if scenario.method == "quadrature":
            return _quadrature_value(scenario, y)
        return complex(_DENSITY[scenario.method](scenario, y))
    except DceError as exc:
        exc.y = y
        exc.args = (f"at y={y!r}: {exc}",)
        raise


def run_scenario(scenario: Scenario, workers: int = 1) -> SpectrumResult:
    """
    Evaluate the scenario's method on every grid frequency.

    Grid points are independent; with ``workers > 1`` they are evaluated on a
    thread pool and merged in grid order, so the result does not depend on
    the number of workers.
    """
    grid = scenario.y_grid
    if workers > 1 and len(grid) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            values = list(pool.map(lambda y: _evaluate_point(scenario, y), grid))
    else:
        values = [_evaluate_point(scenario, y) for y in grid]
    values = np.array(values, dtype=complex).reshape(len(grid))
    density = values.real.copy()
    residual = float(np.max(np.abs(values.imag))) if len(grid) else 0.0
    return SpectrumResult(
        y=np.array(grid, dtype=float),
        density=density,
        max_imag_residual=residual,
        method=scenario.method,
        scenario=scenario,
    )
