"""
Complex refractive index models for the two half-spaces.

All frequencies are dimensionless, ``y = omega / omega_0`` where ``omega_0``
is the modulation (mechanical) frequency of the slab.  The index is
``n = eta + i kappa`` and the relative permittivity is ``eps = n**2``.

Branch convention: ``n = sqrt(eps)`` with the principal root, so that
``kappa >= 0`` for any passive medium and ``exp(i y n x)`` decays for x > 0.
"""
from __future__ import annotations

import cmath
from dataclasses import dataclass
from typing import Union

from .errors import DomainError


@dataclass(frozen=True)
class RefractiveIndex:
    """Value of n = eta + i*kappa at one frequency."""

    eta: float
    kappa: float

    def __post_init__(self):
        if not self.eta > 0:
            raise DomainError(f"real part of the index must be positive, got eta={self.eta}")
        if self.kappa < 0:
            raise DomainError(f"active medium (kappa={self.kappa} < 0) is not supported")

    @property
    def value(self) -> complex:
        return complex(self.eta, self.kappa)

    @property
    def lossless(self) -> bool:
        return self.kappa == 0.0


@dataclass(frozen=True)
class ConstantReal:
    """Frequency independent, lossless medium."""

    eta: float

    def __post_init__(self):
        if not self.eta > 0:
            raise DomainError(f"eta must be positive, got {self.eta}")


@dataclass(frozen=True)
class ConstantComplex:
    """Frequency independent medium with (possibly nonzero) extinction."""

    eta: float
    kappa: float

    def __post_init__(self):
        if not self.eta > 0:
            raise DomainError(f"eta must be positive, got {self.eta}")
        if self.kappa < 0:
            raise DomainError(f"kappa must be non-negative, got {self.kappa}")


@dataclass(frozen=True)
class LorentzOscillator:
    """
    Single-pole Lorentz permittivity, parameters in units of omega_0.

        eps(y) = 1 + plasma_y**2 / (resonance_y**2 - y**2 - i * damping_y * y)

    With ``damping_y == 0`` the index is purely imaginary inside the band
    ``resonance_y < y < sqrt(resonance_y**2 + plasma_y**2)``; evaluating there
    raises :class:`DomainError`.
    """

    resonance_y: float
    plasma_y: float
    damping_y: float

    def __post_init__(self):
        if self.resonance_y < 0 or self.plasma_y < 0:
            raise DomainError("resonance_y and plasma_y must be non-negative")
        if self.damping_y < 0:
            raise DomainError(f"damping_y must be non-negative, got {self.damping_y}")


MediumModel = Union[ConstantReal, ConstantComplex, LorentzOscillator]


def _check_frequency(y):
    if not y > 0:
        raise DomainError(f"dimensionless frequency must be positive, got y={y}")


def permittivity(model: MediumModel, y: float) -> complex:
    """
    Relative permittivity eps(y) = n(y)**2 of `model`.

    Parameters
    ----------
    model : MediumModel
        one of ConstantReal, ConstantComplex, LorentzOscillator
    y : float
        dimensionless frequency, must be > 0

    Returns
    -------
    complex
    """
    _check_frequency(y)
    if isinstance(model, ConstantReal):
        return complex(model.eta * model.eta, 0.0)
    if isinstance(model, ConstantComplex):
        return complex(model.eta, model.kappa) ** 2
    if isinstance(model, LorentzOscillator):
        denom = complex(model.resonance_y**2 - y * y, -model.damping_y * y)
        return 1.0 + model.plasma_y**2 / denom
    raise TypeError(f"unknown medium model {model!r}")


def refractive_index(model: MediumModel, y: float) -> RefractiveIndex:
    """Complex refractive index of `model` at dimensionless frequency `y`."""
    _check_frequency(y)
    if isinstance(model, ConstantReal):
        return RefractiveIndex(model.eta, 0.0)
    if isinstance(model, ConstantComplex):
        return RefractiveIndex(model.eta, model.kappa)
    n = cmath.sqrt(permittivity(model, y))
    # principal root: Re n >= 0, and Im eps >= 0 gives Im n >= 0; + 0.0 drops a signed zero
    return RefractiveIndex(n.real, n.imag + 0.0)
