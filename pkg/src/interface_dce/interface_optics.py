"""Normal-incidence Fresnel coefficients for a single planar interface."""
from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError, SingularInterfaceError


@dataclass(frozen=True)
class InterfaceCoefficients:
    """
    Amplitude reflection and transmission coefficients.

    ``left`` / ``right`` name the side the light is incident from, following
    the convention that medium 1 occupies x > 0 and medium 2 occupies x < 0.
    """

    r_left: complex
    r_right: complex
    t_left: complex
    t_right: complex


def fresnel(n1, n2) -> InterfaceCoefficients:
    """
    Fresnel coefficients of the interface between media of index `n1` and `n2`.

    Parameters
    ----------
    n1, n2 : complex
        refractive indices of medium 1 (x > 0) and medium 2 (x < 0)

    Returns
    -------
    InterfaceCoefficients
        ``r_left = (n1 - n2)/(n1 + n2) = -r_right``,
        ``t_left = 2 n1/(n1 + n2)``, ``t_right = 2 n2/(n1 + n2)``

    """
    n1 = complex(n1)
    n2 = complex(n2)
    total = n1 + n2
    if total == 0:
        raise SingularInterfaceError(f"n1 + n2 = 0 for n1={n1}, n2={n2}")
    r = (n1 - n2) / total
    return InterfaceCoefficients(
        r_left=r,
        r_right=-r,
        t_left=2.0 * n1 / total,
        t_right=2.0 * n2 / total,
    )


def index_ratio_for_reflection(r_left_target: float) -> float:
    """
    Index ratio n2/n1 that produces the reflection coefficient `r_left_target`.

    Only non-positive targets in (-1, 0] are accepted (medium 2 optically
    denser). The perfect mirror r = -1 would need an infinite index and is
    handled as a separate limit by the spectrum code.
    """
    r = float(r_left_target)
    if not -1.0 < r <= 0.0:
        raise DomainError(f"reflection coefficient must lie in (-1, 0], got {r}")
    return (1.0 - r) / (1.0 + r)
