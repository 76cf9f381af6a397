"""Single-resonance Lorentz permittivity and the passive complex refractive index.

Frequencies are dimensionless ratios w = omega/omega_0, lengths are in units
of c/omega_0 and temperatures in hbar*omega_0/k_B throughout the package, so
hbar, c and epsilon_0 never appear explicitly.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass

from .errors import SingularMediumError

__all__ = ["LorentzParams", "ComplexIndex", "permittivity", "refractive_index"]


@dataclass(frozen=True)
class LorentzParams:
    """Material constants of the slab, as ratios to the resonance frequency."""

    plasma_ratio: float
    damping_ratio: float
    resonance_frequency: float = 1.0

    def __post_init__(self):
        if self.plasma_ratio < 0:
            raise ValueError("plasma_ratio must be >= 0")
        if self.damping_ratio < 0:
            raise ValueError("damping_ratio must be >= 0")
        if self.resonance_frequency <= 0:
            raise ValueError("resonance_frequency must be > 0")


@dataclass(frozen=True)
class ComplexIndex:
    """Refractive index n = eta + i*kappa on the passive branch."""

    eta: float
    kappa: float

    def __post_init__(self):
        if self.eta < 0:
            raise ValueError("eta must be >= 0 on the principal branch")
        if self.kappa < 0:
            raise ValueError("kappa must be >= 0 for a passive medium")

    @property
    def value(self) -> complex:
        return complex(self.eta, self.kappa)

    @property
    def squared_magnitude(self) -> float:
        return self.eta * self.eta + self.kappa * self.kappa


def permittivity(params: LorentzParams, omega: float) -> complex:
    """eps(w) = 1 + (wp/w0)^2 / (1 - w^2 - i*(gamma/w0)*w), w in units of w0."""
    if omega < 0:
        raise ValueError("omega must be >= 0")
    w = omega / params.resonance_frequency
    denom = complex(1.0 - w * w, -params.damping_ratio * w)
    if denom == 0:
        raise SingularMediumError(
            "undamped resonance pole: gamma = 0 at omega = omega_0"
        )
    eps = 1.0 + params.plasma_ratio**2 / denom
    # normalize a signed zero so the principal square root lands on Im >= 0
    if eps.imag == 0.0:
        eps = complex(eps.real, 0.0)
    return eps


def refractive_index(params: LorentzParams, omega: float) -> ComplexIndex:
    """Principal square root of the permittivity with Im n >= 0.

    Inside an undamped polariton gap eps is negative real and the index comes
    out purely imaginary (evanescent tunnelling); the construction keeps
    kappa > 0 there.
    """
    root = cmath.sqrt(permittivity(params, omega))
    if root.imag < 0:  # only reachable through rounding of a signed zero
        root = -root
    return ComplexIndex(eta=root.real, kappa=root.imag)
