"""Thermal occupation of the slab and the noise-operator second moment."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .scattering import ScatteringAmplitudes, absorption

__all__ = [
    "ThermalEnvironment",
    "mean_thermal_photons",
    "bose_weight",
    "noise_second_moment",
    "coherence_time",
]


@dataclass(frozen=True)
class ThermalEnvironment:
    """Slab temperature in units of hbar*omega_ref/k_B."""

    temperature: float

    def __post_init__(self):
        if self.temperature < 0:
            raise ValueError("temperature must be >= 0")


def mean_thermal_photons(omega: float, env: ThermalEnvironment) -> float:
    """Bose occupation 1/(exp(omega/theta) - 1); zero at theta = 0."""
    if omega <= 0:
        raise ValueError("omega must be > 0")
    if env.temperature == 0.0:
        return 0.0
    x = omega / env.temperature
    if x > 700.0:  # exp would overflow; occupation is indistinguishable from 0
        return 0.0
    return 1.0 / math.expm1(x)


def bose_weight(omega: float, env: ThermalEnvironment) -> float:
    """omega * nbar(omega), finite down to omega -> 0 (limit theta)."""
    if env.temperature == 0.0:
        return 0.0
    x = omega / env.temperature
    if x < 1e-8:
        # omega/expm1(x) = theta * (1 - x/2 + x^2/12 - ...)
        return env.temperature * (1.0 - 0.5 * x + x * x / 12.0)
    if x > 700.0:
        return 0.0
    return omega / math.expm1(x)


def noise_second_moment(amps: ScatteringAmplitudes, env: ThermalEnvironment) -> float:
    """<F^dag F> = nbar(omega, theta) * (1 - |R|^2 - |T|^2), nonnegative."""
    return mean_thermal_photons(amps.omega, env) * absorption(amps)


def coherence_time(env: ThermalEnvironment) -> float:
    """Thermal coherence time 1/theta in units of 1/omega_ref."""
    if env.temperature <= 0:
        raise ValueError("coherence time requires theta > 0")
    return 1.0 / env.temperature
