"""Deformed-oscillator algebra and nonlinear coherent states on a sphere.

The ladder operator of a two-dimensional oscillator on a sphere of curvature
lambda acts like a flat finite-dimensional oscillator rescaled by a
deformation factor g(lambda, n); the resulting coherent-like state lives in
the (N+1)-dimensional Fock space spanned by |0>..|N>.  All binomials and
deformation factorials are accumulated in log space: the N = 50 states used
by the coherence presets overflow double-precision factorials otherwise.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np
from scipy.special import logsumexp

from .numerics import QuadratureSpec, integrate, log_binomial

__all__ = [
    "SphereStateParams",
    "FockCoefficients",
    "GaussianSpectrum",
    "LogValue",
    "flat_deformation",
    "sphere_deformation",
    "deformation_factorial",
    "sphere_state_coefficients",
    "input_state_moments",
    "gaussian_spectrum_value",
    "continuum_normalization",
    "log_amplitude_factors",
    "log_state_weights",
    "state_number_moments",
]

NORMALIZATION_TOLERANCE = 1e-12


class LogValue(NamedTuple):
    """A positive quantity carried in both linear and log space.

    ``value`` may overflow to inf for large parameters; ``log`` is always
    finite and is the authoritative representation.
    """

    value: float
    log: float


@dataclass(frozen=True)
class SphereStateParams:
    """Curvature, Fock dimension N+1 and complex amplitude of the input state."""

    curvature: float
    dimension: int
    amplitude: complex

    def __post_init__(self):
        if self.curvature < 0:
            raise ValueError("curvature must be >= 0")
        if self.dimension < 1:
            raise ValueError("dimension (N) must be >= 1")


@dataclass(frozen=True)
class GaussianSpectrum:
    """Gaussian wavepacket: pulse length L in units c/omega_c, carrier at
    ``central_frequency`` in the chosen frequency unit (1.0 in carrier units)."""

    pulse_length: float
    central_frequency: float = 1.0

    def __post_init__(self):
        if self.pulse_length <= 0:
            raise ValueError("pulse_length must be > 0")
        if self.central_frequency <= 0:
            raise ValueError("central_frequency must be > 0")


@dataclass(frozen=True)
class FockCoefficients:
    """Normalized expansion coefficients c_n over |0>..|N>."""

    values: np.ndarray

    def __post_init__(self):
        values = np.asarray(self.values, dtype=complex)
        object.__setattr__(self, "values", values)
        norm = float(np.sum(np.abs(values) ** 2))
        if abs(norm - 1.0) > 1e-9:
            raise ValueError(f"coefficients not normalized: sum |c_n|^2 = {norm!r}")

    def __len__(self) -> int:
        return len(self.values)


def flat_deformation(n: int, dimension: int) -> float:
    """sqrt(N + 1 - n); vanishes one step above the top of the ladder."""
    if n < 0 or n > dimension + 1:
        raise ValueError(f"n = {n} outside 0..N+1 with N = {dimension}")
    return math.sqrt(dimension + 1 - n)


def sphere_deformation(curvature: float, n: int, dimension: int) -> float:
    """Curvature factor g(lambda, n); g -> 1 in the flat limit lambda -> 0."""
    if curvature < 0:
        raise ValueError("curvature must be >= 0")
    if n < 0 or n > dimension:
        raise ValueError(f"n = {n} outside 0..N with N = {dimension}")
    root = math.sqrt(1.0 + 0.25 * curvature * curvature)
    return math.sqrt(
        (curvature * (dimension + 1 - n) + root) * (curvature * n + root)
    )


def deformation_factorial(curvature: float, n: int, dimension: int) -> LogValue:
    """Product g(lambda, n) g(lambda, n-1) ... g(lambda, 1), with the empty
    product equal to 1."""
    if n < 0 or n > dimension:
        raise ValueError(f"n = {n} outside 0..N with N = {dimension}")
    log_total = 0.0
    for k in range(1, n + 1):
        log_total += math.log(sphere_deformation(curvature, k, dimension))
    try:
        linear = math.exp(log_total)
    except OverflowError:
        linear = math.inf
    return LogValue(value=linear, log=log_total)


def log_amplitude_factors(params: SphereStateParams) -> np.ndarray:
    """log of sqrt(C(N,n)) * [g]!(n) for n = 0..N."""
    big_n = params.dimension
    return np.array(
        [
            0.5 * log_binomial(big_n, n)
            + deformation_factorial(params.curvature, n, big_n).log
            for n in range(big_n + 1)
        ]
    )


def log_state_weights(params: SphereStateParams) -> np.ndarray:
    """log of the unnormalized Fock weights C(N,n) ([g]!)^2 |Z|^{2n}.

    For Z = 0 only n = 0 carries weight (log 0 elsewhere, represented by -inf).
    """
    log_d = log_amplitude_factors(params)
    mod = abs(params.amplitude)
    n = np.arange(params.dimension + 1, dtype=float)
    if mod == 0.0:
        out = np.full_like(log_d, -np.inf)
        out[0] = 2.0 * log_d[0]
        return out
    return 2.0 * log_d + 2.0 * n * math.log(mod)


def sphere_state_coefficients(params: SphereStateParams) -> FockCoefficients:
    """c_n = sqrt(C(N,n)) [g]!(n) Z^n / sqrt(M), normalized by construction."""
    big_n = params.dimension
    log_w = log_state_weights(params)
    log_norm = logsumexp(log_w)
    moduli = np.exp(0.5 * (log_w - log_norm))
    phase = cmath.phase(params.amplitude) if params.amplitude != 0 else 0.0
    phases = np.exp(1j * phase * np.arange(big_n + 1))
    return FockCoefficients(values=moduli * phases)


def input_state_moments(coeffs: FockCoefficients, order: int) -> float:
    """<n> (order 1) or <n^2> (order 2) of a normalized Fock expansion."""
    if order not in (1, 2):
        raise ValueError("order must be 1 or 2")
    n = np.arange(len(coeffs), dtype=float)
    probs = np.abs(coeffs.values) ** 2
    return float(np.sum(n**order * probs))


def state_number_moments(params: SphereStateParams) -> tuple[float, float]:
    """(<n>, <n^2>) evaluated from the log-space weights, valid at any N."""
    log_w = log_state_weights(params)
    log_norm = logsumexp(log_w)
    probs = np.exp(log_w - log_norm)
    n = np.arange(params.dimension + 1, dtype=float)
    return float(np.sum(n * probs)), float(np.sum(n * n * probs))


def gaussian_spectrum_value(spec: GaussianSpectrum, omega: float) -> float:
    """Amplitude (L^2/2pi)^(1/4) exp[-L^2 (w - w_c)^2 / 4] with c = 1.

    The modulus squared integrates to one over the real line, which is what
    lets the continuum-state normalization collapse to pure combinatorics.
    """
    if omega < 0:
        raise ValueError("omega must be >= 0")
    length = spec.pulse_length
    detune = omega - spec.central_frequency
    return (length**2 / (2.0 * math.pi)) ** 0.25 * math.exp(
        -(length**2) * detune * detune / 4.0
    )


def continuum_normalization(
    params: SphereStateParams,
    spec: GaussianSpectrum,
    quad: QuadratureSpec | None = None,
) -> LogValue:
    """Normalization of the continuum-mode state built on a unit-norm spectrum.

    With int |Z(w)|^2 dw = 1 the frequency integrals drop out and the sum
    reduces to sum_m C(N,m) ([g]!(m))^2.  The unit norm is asserted by
    quadrature (to 1e-9) before the reduction is used rather than assumed.
    """
    width = 10.0 / spec.pulse_length  # amplitude support is a few 1/L wide
    lo = max(0.0, spec.central_frequency - 8.0 * width)
    hi = spec.central_frequency + 8.0 * width
    result = integrate(
        lambda w: complex(gaussian_spectrum_value(spec, w) ** 2, 0.0),
        lo,
        hi,
        quad or QuadratureSpec(absolute_tolerance=1e-12, relative_tolerance=1e-12),
    )
    if abs(result.value.real - 1.0) > 1e-9:
        raise ValueError(
            f"spectrum norm {result.value.real!r} deviates from 1; "
            "pulse too short for the carrier"
        )
    big_n = params.dimension
    logs = np.array(
        [
            log_binomial(big_n, m)
            + 2.0 * deformation_factorial(params.curvature, m, big_n).log
            for m in range(big_n + 1)
        ]
    )
    log_total = float(logsumexp(logs))
    try:
        linear = math.exp(log_total)
    except OverflowError:
        linear = math.inf
    return LogValue(value=linear, log=log_total)
