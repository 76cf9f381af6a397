"""Measurable quantities of the transmitted field.

Three families live here:

* single-frequency photon statistics of the output port (quadrature variance,
  squeezing parameter, Mandel Q), each available both as the closed-form
  state sum and through an independent beam-splitter moment route used to
  cross-validate it;
* the spectral integrals describing a transmitted Gaussian pulse and the
  slab's thermal emission, by direct quadrature and by narrowband closed
  forms built on Bose-weighted exponential moments (trigamma sums);
* the two-time second-order coherence assembled from those pieces.

The output mode obeys a_out = T a_in + R b_vac + F with a Langevin noise F of
zero mean, <F^dag F> = noise and Gaussian (thermal) higher moments; the
vacuum port enters observables only through commutators.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import brentq
from scipy.special import logsumexp

from .errors import ApproximationDomainError, UndefinedObservableError
from .medium import ComplexIndex, LorentzParams, refractive_index
from .numerics import QuadratureSpec, bose_cutoff, integrate, trigamma_sum
from .scattering import ScatteringAmplitudes, SlabGeometry, absorption, slab_amplitudes
from .states import (
    GaussianSpectrum,
    FockCoefficients,
    SphereStateParams,
    gaussian_spectrum_value,
    log_amplitude_factors,
    log_state_weights,
    state_number_moments,
)
from .thermal import ThermalEnvironment, bose_weight

__all__ = [
    "OutputMoments",
    "CorrelationPoint",
    "SlabContext",
    "solve_carrier_ratio",
    "beam_splitter_moments",
    "quadrature_variance",
    "quadrature_variance_y",
    "squeezing_parameter",
    "mandel_q",
    "transmitted_pulse_amplitude",
    "thermal_noise_correlation",
    "bose_exponential_moment",
    "transmitted_pulse_intensity_narrowband",
    "thermal_noise_correlation_narrowband",
    "second_order_coherence",
    "second_order_coherence_thermal",
]


# ---------------------------------------------------------------------------
# single-frequency photon statistics
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class OutputMoments:
    """First and second moments of the output mode at one frequency."""

    mean_photon: float
    mean_photon_square: float
    x_mean: float
    x_square: float
    y_mean: float
    y_square: float

    @property
    def x_variance(self) -> float:
        return self.x_square - self.x_mean**2

    @property
    def y_variance(self) -> float:
        return self.y_square - self.y_mean**2

    @property
    def mandel_q(self) -> float:
        if self.mean_photon <= 0:
            raise UndefinedObservableError("Mandel Q undefined for <n> = 0")
        variance = self.mean_photon_square - self.mean_photon**2
        return (variance - self.mean_photon) / self.mean_photon


@dataclass(frozen=True)
class CorrelationPoint:
    """One sample of the two-time coherence g2(t_r, tau)."""

    retarded_time: float
    delay: float
    g2: float

    def __post_init__(self):
        if self.g2 < 0:
            raise ValueError("g2 must be >= 0")


def beam_splitter_moments(
    coeffs: FockCoefficients, transmission: complex, noise: float
) -> OutputMoments:
    """Output moments computed directly from the input Fock coefficients.

    Input-state moments <a>, <a^2>, <n>, <n^2> are summed term by term; the
    noise enters through its thermal Gaussian statistics (<F> = 0,
    <F^dag F> = noise, <F F> = 0, fourth moments by Gaussian factorization).
    This is the validation route for the closed-form state sums and shares no
    code with them.
    """
    if noise < 0:
        raise ValueError("noise must be >= 0")
    c = coeffs.values
    n = np.arange(len(c), dtype=float)
    probs = np.abs(c) ** 2
    nbar = float(np.sum(n * probs))
    nsq = float(np.sum(n * n * probs))
    ladder1 = complex(np.sum(np.conj(c[:-1]) * c[1:] * np.sqrt(n[1:])))
    if len(c) > 2:
        ladder2 = complex(
            np.sum(np.conj(c[:-2]) * c[2:] * np.sqrt(n[1:-1] * (n[1:-1] + 1.0)))
        )
    else:
        ladder2 = 0.0

    t = complex(transmission)
    t2 = abs(t) ** 2
    amp = t * ladder1  # <a_out>
    pair = t * t * ladder2  # <a_out^2>

    x_mean = amp.real
    y_mean = amp.imag
    base = 1.0 + 2.0 * noise + 2.0 * t2 * nbar
    x_square = 0.25 * (base + 2.0 * pair.real)
    y_square = 0.25 * (base - 2.0 * pair.real)

    mean_out = t2 * nbar + noise
    normal_fourth = t2 * t2 * (nsq - nbar) + 4.0 * t2 * noise * nbar + 2.0 * noise**2
    return OutputMoments(
        mean_photon=mean_out,
        mean_photon_square=normal_fourth + mean_out,
        x_mean=x_mean,
        x_square=x_square,
        y_mean=y_mean,
        y_square=y_square,
    )


def _ladder_sums(params: SphereStateParams) -> tuple[float, float]:
    """Normalized one- and two-step ladder sums of the state weights.

    S1 = sum_n d_n d_{n+1} sqrt(n+1) |Z|^{2n} / M and the analogous two-step
    S2, with d_n = sqrt(C(N,n)) [g]!(n); <a> = Z S1 and <a^2> = Z^2 S2.
    """
    log_d = log_amplitude_factors(params)
    log_norm = logsumexp(log_state_weights(params))
    mod = abs(params.amplitude)
    top = params.dimension

    def shifted_sum(step: int) -> float:
        count = top + 1 - step
        if count <= 0:
            return 0.0
        n = np.arange(count, dtype=float)
        if mod == 0.0:
            zpow = np.where(n == 0, 0.0, -np.inf)
        else:
            zpow = 2.0 * n * math.log(mod)
        if step == 1:
            root = 0.5 * np.log(n + 1.0)
        else:
            root = 0.5 * np.log((n + 1.0) * (n + 2.0))
        logs = log_d[:count] + log_d[step:] + root + zpow
        return float(np.exp(logsumexp(logs) - log_norm))

    return shifted_sum(1), shifted_sum(2)


def _variance_from_sums(params, transmission, noise, pair_sign: float) -> float:
    t = complex(transmission)
    if noise < 0:
        raise ValueError("noise must be >= 0")
    if abs(t) > 1.0 + 1e-12:
        raise ValueError("|T| must be <= 1 for a passive slab")

    log_w = log_state_weights(params)
    probs = np.exp(log_w - logsumexp(log_w))
    n = np.arange(params.dimension + 1, dtype=float)
    t2 = abs(t) ** 2

    diagonal = float(np.sum(probs * (2.0 * n * t2 + 1.0 + 2.0 * noise)))
    s1, s2 = _ladder_sums(params)
    zt_pair = 2.0 * ((params.amplitude * t) ** 2).real * pair_sign
    cross = 2.0 * abs(params.amplitude) ** 2 * t2

    variance = 0.25 * (diagonal + s2 * zt_pair - s1 * s1 * (zt_pair + cross))
    if variance < -1e-12:
        raise UndefinedObservableError(
            f"closed-form variance came out negative ({variance!r})"
        )
    return max(variance, 0.0)


def quadrature_variance(
    params: SphereStateParams, transmission: complex, noise: float
) -> float:
    """Closed-form variance of the in-phase quadrature of the output mode.

    Single-frequency reduction: ``transmission`` is T at the probe frequency
    and ``noise`` the noise-operator second moment nbar * A there.  All
    combinatorial sums run in log space.
    """
    return _variance_from_sums(params, transmission, noise, pair_sign=+1.0)


def quadrature_variance_y(
    params: SphereStateParams, transmission: complex, noise: float
) -> float:
    """Same closed form for the out-of-phase quadrature (pair terms flip sign)."""
    return _variance_from_sums(params, transmission, noise, pair_sign=-1.0)


def squeezing_parameter(variance: float) -> float:
    """S = 4 var - 1; negative values mean squeezing below the vacuum level."""
    if variance < 0:
        raise ValueError("variance must be >= 0")
    return 4.0 * variance - 1.0


def mandel_q(params: SphereStateParams, transmission: complex, noise: float) -> float:
    """Closed-form Mandel Q of the output mode at one probe frequency."""
    if noise < 0:
        raise ValueError("noise must be >= 0")
    t2 = abs(complex(transmission)) ** 2
    t4 = t2 * t2

    log_w = log_state_weights(params)
    probs = np.exp(log_w - logsumexp(log_w))
    n = np.arange(params.dimension + 1, dtype=float)

    direct = float(
        np.sum(probs * (n * n * t4 - n * t4 + 4.0 * n * t2 * noise + 2.0 * noise**2))
    )
    mean = float(np.sum(probs * n))
    product = mean * mean * t4 + noise**2 + 2.0 * mean * t2 * noise
    denominator = t2 * mean + noise
    if denominator <= 0:
        raise UndefinedObservableError("Mandel Q undefined: no photons at the output")
    q = (direct - product) / denominator
    if q < -1.0 - 1e-9:
        raise UndefinedObservableError(f"Mandel Q below -1 ({q!r})")
    return q


# ---------------------------------------------------------------------------
# slab context for pulse / coherence calculations
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SlabContext:
    """Slab material and geometry together with the pulse carrier.

    ``carrier_ratio`` is omega_c/omega_0; pulse-side quantities (times,
    pulse lengths, temperatures) are expressed in carrier units, while the
    material response is evaluated at the corresponding physical frequency.
    """

    material: LorentzParams
    geometry: SlabGeometry
    carrier_ratio: float

    def __post_init__(self):
        if self.carrier_ratio <= 0:
            raise ValueError("carrier_ratio must be > 0")

    @property
    def half_thickness_carrier(self) -> float:
        return self.geometry.half_thickness * self.carrier_ratio

    def index_at_carrier(self) -> ComplexIndex:
        return refractive_index(self.material, self.carrier_ratio)

    def amplitudes(self, omega: float) -> ScatteringAmplitudes:
        """Slab amplitudes at ``omega`` given in carrier units."""
        physical = omega * self.carrier_ratio
        n = refractive_index(self.material, physical)
        return slab_amplitudes(n, physical, self.geometry)

    def transmission_at_carrier(self) -> complex:
        return self.amplitudes(1.0).transmission

    def fringe_spacing(self) -> float:
        """Fabry-Perot fringe period of the slab response, in carrier units."""
        eta = max(self.index_at_carrier().eta, 0.1)
        return math.pi / (2.0 * eta * self.half_thickness_carrier)


def solve_carrier_ratio(
    material: LorentzParams,
    kappa_target: float,
    bracket: tuple[float, float] = (1e-3, 0.999),
) -> float:
    """Lowest frequency (in omega_0 units) where the extinction coefficient
    reaches ``kappa_target``, searched below the resonance."""
    if kappa_target <= 0:
        raise ValueError("kappa_target must be > 0")

    def gap(w: float) -> float:
        return refractive_index(material, w).kappa - kappa_target

    lo, hi = bracket
    if gap(lo) > 0 or gap(hi) < 0:
        raise ValueError(
            f"kappa_target {kappa_target} not bracketed on {bracket}"
        )
    return float(brentq(gap, lo, hi, xtol=1e-14, rtol=1e-15))


# ---------------------------------------------------------------------------
# spectral integrals
# ---------------------------------------------------------------------------


def _oscillation_points(lo: float, hi: float, t: float) -> list[float] | None:
    if abs(t) * (hi - lo) <= 10.0:
        return None
    step = math.pi / abs(t)
    return list(np.arange(lo + step, hi, step))


def transmitted_pulse_amplitude(
    t: float,
    spec: GaussianSpectrum,
    ctx: SlabContext,
    quad: QuadratureSpec | None = None,
) -> complex:
    """int_0^inf dw e^{-iwt} T(w) Z(w), in carrier units.

    The Gaussian support is windowed at the point where the envelope falls
    below 1e-14 of its peak; oscillatory factors at large |t| are handled by
    breakpoints at the period scale.
    """
    width = 12.0 / spec.pulse_length  # |Z| down to exp(-36) at the window edge
    lo = max(1e-9, spec.central_frequency - width)
    hi = spec.central_frequency + width

    def integrand(w: float) -> complex:
        amp = ctx.amplitudes(w).transmission
        return cmath.exp(-1j * w * t) * amp * gaussian_spectrum_value(spec, w)

    result = integrate(integrand, lo, hi, quad, points=_oscillation_points(lo, hi, t))
    return result.value


def thermal_noise_correlation(
    t: float,
    env: ThermalEnvironment,
    ctx: SlabContext,
    quad: QuadratureSpec | None = None,
) -> complex:
    """int_0^inf dw w e^{-iwt} nbar(w) (1 - |R|^2 - |T|^2), in carrier units.

    Vanishes identically for a cold or lossless slab.  The Bose factor fixes
    the cutoff; breakpoints are seeded at the Fabry-Perot fringe spacing and
    at the oscillation period of the delay factor.
    """
    if env.temperature == 0.0:
        return 0.0j
    hi = bose_cutoff(1.0 / env.temperature)

    def integrand(w: float) -> complex:
        a = absorption(ctx.amplitudes(w))
        return bose_weight(w, env) * a * cmath.exp(-1j * w * t)

    fringe = ctx.fringe_spacing()
    points = list(np.arange(fringe, hi, fringe))
    osc = _oscillation_points(0.0, hi, t)
    if osc:
        points = sorted(set(points) | set(osc))
    spec = quad or QuadratureSpec(absolute_tolerance=1e-13, relative_tolerance=1e-10)
    result = integrate(integrand, 0.0, hi, spec, points=points)
    return result.value


def bose_exponential_moment(
    t: float,
    decay: float,
    phase: float,
    env: ThermalEnvironment,
    half_thickness: float,
) -> complex:
    """l^2 * int_0^inf dw w e^{-[decay*l - i(phase*l + t)] w} / (e^{w/theta} - 1).

    Evaluated as the trigamma-type series l^2 sum_m 1/(s + m/theta)^2 with
    s = decay*l - i(phase*l + t); ``half_thickness`` and all times are in
    carrier units.  Requires decay >= 0 (else the integral diverges) and a
    strictly positive temperature.
    """
    if decay < 0:
        raise ApproximationDomainError("divergent Bose moment: decay < 0")
    if env.temperature <= 0:
        raise ApproximationDomainError("Bose moment undefined at theta = 0")
    if half_thickness <= 0:
        raise ValueError("half_thickness must be > 0")
    s = complex(decay * half_thickness, -(phase * half_thickness + t))
    beta = 1.0 / env.temperature
    return half_thickness**2 * trigamma_sum(s, beta, rel_tol=1e-12)


def transmitted_pulse_intensity_narrowband(
    t: float, spec: GaussianSpectrum, ctx: SlabContext
) -> float:
    """Narrowband |J1|^2: Gaussian envelope with slab-dispersion denominator.

    Valid when the pulse bandwidth is well below the carrier; the denominator
    brace turns non-positive outside that regime and raises.  Natural units:
    the common spectral prefactor shared with the thermal correlation is 1.
    """
    idx = ctx.index_at_carrier()
    eta, kappa = idx.eta, idx.kappa
    if eta <= 0:
        raise ApproximationDomainError("narrowband form requires eta > 0")
    length = spec.pulse_length
    l = ctx.half_thickness_carrier
    u = eta * eta - 1.0
    brace = length**2 * (1.0 + 2.0 * u * u) - 4.0 * length**3 * kappa * u * u * (
        eta * eta + 1.0
    ) / eta
    if brace <= 0:
        raise ApproximationDomainError(
            "narrowband intensity denominator non-positive; "
            "pulse too long for this extinction"
        )
    t2 = abs(ctx.transmission_at_carrier()) ** 2
    return 2.0 * math.sqrt(2.0 * math.pi) * t2 * math.exp(-2.0 * t * t / length**2) / (
        l * brace
    )


def thermal_noise_correlation_narrowband(
    t: float, env: ThermalEnvironment, ctx: SlabContext
) -> complex:
    """Narrowband thermal correlation as a five-term combination of Bose
    exponential moments, with the index frozen at the carrier.

    Real and positive at t = 0; the squared modulus is the narrowband
    counterpart of |thermal_noise_correlation|^2.
    """
    if env.temperature == 0.0:
        return 0.0j
    idx = ctx.index_at_carrier()
    eta, kappa = idx.eta, idx.kappa
    nsq = idx.squared_magnitude
    l = ctx.half_thickness_carrier
    mod_plus = (eta + 1.0) ** 2 + kappa * kappa

    def moment(decay: float, phase: float) -> complex:
        return bose_exponential_moment(t, decay, phase, env, l)

    bracket = (
        eta * mod_plus * moment(0.0, 0.0)
        - 4.0 * nsq * moment(4.0 * kappa, 0.0)
        - eta * (nsq - 2.0 * eta + 1.0) * moment(8.0 * kappa, 0.0)
        + 1j * kappa * (nsq - 1.0) * (moment(4.0 * kappa, eta) - moment(4.0 * kappa, -eta))
        + 2.0 * kappa * kappa * (moment(4.0 * kappa, 4.0 * eta) + moment(4.0 * kappa, -4.0 * eta))
    )
    return 4.0 * bracket / (l * l * mod_plus * mod_plus)


# ---------------------------------------------------------------------------
# two-time second-order coherence
# ---------------------------------------------------------------------------


def _coherence_from_parts(
    mean_w: float,
    fact2_w: float,
    pulse_a: complex,
    pulse_b: complex,
    noise_zero: float,
    noise_tau: complex,
) -> float:
    int_a = abs(pulse_a) ** 2
    int_b = abs(pulse_b) ** 2
    cross = 2.0 * (pulse_a.conjugate() * pulse_b * noise_tau.conjugate()).real
    numerator = (
        mean_w * noise_zero * (int_a + int_b)
        + fact2_w * int_a * int_b
        + mean_w * cross
        + abs(noise_tau) ** 2
        + noise_zero**2
    )
    denominator = (noise_zero + mean_w * int_a) * (noise_zero + mean_w * int_b)
    if denominator <= 0:
        raise UndefinedObservableError(
            "g2 undefined: no photons at the detector at these times"
        )
    return numerator / denominator


def second_order_coherence(
    t_r: float,
    tau: float,
    params: SphereStateParams,
    spec: GaussianSpectrum,
    env: ThermalEnvironment,
    ctx: SlabContext,
    method: str = "narrowband",
    quad: QuadratureSpec | None = None,
) -> float:
    """g2 of the transmitted continuum state at retarded time t_r and delay tau.

    ``method='narrowband'`` assembles the pulse and thermal pieces from the
    carrier-frozen closed forms (the route behind the coherence presets);
    ``method='quadrature'`` integrates the full frequency-dependent response
    instead.  The state enters only through the normalized weights of
    ``params``; setting the amplitude to zero recovers the purely thermal
    limit exactly.

    At theta = 0 the thermal pieces vanish and the result is independent of
    both tau and the pulse shape.
    """
    mean_w, square_w = state_number_moments(params)
    fact2_w = square_w - mean_w

    if method == "narrowband":
        pulse_a = math.sqrt(transmitted_pulse_intensity_narrowband(t_r, spec, ctx))
        pulse_b = math.sqrt(
            transmitted_pulse_intensity_narrowband(t_r + tau, spec, ctx)
        ) * cmath.exp(-1j * tau * spec.central_frequency)
        if env.temperature == 0.0:
            noise_zero, noise_tau = 0.0, 0.0j
        else:
            noise_zero = thermal_noise_correlation_narrowband(0.0, env, ctx).real
            noise_tau = thermal_noise_correlation_narrowband(tau, env, ctx)
    elif method == "quadrature":
        pulse_a = transmitted_pulse_amplitude(t_r, spec, ctx, quad)
        pulse_b = transmitted_pulse_amplitude(t_r + tau, spec, ctx, quad)
        noise_zero = thermal_noise_correlation(0.0, env, ctx, quad).real
        noise_tau = thermal_noise_correlation(tau, env, ctx, quad)
    else:
        raise ValueError(f"unknown method {method!r}")

    return _coherence_from_parts(mean_w, fact2_w, pulse_a, pulse_b, noise_zero, noise_tau)


def second_order_coherence_thermal(
    tau: float,
    env: ThermalEnvironment,
    ctx: SlabContext,
    method: str = "quadrature",
    quad: QuadratureSpec | None = None,
) -> float:
    """Thermal-only limit 1 + |J(tau)/J(0)|^2 of the two-time coherence.

    Equals 2 at zero delay and relaxes to 1 beyond the thermal coherence
    time.  Requires a thermally emitting slab (theta > 0 and loss > 0).
    """
    if method == "quadrature":
        noise_zero = thermal_noise_correlation(0.0, env, ctx, quad)
        noise_tau = thermal_noise_correlation(tau, env, ctx, quad)
    elif method == "narrowband":
        noise_zero = thermal_noise_correlation_narrowband(0.0, env, ctx)
        noise_tau = thermal_noise_correlation_narrowband(tau, env, ctx)
    else:
        raise ValueError(f"unknown method {method!r}")
    if abs(noise_zero) == 0.0:
        raise UndefinedObservableError(
            "thermal g2 undefined: the slab emits no thermal photons"
        )
    return 1.0 + abs(noise_tau / noise_zero) ** 2
