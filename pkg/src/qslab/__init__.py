"""Quantum optics of nonclassical light transmitted through a lossy dielectric slab.

Dimensionless unit system: frequencies in omega_0 (material resonance) or
omega_c (pulse carrier) as indicated per function, lengths in c/omega_ref,
temperatures in hbar*omega_ref/k_B, times in 1/omega_ref.
"""

from .medium import ComplexIndex, LorentzParams, permittivity, refractive_index
from .scattering import (
    ScatteringAmplitudes,
    SlabGeometry,
    absorption,
    absorption_identity_residual,
    characteristic_matrix_rt,
    noise_mode_coefficients,
    reflection_amplitude,
    slab_amplitudes,
    transmission_amplitude,
)
from .states import (
    FockCoefficients,
    GaussianSpectrum,
    SphereStateParams,
    continuum_normalization,
    deformation_factorial,
    flat_deformation,
    gaussian_spectrum_value,
    input_state_moments,
    sphere_deformation,
    sphere_state_coefficients,
)
from .thermal import (
    ThermalEnvironment,
    coherence_time,
    mean_thermal_photons,
    noise_second_moment,
)
from .observables import (
    CorrelationPoint,
    OutputMoments,
    SlabContext,
    beam_splitter_moments,
    bose_exponential_moment,
    mandel_q,
    quadrature_variance,
    quadrature_variance_y,
    second_order_coherence,
    second_order_coherence_thermal,
    solve_carrier_ratio,
    squeezing_parameter,
    thermal_noise_correlation,
    thermal_noise_correlation_narrowband,
    transmitted_pulse_amplitude,
    transmitted_pulse_intensity_narrowband,
)
from .numerics import QuadratureSpec, integrate, log_binomial, trigamma_sum

__version__ = "0.1.0"
