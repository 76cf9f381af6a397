"""Exception types shared across the package."""


class SingularMediumError(ValueError):
    """Permittivity evaluated exactly at an undamped resonance pole."""


class DegenerateScatteringError(ValueError):
    """Scattering denominator vanished (only possible for active media)."""


class NonPhysicalAbsorptionError(ValueError):
    """Absorption fell outside [0, 1] beyond numerical tolerance."""


class QuadratureConvergenceError(RuntimeError):
    """An adaptive quadrature failed to meet its tolerances."""


class UndefinedObservableError(ValueError):
    """An observable's defining ratio has a vanishing denominator."""


class ApproximationDomainError(ValueError):
    """Parameters lie outside the validity domain of a narrowband closed form."""
