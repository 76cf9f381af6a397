"""Shared numerical kernels: adaptive quadrature, trigamma-type sums, log-space combinatorics.

All kernels are stateless and safe for concurrent use.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, NamedTuple, Sequence

import numpy as np
from scipy import integrate as _scipy_integrate

from .errors import QuadratureConvergenceError

__all__ = [
    "QuadratureSpec",
    "IntegralResult",
    "integrate",
    "bose_cutoff",
    "trigamma_sum",
    "log_binomial",
]


@dataclass(frozen=True)
class QuadratureSpec:
    """Tolerances and subdivision budget for adaptive quadrature."""

    absolute_tolerance: float = 1e-10
    relative_tolerance: float = 1e-10
    max_subdivisions: int = 400

    def __post_init__(self):
        if self.absolute_tolerance <= 0 or self.relative_tolerance <= 0:
            raise ValueError("quadrature tolerances must be positive")
        if self.max_subdivisions < 1:
            raise ValueError("max_subdivisions must be >= 1")


class IntegralResult(NamedTuple):
    value: complex
    error_estimate: float
    converged: bool


def _quad_real(f, a, b, spec, points):
    out = _scipy_integrate.quad(
        f,
        a,
        b,
        epsabs=spec.absolute_tolerance,
        epsrel=spec.relative_tolerance,
        limit=spec.max_subdivisions,
        points=points,
        full_output=1,
    )
    value, err = out[0], out[1]
    converged = len(out) < 4  # QUADPACK appends a message on trouble
    return value, err, converged


def integrate(
    f: Callable[[float], complex],
    a: float,
    b: float,
    spec: QuadratureSpec | None = None,
    points: Sequence[float] | None = None,
) -> IntegralResult:
    """Adaptive quadrature of a real- or complex-valued integrand on [a, b].

    ``b`` may be ``numpy.inf``.  ``points`` marks interior breakpoints
    (oscillation nodes, spectral features); QUADPACK refuses breakpoints on
    infinite intervals, so they are only honoured for finite ``b``.  On
    non-convergence the best estimate is returned with ``converged=False``
    rather than raised, so callers can decide how hard to fail.
    """
    if spec is None:
        spec = QuadratureSpec()
    if points is not None and not np.isfinite(b):
        points = None
    if points is not None:
        pts = sorted(p for p in points if a < p < b)
        if not pts:
            pts = None
        elif len(pts) > 80:
            # QUADPACK's qagp degrades with very long breakpoint lists; keep a
            # coarse comb and let adaptive refinement do the rest.
            pts = list(np.asarray(pts)[:: max(1, len(pts) // 80)])
        points = pts

    re, re_err, re_ok = _quad_real(lambda x: f(x).real, a, b, spec, points)
    im, im_err, im_ok = _quad_real(lambda x: f(x).imag, a, b, spec, points)
    return IntegralResult(complex(re, im), re_err + im_err, re_ok and im_ok)


def bose_cutoff(beta: float, safety: float = 45.0) -> float:
    """Upper integration limit for integrands carrying a Bose factor exp(-beta*w)."""
    if beta <= 0:
        raise ValueError("beta must be positive")
    return safety / beta


def trigamma_sum(s: complex, beta: float, rel_tol: float = 1e-12) -> complex:
    """Sum_{m>=1} 1/(s + m*beta)^2 for Re(s) >= 0, beta > 0.

    Direct summation of a leading block plus an Euler-Maclaurin tail through
    the f''' term.  The tail bound (the next Euler-Maclaurin term) is driven
    below ``rel_tol`` of the running total by doubling the block size.
    """
    if beta <= 0:
        raise ValueError("beta must be positive")
    s = complex(s)
    if s.real < 0:
        raise ValueError("requires Re(s) >= 0")

    n_terms = 64
    while True:
        m = np.arange(1, n_terms + 1)
        partial = np.sum(1.0 / (s + m * beta) ** 2)
        w = s + (n_terms + 1) * beta
        tail = 1.0 / (beta * w) + 0.5 / w**2 + beta / (6.0 * w**3) - beta**3 / (30.0 * w**5)
        total = partial + tail
        bound = abs(beta**5 / (42.0 * w**7))
        if bound <= rel_tol * max(abs(total), 1e-300):
            return complex(total)
        if n_terms > 4_000_000:
            raise QuadratureConvergenceError("trigamma_sum failed to converge")
        n_terms *= 2


def log_binomial(n_total: int, k: int) -> float:
    """ln C(n_total, k) via log-gamma."""
    if k < 0 or k > n_total:
        raise ValueError(f"binomial index out of range: C({n_total}, {k})")
    return (
        math.lgamma(n_total + 1) - math.lgamma(k + 1) - math.lgamma(n_total - k + 1)
    )
