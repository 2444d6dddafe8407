"""Periodic inertial-factor schedules and the sech convergence bound."""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field

import numpy as np

from .spectral import SpectralBounds


@dataclass(frozen=True)
class InertialSchedule:
    """Periodic sequence of inertial factors; factor(k) = factors[k mod T]."""

    factors: tuple[float, ...]
    kind: str  # "constant" or "chebyshev"
    bounds: SpectralBounds | None = field(default=None)

    def __post_init__(self):
        if len(self.factors) < 1:
            raise ValueError("schedule needs at least one factor")
        if not all(np.isfinite(f) for f in self.factors):
            raise ValueError("inertial factors must be finite")

    @property
    def period(self) -> int:
        return len(self.factors)

    def factor(self, k: int) -> float:
        return self.factors[k % len(self.factors)]


def half_sum_diff(bounds: SpectralBounds) -> tuple[float, float]:
    """(lambda_plus, lambda_minus): half-sum and half-difference of the bounds."""
    return (bounds.l_max + bounds.l_min) / 2.0, (bounds.l_max - bounds.l_min) / 2.0


def chebyshev_factors(bounds: SpectralBounds, T: int) -> InertialSchedule:
    """Chebyshev inertial factors for one period of length T.

    omega_k = 1 / (lambda_plus + lambda_minus * cos((2k+1) pi / (2T))); the
    reciprocals are the roots of the degree-T Chebyshev polynomial shifted to
    [l_min, l_max].
    """
    if T < 1:
        raise ValueError("period T must be >= 1")
    lp, lm = half_sum_diff(bounds)
    k = np.arange(T)
    cos = np.cos((2 * k + 1) * np.pi / (2 * T))
    cos[np.abs(cos) < 1e-15] = 0.0  # cos(pi/2) exactly; T=1 gives 2/(l_min+l_max)
    factors = 1.0 / (lp + lm * cos)
    return InertialSchedule(factors=tuple(float(f) for f in factors),
                            kind="chebyshev", bounds=bounds)


def constant_schedule(omega: float) -> InertialSchedule:
    """Period-1 schedule with a fixed SOR factor; omega=1 is the plain iteration."""
    if not (0 < omega < 2):
        warnings.warn(
            f"constant inertial factor {omega} lies outside the SOR range (0, 2)",
            stacklevel=2,
        )
    return InertialSchedule(factors=(float(omega),), kind="constant")


def convergence_bound_U(bounds: SpectralBounds, T: int) -> float:
    """End-of-period contraction bound sech(T * acosh(l_plus / l_minus)).

    Degenerate bounds (l_min == l_max) give 0: a single eigenvalue is
    annihilated in one Chebyshev step.
    """
    if T < 1:
        raise ValueError("period T must be >= 1")
    lp, lm = half_sum_diff(bounds)
    if lm == 0:
        warnings.warn("degenerate bounds (l_min == l_max): bound is 0", stacklevel=2)
        return 0.0
    return float(1.0 / np.cosh(T * np.arccosh(lp / lm)))


def empirical_contraction(schedule: InertialSchedule, eigenvalues) -> float:
    """max over the supplied eigenvalues of |prod_k (1 - omega_k * lambda)|.

    When the supplied list is the spectrum of B, this is the spectral radius
    of the end-of-period iteration operator.
    """
    lam = np.asarray(eigenvalues, dtype=float)
    if schedule.bounds is not None:
        b = schedule.bounds
        if np.any(lam < b.l_min - 1e-12) or np.any(lam > b.l_max + 1e-12):
            warnings.warn(
                "eigenvalue outside [l_min, l_max]: the sech bound may not apply",
                stacklevel=2,
            )
    prod = np.ones_like(lam)
    for f in schedule.factors:
        prod = prod * (1.0 - f * lam)
    return float(np.max(np.abs(prod)))
