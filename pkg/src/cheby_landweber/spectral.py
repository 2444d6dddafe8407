"""Eigenvalue bounds of the scaled Gram operator B = omega * T*T.

The bounds drive the Chebyshev inertial factors.  They can be measured by
power iteration, prescribed from the Marchenko-Pastur law for i.i.d. random
channels, or supplied by the user.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .operators import LinearOperator, MatrixOperator

POWER_TOL = 1e-10
POWER_MAX_ITER = 5000
DENSE_DIM_LIMIT = 512


@dataclass(frozen=True)
class SpectralBounds:
    """Bounds (l_min, l_max) on the spectrum of B = omega * T*T."""

    l_min: float
    l_max: float
    source: str = "user-supplied"

    def __post_init__(self):
        if not (0 < self.l_min <= self.l_max):
            raise ValueError(
                f"need 0 < l_min <= l_max, got ({self.l_min}, {self.l_max})"
            )


class PowerIterationError(RuntimeError):
    """Power iteration failed to converge; carries the last estimate."""

    def __init__(self, message: str, last_estimate: float, last_vector: np.ndarray):
        super().__init__(message)
        self.last_estimate = last_estimate
        self.last_vector = last_vector


def _power_iterate(matvec, n: int, tol: float, max_iter: int) -> float:
    """Largest eigenvalue of a PSD map by power iteration.

    Deterministic all-ones start; converged when successive Rayleigh
    quotients differ by less than tol.
    """
    v = np.ones(n, dtype=np.complex128) / np.sqrt(n)
    rayleigh = 0.0
    for _ in range(max_iter):
        w = matvec(v)
        nw = np.linalg.norm(w)
        if nw < 1e-300:
            # map annihilates the iterate: eigenvalue 0 within precision
            return 0.0
        v_new = w / nw
        new_rayleigh = float(np.real(np.vdot(v_new, matvec(v_new))))
        if abs(new_rayleigh - rayleigh) < tol:
            return new_rayleigh
        rayleigh = new_rayleigh
        v = v_new
    raise PowerIterationError(
        f"power iteration did not converge in {max_iter} steps "
        f"(last estimate {rayleigh})",
        rayleigh,
        v,
    )


def extreme_eigenvalues(
    op: LinearOperator,
    scale: float = 1.0,
    tol: float = POWER_TOL,
    max_iter: int = POWER_MAX_ITER,
) -> SpectralBounds:
    """Extreme eigenvalues of B = scale * T*T by power iteration.

    l_max comes from power iteration on the Gram map; l_min from power
    iteration on the shifted map l_max*I - B, shifted back.
    """
    if scale <= 0:
        raise ValueError("scale must be positive")
    n = op.in_dim

    def gram(v):
        return scale * op.gram_apply(v)

    l_max = _power_iterate(gram, n, tol, max_iter)

    def shifted(v):
        return l_max * v - gram(v)

    mu = _power_iterate(shifted, n, tol, max_iter)
    l_min = l_max - mu
    # clamp tiny negative round-off
    l_min = max(l_min, np.finfo(float).tiny)
    return SpectralBounds(l_min=l_min, l_max=max(l_max, l_min), source="power-iteration")


def marchenko_pastur_bounds(
    n: int,
    m: int,
    entry_variance: float = 1.0,
    floor_ratio: float = 0.01,
) -> SpectralBounds:
    """Edge eigenvalues of H^H H for an m x n i.i.d. CN(0, v) matrix H.

    The lower edge v*n*(1 - sqrt(m/n))^2 vanishes for square matrices, so it
    is floored at floor_ratio * l_max to keep the Chebyshev factors finite.
    """
    if n < 1 or m < 1:
        raise ValueError("n and m must be positive")
    if entry_variance <= 0:
        raise ValueError("entry_variance must be positive")
    if not (0 < floor_ratio < 1):
        raise ValueError("floor_ratio must lie in (0, 1)")
    ratio = np.sqrt(m / n)
    l_max = entry_variance * n * (1 + ratio) ** 2
    l_min = max(entry_variance * n * (1 - ratio) ** 2, floor_ratio * l_max)
    return SpectralBounds(l_min=l_min, l_max=l_max, source="marchenko-pastur")


def iteration_spectral_radius(H, omega: float) -> float:
    """Spectral radius of I - omega * H^H H via a dense eigensolve."""
    if omega <= 0:
        raise ValueError("omega must be positive")
    H = np.asarray(H, dtype=np.complex128)
    if H.ndim != 2:
        raise ValueError("H must be a matrix")
    if max(H.shape) > DENSE_DIM_LIMIT:
        raise ValueError(f"dimension {max(H.shape)} exceeds dense limit {DENSE_DIM_LIMIT}")
    lam = np.linalg.eigvalsh(H.conj().T @ H)
    return float(np.max(np.abs(1.0 - omega * lam)))


def gram_eigenvalues(H) -> np.ndarray:
    """Eigenvalues of H^H H, ascending (dense Hermitian eigensolve)."""
    H = np.asarray(H, dtype=np.complex128)
    if max(H.shape) > DENSE_DIM_LIMIT:
        raise ValueError(f"dimension {max(H.shape)} exceeds dense limit {DENSE_DIM_LIMIT}")
    return np.linalg.eigvalsh(H.conj().T @ H)


def omega_opt(bounds: SpectralBounds) -> float:
    """Step size with optimal asymptotic rate: 2 / (l_min + l_max)."""
    return 2.0 / (bounds.l_min + bounds.l_max)


def exact_bounds(op: LinearOperator, scale: float = 1.0) -> SpectralBounds:
    """Exact extreme eigenvalues of scale * T*T for dense-matrix operators."""
    if not isinstance(op, MatrixOperator):
        raise TypeError("exact_bounds needs a dense matrix backend")
    lam = scale * gram_eigenvalues(op.matrix)
    l_min = max(float(lam[0]), np.finfo(float).tiny)
    return SpectralBounds(l_min=l_min, l_max=float(lam[-1]), source="exact")
