"""Linear operators on discretized complex Hilbert spaces.

Two backends are provided: a dense matrix operator and a cyclic-convolution
operator for uniform-grid discretizations of convolution integrals.  All
operators are immutable after construction and their methods are pure.
"""

from __future__ import annotations

import numpy as np


class DimensionMismatchError(ValueError):
    """Input vector dimension does not match the operator."""


def as_cvector(values) -> np.ndarray:
    """Coerce input to a 1-D complex128 array."""
    v = np.asarray(values, dtype=np.complex128)
    if v.ndim != 1:
        raise ValueError(f"expected a 1-D vector, got shape {v.shape}")
    return v


def inner(u, v, weight: float = 1.0) -> complex:
    """Inner product sum(u * conj(v)), optionally weighted by a bin width."""
    u = as_cvector(u)
    v = as_cvector(v)
    return weight * complex(np.sum(u * np.conj(v)))


def norm(v, weight: float = 1.0) -> float:
    """Inner-product norm; `weight` is the quadrature weight per bin."""
    return float(np.sqrt(weight) * np.linalg.norm(as_cvector(v)))


class LinearOperator:
    """Forward map with adjoint, between spaces of fixed dimensions."""

    in_dim: int
    out_dim: int

    def _apply(self, x: np.ndarray) -> np.ndarray:
        raise NotImplementedError

    def _adjoint_apply(self, y: np.ndarray) -> np.ndarray:
        raise NotImplementedError

    def apply(self, x) -> np.ndarray:
        x = as_cvector(x)
        if x.shape[0] != self.in_dim:
            raise DimensionMismatchError(
                f"apply: got dim {x.shape[0]}, operator expects {self.in_dim}"
            )
        return self._apply(x)

    def adjoint_apply(self, y) -> np.ndarray:
        y = as_cvector(y)
        if y.shape[0] != self.out_dim:
            raise DimensionMismatchError(
                f"adjoint_apply: got dim {y.shape[0]}, operator expects {self.out_dim}"
            )
        return self._adjoint_apply(y)

    def gram_apply(self, x) -> np.ndarray:
        """T* (T x) -- the self-adjoint positive-semidefinite composition."""
        return self.adjoint_apply(self.apply(x))


class MatrixOperator(LinearOperator):
    """Dense complex matrix backend; adjoint is the conjugate transpose."""

    def __init__(self, matrix):
        m = np.asarray(matrix, dtype=np.complex128)
        if m.ndim != 2:
            raise ValueError(f"expected a 2-D matrix, got shape {m.shape}")
        self._m = m
        self._mh = m.conj().T
        self.out_dim, self.in_dim = m.shape

    @property
    def matrix(self) -> np.ndarray:
        return self._m

    def _apply(self, x):
        return self._m @ x

    def _adjoint_apply(self, y):
        return self._mh @ y


class CyclicConvolutionOperator(LinearOperator):
    """Discretized convolution integral on a uniform periodic grid.

    The kernel is stored in FFT wraparound layout: entry j holds the kernel
    sample at signed offset j*dx (offsets j >= n/2 wrap to negative).  The
    forward map is dx times the cyclic convolution, evaluated by FFT, so it
    approximates the continuous convolution integral.
    """

    def __init__(self, kernel, dx: float):
        k = as_cvector(kernel)
        if dx <= 0:
            raise ValueError("dx must be positive")
        self._kernel = k
        self.dx = float(dx)
        self.in_dim = self.out_dim = k.shape[0]
        self._fk = np.fft.fft(k)
        # adjoint kernel: conj of the cyclically reversed kernel
        if self._is_self_adjoint(k):
            self._fk_adj = self._fk
        else:
            self._fk_adj = np.conj(self._fk)

    @staticmethod
    def _is_self_adjoint(k: np.ndarray) -> bool:
        # real even kernel (k[j] == k[-j mod n]) gives a self-adjoint operator
        return bool(np.all(k.imag == 0) and np.array_equal(k, np.roll(k[::-1], 1)))

    @property
    def kernel(self) -> np.ndarray:
        return self._kernel

    @property
    def self_adjoint(self) -> bool:
        return self._fk_adj is self._fk

    def _apply(self, x):
        return self.dx * np.fft.ifft(np.fft.fft(x) * self._fk)

    def _adjoint_apply(self, y):
        if self.self_adjoint:
            return self._apply(y)
        return self.dx * np.fft.ifft(np.fft.fft(y) * self._fk_adj)

    def gram_spectrum(self) -> np.ndarray:
        """Exact eigenvalues of T*T (the operator is circulant)."""
        return np.abs(self.dx * self._fk) ** 2
