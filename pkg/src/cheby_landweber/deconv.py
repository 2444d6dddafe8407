"""Deconvolution experiment: Gaussian blur on a 16384-bin periodic grid.

Recovers a sum-of-Gaussians source from its blurred observation with plain
and Chebyshev-accelerated Landweber iterations and records error curves and
iterate snapshots.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass, field

import numpy as np

from .operators import CyclicConvolutionOperator
from .schedules import chebyshev_factors, constant_schedule
from .spectral import SpectralBounds
from .solvers import SolverConfig, run

DEFAULT_BOUNDS = SpectralBounds(0.1, 0.9)
DEFAULT_OMEGA = 0.3
DEFAULT_T_VALUES = (1, 2, 8)


@dataclass(frozen=True)
class GridSpec:
    """Uniform periodic grid; bins must be a power of two for the FFT."""

    lo: float = -8.192
    hi: float = 8.192
    bins: int = 16384

    def __post_init__(self):
        if self.hi <= self.lo:
            raise ValueError("need hi > lo")
        if self.bins < 2 or self.bins & (self.bins - 1):
            raise ValueError(f"bins must be a power of two, got {self.bins}")

    @property
    def dx(self) -> float:
        return (self.hi - self.lo) / self.bins

    def points(self) -> np.ndarray:
        """Midpoint sample positions lo + (i + 1/2) dx."""
        return self.lo + (np.arange(self.bins) + 0.5) * self.dx

    def offsets(self) -> np.ndarray:
        """Signed offsets j*dx in FFT wraparound order."""
        j = np.arange(self.bins)
        return np.where(j < self.bins // 2, j, j - self.bins) * self.dx


def source_signal(x):
    """Sum of four Gaussians with weights (1/2, 1, -1, 1/2) at 0, 2, 3, 4."""
    x = np.asarray(x, dtype=float)
    return (0.5 * np.exp(-(x ** 2))
            + np.exp(-((x - 2) ** 2))
            - np.exp(-((x - 3) ** 2))
            + 0.5 * np.exp(-((x - 4) ** 2)))


def blur_kernel(x):
    """Even Gaussian point-spread function exp(-x^2)."""
    x = np.asarray(x, dtype=float)
    return np.exp(-(x ** 2))


def synthesize_signals(grid: GridSpec) -> tuple[np.ndarray, np.ndarray]:
    """Sample the source f and the kernel g at the grid midpoints."""
    x = grid.points()
    return source_signal(x), blur_kernel(x)


def blur_operator(grid: GridSpec) -> CyclicConvolutionOperator:
    """Convolution operator with the Gaussian kernel in wraparound layout."""
    return CyclicConvolutionOperator(blur_kernel(grid.offsets()), grid.dx)


@dataclass
class BoundsReport:
    """Exact spectrum of B = omega G*G versus the prescribed bounds."""

    b_min: float
    b_max: float
    l_min: float
    l_max: float

    @property
    def within(self) -> bool:
        return self.l_min <= self.b_min and self.b_max <= self.l_max


def verify_bounds(grid: GridSpec, omega: float, bounds: SpectralBounds) -> BoundsReport:
    """Check the prescribed bounds against the exact circulant spectrum."""
    spec = omega * blur_operator(grid).gram_spectrum()
    return BoundsReport(b_min=float(spec.min()), b_max=float(spec.max()),
                        l_min=bounds.l_min, l_max=bounds.l_max)


@dataclass
class DeconvResult:
    grid: GridSpec
    f: np.ndarray
    g: np.ndarray
    y: np.ndarray
    ks: np.ndarray
    errors: dict  # label -> error curve ||s_k - f||
    snapshots: dict = field(default_factory=dict)  # label -> {k: iterate}


def _schedules(bounds, t_values):
    scheds = {"plain": constant_schedule(1.0)}
    for T in t_values:
        scheds[f"cheb_T{T}"] = chebyshev_factors(bounds, T)
    return scheds


def run_deconv(
    grid: GridSpec = GridSpec(),
    omega: float = DEFAULT_OMEGA,
    bounds: SpectralBounds = DEFAULT_BOUNDS,
    t_values=DEFAULT_T_VALUES,
    iters: int = 200,
    snapshot_every: int = 30,
    snapshot_labels=("plain", "cheb_T8"),
) -> DeconvResult:
    """Blur the source, deconvolve with each schedule, collect error curves.

    The iteration starts from s(0) = y.  Error norms carry the sqrt(dx)
    quadrature weight so they approximate the continuous L2 norm.
    """
    f, g = synthesize_signals(grid)
    op = blur_operator(grid)
    y = op.apply(f)
    scale = np.sqrt(grid.dx)

    errors = {}
    snapshots = {}
    for label, sched in _schedules(bounds, t_values).items():
        want_snaps = label in snapshot_labels
        snaps = {}
        cfg = SolverConfig(operator=op, y=y, omega=omega, schedule=sched,
                           max_iter=iters, x_ref=f, x0=y, record_every=1,
                           norm_scale=scale)
        if want_snaps:
            # re-run manually to capture iterates at snapshot indices
            x = y.copy()
            errs = [scale * np.linalg.norm(x - f)]
            snaps[0] = x.copy()
            for k in range(iters):
                x = x - sched.factor(k) * omega * op.adjoint_apply(op.apply(x) - y)
                errs.append(scale * np.linalg.norm(x - f))
                if (k + 1) % snapshot_every == 0:
                    snaps[k + 1] = x.copy()
            errors[label] = np.array(errs)
            snapshots[label] = snaps
        else:
            res = run(cfg)
            errors[label] = res.errors()
    return DeconvResult(grid=grid, f=f, g=g, y=y.real,
                        ks=np.arange(iters + 1), errors=errors,
                        snapshots=snapshots)


def _fmt(v) -> str:
    return repr(float(v))


def write_error_curves(path, result: DeconvResult) -> None:
    labels = list(result.errors)
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["k"] + [f"error_{lab}" for lab in labels])
        for i, k in enumerate(result.ks):
            w.writerow([int(k)] + [_fmt(result.errors[lab][i]) for lab in labels])


def write_snapshots(path, result: DeconvResult) -> None:
    x = result.grid.points()
    cols = {"x": x, "f": result.f, "g": result.g, "y": result.y}
    for label, snaps in result.snapshots.items():
        for k, s in snaps.items():
            cols[f"s_{label}_k{k}"] = s.real
    names = list(cols)
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(names)
        for i in range(result.grid.bins):
            w.writerow([_fmt(cols[name][i]) for name in names])
