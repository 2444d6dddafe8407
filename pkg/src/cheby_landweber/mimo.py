"""MIMO experiments: least-squares convergence study and SER Monte Carlo.

Square complex Gaussian channel, 8-PSK sources.  Detectors: MMSE, projected
Landweber with soft projection, and its Chebyshev-accelerated variants.
"""

from __future__ import annotations

import csv
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .operators import MatrixOperator
from .schedules import chebyshev_factors, constant_schedule, convergence_bound_U
from .solvers import DivergenceError, SolverConfig, run
from .spectral import (SpectralBounds, gram_eigenvalues,
                       iteration_spectral_radius, marchenko_pastur_bounds,
                       omega_opt)

DEFAULT_ALPHA_STAGES = ((20, 0.5), (None, 0.25))
DEFAULT_FLOOR_RATIO = 0.1


@dataclass(frozen=True)
class Constellation:
    points: tuple[complex, ...]

    @property
    def order(self) -> int:
        return len(self.points)

    def array(self) -> np.ndarray:
        return np.asarray(self.points, dtype=np.complex128)


def psk8() -> Constellation:
    """8-PSK: the eight unit-modulus points exp(2 pi j k / 8)."""
    pts = np.exp(2j * np.pi * np.arange(8) / 8)
    return Constellation(points=tuple(pts))


def trial_rng(*key) -> np.random.Generator:
    """Deterministic per-trial stream derived from an integer key tuple."""
    return np.random.default_rng(list(key))


def sample_channel(n: int, rng: np.random.Generator) -> np.ndarray:
    """n x n matrix with i.i.d. CN(0, 1) entries (real/imag parts N(0, 1/2))."""
    return (rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))) / np.sqrt(2)


def sample_noise(n: int, sigma: float, rng: np.random.Generator) -> np.ndarray:
    """CN(0, sigma^2) noise vector."""
    return sigma * (rng.standard_normal(n) + 1j * rng.standard_normal(n)) / np.sqrt(2)


def sample_source(
    n: int, constellation: Constellation, rng: np.random.Generator
) -> tuple[np.ndarray, np.ndarray]:
    """Uniform i.i.d. symbols; returns (indices, complex vector)."""
    idx = rng.integers(0, constellation.order, n)
    return idx, constellation.array()[idx]


@dataclass
class ChannelInstance:
    n: int
    sigma: float
    seed: tuple
    H: np.ndarray
    x_idx: np.ndarray
    x_true: np.ndarray
    y: np.ndarray

    @classmethod
    def generate(cls, n: int, sigma: float, constellation: Constellation, *seed):
        rng = trial_rng(*seed)
        H = sample_channel(n, rng)
        idx, x = sample_source(n, constellation, rng)
        w = sample_noise(n, sigma, rng)
        return cls(n=n, sigma=sigma, seed=tuple(seed), H=H, x_idx=idx,
                   x_true=x, y=H @ x + w)


def soft_projection(r, points, alpha_sq: float) -> np.ndarray:
    """Gaussian-weighted average of constellation points (Eq.-style softmax).

    The maximum exponent is subtracted before exponentiation; without it the
    weights underflow to all-zero at high SNR.
    """
    if alpha_sq <= 0:
        raise ValueError("alpha_sq must be positive")
    r = np.atleast_1d(np.asarray(r, dtype=np.complex128))
    p = np.asarray(points, dtype=np.complex128)
    logw = -np.abs(r[:, None] - p[None, :]) ** 2 / alpha_sq
    logw -= logw.max(axis=1, keepdims=True)
    w = np.exp(logw)
    return (w @ p) / w.sum(axis=1)


@dataclass(frozen=True)
class SoftProjector:
    """Element-wise soft projection with a staged temperature schedule.

    stages: ((k_limit, alpha_sq), ..., (None, alpha_sq)); the first stage
    whose k_limit exceeds the iteration index applies.
    """

    points: tuple[complex, ...]
    stages: tuple = DEFAULT_ALPHA_STAGES

    def alpha_sq(self, k: int) -> float:
        for limit, a2 in self.stages:
            if limit is None or k < limit:
                return a2
        return self.stages[-1][1]

    def __call__(self, values: np.ndarray, k: int) -> np.ndarray:
        return soft_projection(values, self.points, self.alpha_sq(k))


def mmse_detect(H, y, sigma_sq: float) -> np.ndarray:
    """Linear MMSE estimate: solve (H^H H + sigma^2 I) x = H^H y."""
    H = np.asarray(H, dtype=np.complex128)
    if max(H.shape) > 512:
        raise ValueError("dimension exceeds dense-solve limit 512")
    Hh = H.conj().T
    A = Hh @ H + sigma_sq * np.eye(H.shape[1])
    return np.linalg.solve(A, Hh @ np.asarray(y, dtype=np.complex128))


def hard_decision(x, points) -> np.ndarray:
    """Nearest constellation point per entry; ties go to the lowest index.

    Distances within one part in 1e12 of the minimum count as tied, so exact
    bisector inputs are not decided by rounding noise.
    """
    x = np.atleast_1d(np.asarray(x, dtype=np.complex128))
    p = np.asarray(points, dtype=np.complex128)
    d = np.abs(x[:, None] - p[None, :]) ** 2
    dmin = d.min(axis=1, keepdims=True)
    tied = d <= dmin * (1 + 1e-12) + 1e-300
    return np.argmax(tied, axis=1)


def snr_db_to_sigma(snr_db: float) -> float:
    return float(np.sqrt(10 ** (-snr_db / 10)))


# ---------------------------------------------------------------------------
# least-squares convergence study


@dataclass
class LsqResult:
    ks: np.ndarray
    mean_sq_err: dict  # detector label -> curve
    mean_rho: float
    mean_U: dict  # T -> mean U(T)
    rate_table: list  # (T, mean_U) for T = 1..16


def run_lsq_convergence(
    n: int = 32,
    sigma: float = 1e-4,
    trials: int = 100,
    iters: int = 50,
    t_values=(2, 8),
    seed: int = 0,
    constellation: Constellation | None = None,
) -> LsqResult:
    """Average squared error ||s_k - x||^2 over random channel trials.

    Per trial the step is omega_opt from the exact Gram eigenvalues, and the
    Chebyshev bounds are the exact extreme eigenvalues of omega_opt * H^H H.
    """
    constellation = constellation or psk8()
    labels = ["plain"] + [f"cheb_T{T}" for T in t_values]
    acc = {lab: np.zeros(iters + 1) for lab in labels}
    rho_sum = 0.0
    u_sum = {T: 0.0 for T in range(1, 17)}
    for t in range(trials):
        inst = ChannelInstance.generate(n, sigma, constellation, seed, t)
        lam = gram_eigenvalues(inst.H)
        bounds_raw = SpectralBounds(max(float(lam[0]), np.finfo(float).tiny),
                                    float(lam[-1]), source="exact")
        w_opt = omega_opt(bounds_raw)
        bounds = SpectralBounds(w_opt * bounds_raw.l_min, w_opt * bounds_raw.l_max,
                                source="exact")
        rho_sum += iteration_spectral_radius(inst.H, w_opt)
        for T in u_sum:
            u_sum[T] += convergence_bound_U(bounds, T)
        op = MatrixOperator(inst.H)
        scheds = {"plain": constant_schedule(1.0)}
        for T in t_values:
            scheds[f"cheb_T{T}"] = chebyshev_factors(bounds, T)
        for lab, sched in scheds.items():
            cfg = SolverConfig(operator=op, y=inst.y, omega=w_opt, schedule=sched,
                               max_iter=iters, x_ref=inst.x_true,
                               x0=np.zeros(n, dtype=np.complex128), record_every=1)
            acc[lab] += run(cfg).errors() ** 2
    mean_U = {T: u_sum[T] / trials for T in t_values}
    return LsqResult(
        ks=np.arange(iters + 1),
        mean_sq_err={lab: curve / trials for lab, curve in acc.items()},
        mean_rho=rho_sum / trials,
        mean_U=mean_U,
        rate_table=[(T, u_sum[T] / trials) for T in sorted(u_sum)],
    )


# ---------------------------------------------------------------------------
# symbol-error-rate Monte Carlo


@dataclass
class SerPoint:
    snr_db: float
    detector: str
    errors: int
    symbols: int
    diverged_trials: int = 0

    @property
    def ser(self) -> float:
        return self.errors / self.symbols


@dataclass(frozen=True)
class SerSetup:
    """Everything needed to evaluate one Monte Carlo trial."""

    n: int
    snr_db: float
    point_index: int
    seed: int
    iters: int
    omega: float
    schedules: tuple  # (label, InertialSchedule) pairs
    projector: SoftProjector
    constellation: Constellation


def detector_labels(t_values) -> list[str]:
    return ["mmse", "landweber"] + [f"cheb_T{T}" for T in t_values]


def _run_trials(setup: SerSetup, trial_indices) -> dict:
    """Error counts per detector over the given trial indices."""
    sigma = snr_db_to_sigma(setup.snr_db)
    pts = setup.constellation.array()
    counts = {lab: 0 for lab, _ in setup.schedules}
    counts["mmse"] = 0
    diverged = {lab: 0 for lab in counts}
    for t in trial_indices:
        inst = ChannelInstance.generate(setup.n, sigma, setup.constellation,
                                        setup.seed, setup.point_index, t)
        xm = mmse_detect(inst.H, inst.y, sigma ** 2)
        counts["mmse"] += int(np.sum(hard_decision(xm, pts) != inst.x_idx))
        op = MatrixOperator(inst.H)
        for lab, sched in setup.schedules:
            cfg = SolverConfig(operator=op, y=inst.y, omega=setup.omega,
                               schedule=sched, projector=setup.projector,
                               max_iter=setup.iters,
                               x0=np.zeros(setup.n, dtype=np.complex128),
                               record_every=setup.iters)
            try:
                xhat = run(cfg).x
                counts[lab] += int(np.sum(hard_decision(xhat, pts) != inst.x_idx))
            except DivergenceError:
                counts[lab] += setup.n
                diverged[lab] += 1
    return {"counts": counts, "diverged": diverged, "trials": len(trial_indices)}


def run_ser_sweep(
    n: int = 32,
    snr_db_grid=(2.0, 4.0, 6.0, 8.0, 10.0),
    t_values=(4, 8, 16),
    iters: int = 100,
    seed: int = 0,
    min_errors: int = 100,
    max_trials: int = 10000,
    floor_ratio: float = DEFAULT_FLOOR_RATIO,
    alpha_stages=DEFAULT_ALPHA_STAGES,
    workers: int = 1,
    batch: int = 200,
) -> list[SerPoint]:
    """Adaptive Monte Carlo SER sweep.

    Trials accumulate per SNR point until every detector has at least
    min_errors symbol errors or max_trials is reached.  The step size is
    omega_opt from the Marchenko-Pastur bounds of H^H H; the Chebyshev
    schedule uses those bounds scaled by the step.
    """
    constellation = psk8()
    mp = marchenko_pastur_bounds(n, n, 1.0, floor_ratio)
    omega = omega_opt(mp)
    sched_bounds = SpectralBounds(omega * mp.l_min, omega * mp.l_max,
                                  source="marchenko-pastur")
    schedules = [("landweber", constant_schedule(1.0))]
    for T in t_values:
        schedules.append((f"cheb_T{T}", chebyshev_factors(sched_bounds, T)))
    projector = SoftProjector(points=constellation.points, stages=tuple(alpha_stages))

    points: list[SerPoint] = []
    pool = ProcessPoolExecutor(max_workers=workers) if workers > 1 else None
    try:
        for pi, snr in enumerate(snr_db_grid):
            setup = SerSetup(n=n, snr_db=float(snr), point_index=pi, seed=seed,
                             iters=iters, omega=omega, schedules=tuple(schedules),
                             projector=projector, constellation=constellation)
            counts = {lab: 0 for lab in detector_labels(t_values)}
            diverged = {lab: 0 for lab in counts}
            done = 0
            while done < max_trials and min(counts.values()) < min_errors:
                take = min(batch, max_trials - done)
                idx = range(done, done + take)
                if pool is None:
                    results = [_run_trials(setup, list(idx))]
                else:
                    chunks = np.array_split(np.asarray(idx), workers)
                    results = list(pool.map(_run_trials, [setup] * len(chunks),
                                            [c.tolist() for c in chunks]))
                for r in results:
                    for lab in counts:
                        counts[lab] += r["counts"][lab]
                        diverged[lab] += r["diverged"][lab]
                done += take
            for lab in detector_labels(t_values):
                points.append(SerPoint(snr_db=float(snr), detector=lab,
                                       errors=counts[lab], symbols=done * n,
                                       diverged_trials=diverged[lab]))
    finally:
        if pool is not None:
            pool.shutdown()
    return points


# ---------------------------------------------------------------------------
# CSV output


def _fmt(v) -> str:
    return repr(float(v))


def write_lsq_curves(path, result: LsqResult, t_values=(2, 8)) -> None:
    labels = list(result.mean_sq_err)
    header = ["k"] + [f"mse_{lab}" for lab in labels] + ["rho_pow_k"]
    for T in t_values:
        header += [f"U{T}_pow_k", f"U{T}_pow_k_over_T"]
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(header)
        for i, k in enumerate(result.ks):
            row = [int(k)] + [_fmt(result.mean_sq_err[lab][i]) for lab in labels]
            row.append(_fmt(result.mean_rho ** k))
            for T in t_values:
                u = result.mean_U[T]
                row += [_fmt(u ** k), _fmt(u ** (k / T))]
            w.writerow(row)


def write_rate_bounds(path, result: LsqResult) -> None:
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["T", "U_T", "rho"])
        for T, u in result.rate_table:
            w.writerow([T, _fmt(u), _fmt(result.mean_rho)])


def write_ser_table(path, points) -> None:
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["snr_db", "detector", "errors", "symbols", "ser",
                    "diverged_trials"])
        for p in points:
            w.writerow([_fmt(p.snr_db), p.detector, p.errors, p.symbols,
                        _fmt(p.ser), p.diverged_trials])
