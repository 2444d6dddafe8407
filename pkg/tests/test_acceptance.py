"""Acceptance suite: one test per release criterion, each printing a verdict.

Run with `pytest tests/test_acceptance.py -v -s` to see the per-criterion
lines.  Tolerances are fixed here, not configurable.
"""

import filecmp

import numpy as np
import pytest

from cheby_landweber.cli import run_cli
from cheby_landweber.deconv import GridSpec, run_deconv
from cheby_landweber.mimo import mmse_detect, run_ser_sweep
from cheby_landweber.operators import (CyclicConvolutionOperator,
                                       MatrixOperator, inner, norm)
from cheby_landweber.schedules import chebyshev_factors, convergence_bound_U
from cheby_landweber.solvers import SolverConfig, run
from cheby_landweber.spectral import (SpectralBounds, exact_bounds,
                                      iteration_spectral_radius, omega_opt)

from oracles import (direct_cyclic_convolution, gaussian_elimination_solve,
                     least_squares_oracle)


def verdict(name):
    print(f"\n[acceptance] {name}: PASS")


def random_complex(rng, *shape):
    return rng.standard_normal(shape) + 1j * rng.standard_normal(shape)


def test_deconvolution_speedup():
    """Plain reaches error 0.1 at k = 100 +- 20%; Chebyshev T=8 at 25 +- 20%."""
    result = run_deconv(grid=GridSpec(), omega=0.3,
                        bounds=SpectralBounds(0.1, 0.9), iters=130)
    k_plain = int(np.argmax(result.errors["plain"] <= 0.1))
    k_cheb = int(np.argmax(result.errors["cheb_T8"] <= 0.1))
    assert k_plain > 0 and 80 <= k_plain <= 120, k_plain
    assert k_cheb > 0 and 20 <= k_cheb <= 30, k_cheb
    verdict(f"deconvolution speedup (plain k={k_plain}, cheb T=8 k={k_cheb})")


def test_end_of_period_contraction_bound():
    """||x(lT) - x*|| <= U(T)^l ||x(0) - x*|| on 50 random n=16 instances."""
    rng = np.random.default_rng(2024)
    n = 16
    for trial in range(50):
        H = random_complex(rng, n, n)
        y = random_complex(rng, n)
        x_star = least_squares_oracle(H, y)
        op = MatrixOperator(H)
        raw = exact_bounds(op)
        omega = omega_opt(raw)
        bounds = SpectralBounds(omega * raw.l_min, omega * raw.l_max)
        for T in (2, 4, 8):
            sched = chebyshev_factors(bounds, T)
            u = convergence_bound_U(bounds, T)
            res = run(SolverConfig(operator=op, y=y, omega=omega,
                                   schedule=sched, max_iter=5 * T,
                                   x0=np.zeros(n, dtype=complex),
                                   x_ref=x_star, record_every=1))
            errs = res.errors()
            for ell in range(1, 6):
                assert errs[ell * T] <= u ** ell * errs[0] * (1 + 1e-6), \
                    (trial, T, ell)
    verdict("end-of-period sech contraction bound (50 instances, T in {2,4,8})")


def test_chebyshev_polynomial_bound():
    """|beta_T(lambda)| <= U(T) + 1e-9 on a dense 10^4-point grid."""
    bound_pairs = [SpectralBounds(0.1, 0.9), SpectralBounds(1.28, 128.0),
                   SpectralBounds(0.01, 2.0), SpectralBounds(0.5, 0.6)]
    for bounds in bound_pairs:
        grid = np.linspace(bounds.l_min, bounds.l_max, 10000)
        for T in range(1, 17):
            sched = chebyshev_factors(bounds, T)
            prod = np.ones_like(grid)
            for f in sched.factors:
                prod *= 1.0 - f * grid
            assert np.max(np.abs(prod)) <= convergence_bound_U(bounds, T) + 1e-9
    verdict("Chebyshev polynomial bound (4 bound pairs, T <= 16)")


def test_U_strictly_below_rho():
    """n=32 ensemble: U(T) < rho(A) for all T in 2..16 on every instance."""
    rng = np.random.default_rng(7)
    for _ in range(20):
        H = random_complex(rng, 32, 32)
        raw = exact_bounds(MatrixOperator(H))
        omega = omega_opt(raw)
        rho = iteration_spectral_radius(H, omega)
        bounds = SpectralBounds(omega * raw.l_min, omega * raw.l_max)
        for T in range(2, 17):
            assert convergence_bound_U(bounds, T) < rho
    verdict("U(T) < rho(A) for T in 2..16 (20 sampled n=32 instances)")


def test_closed_form_checks():
    """U(8) for (0.1, 0.9) equals 2/(256 + 1/256); T=1 factor is omega_opt."""
    bounds = SpectralBounds(0.1, 0.9)
    assert abs(convergence_bound_U(bounds, 8) - 2.0 / (256.0 + 1.0 / 256.0)) < 1e-12
    for b in (bounds, SpectralBounds(1.28, 128.0), SpectralBounds(0.3, 0.3)):
        assert chebyshev_factors(b, 1).factors[0] == omega_opt(b)
    verdict("closed-form U(8) and T=1 factor identities")


def test_operator_oracles():
    """FFT vs direct convolution; adjoint identity; MMSE vs elimination."""
    rng = np.random.default_rng(99)
    for n in (8, 64, 256):
        kernel = random_complex(rng, n)
        op = CyclicConvolutionOperator(kernel, 0.5)
        x = random_complex(rng, n)
        expected = 0.5 * direct_cyclic_convolution(x, kernel)
        assert np.linalg.norm(op.apply(x) - expected) \
            <= 1e-9 * np.linalg.norm(expected)
    for _ in range(200):
        m, n = int(rng.integers(2, 10)), int(rng.integers(2, 10))
        op = MatrixOperator(random_complex(rng, m, n))
        x, y = random_complex(rng, n), random_complex(rng, m)
        gap = abs(inner(op.apply(x), y) - inner(x, op.adjoint_apply(y)))
        assert gap <= 1e-10 * (norm(x) * norm(op.apply(x)) + 1) * (norm(y) + 1)
    for _ in range(20):
        H = random_complex(rng, 6, 6)
        y = random_complex(rng, 6)
        s2 = float(rng.uniform(0.01, 1.0))
        expected = gaussian_elimination_solve(
            H.conj().T @ H + s2 * np.eye(6), H.conj().T @ y)
        assert np.linalg.norm(mmse_detect(H, y, s2) - expected) <= 1e-10
    verdict("operator oracles (FFT conv, adjoint identity, MMSE solve)")


def test_ser_ordering():
    """At the highest SNR with >= 100 errors per point: projected Landweber
    beats MMSE by 10x and each Chebyshev variant beats plain projected."""
    t_values = (4, 8, 16)
    points = run_ser_sweep(n=32, snr_db_grid=(4.0, 6.0), t_values=t_values,
                           iters=100, seed=2024, min_errors=100,
                           max_trials=8000)
    by_snr = {}
    for p in points:
        by_snr.setdefault(p.snr_db, {})[p.detector] = p
    qualified = [snr for snr, dets in by_snr.items()
                 if all(d.errors >= 100 for d in dets.values())]
    assert qualified, "no SNR point accumulated 100 errors for every detector"
    snr = max(qualified)
    dets = by_snr[snr]
    assert dets["landweber"].ser <= 0.1 * dets["mmse"].ser, \
        (dets["landweber"].ser, dets["mmse"].ser)
    for T in t_values:
        assert dets[f"cheb_T{T}"].ser <= dets["landweber"].ser, \
            (T, dets[f"cheb_T{T}"].ser, dets["landweber"].ser)
    verdict(f"SER ordering at snr={snr} dB "
            f"(mmse={dets['mmse'].ser:.4g}, landweber={dets['landweber'].ser:.4g})")


def test_csv_determinism(tmp_path):
    """Identical seeds reproduce every CSV byte-identically."""
    deconv_args = ["--bins", "2048", "--iters", "30"]
    lsq_args = ["--n", "8", "--trials", "5", "--iters", "10", "--seed", "3"]
    ser_args = ["--n", "8", "--snr-grid", "4,6", "--t-values", "4",
                "--iters", "30", "--min-errors", "10", "--max-trials", "30",
                "--batch", "10", "--seed", "3"]
    outs = []
    for tag in ("a", "b"):
        out = tmp_path / tag
        assert run_cli(["deconv", "--out", str(out / "deconv")] + deconv_args) == 0
        assert run_cli(["lsq", "--out", str(out / "lsq")] + lsq_args) == 0
        assert run_cli(["ser", "--out", str(out / "ser")] + ser_args) == 0
        outs.append(out)
    a, b = outs
    for rel in ("deconv/error_curves.csv", "deconv/snapshots.csv",
                "lsq/lsq_curves.csv", "lsq/rate_bounds.csv", "ser/ser.csv"):
        assert filecmp.cmp(a / rel, b / rel, shallow=False), rel
    verdict("seeded CSV determinism across repeated runs")
