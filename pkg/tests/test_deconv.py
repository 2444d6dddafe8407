import numpy as np
import pytest

from cheby_landweber.deconv import (GridSpec, blur_kernel, blur_operator,
                                    run_deconv, source_signal,
                                    synthesize_signals, verify_bounds)
from cheby_landweber.operators import CyclicConvolutionOperator
from cheby_landweber.spectral import SpectralBounds

SMALL_GRID = GridSpec(bins=2048)


class TestGridSpec:
    def test_defaults(self):
        g = GridSpec()
        assert g.bins == 16384
        assert g.dx == pytest.approx(0.001)

    def test_rejects_non_power_of_two(self):
        with pytest.raises(ValueError):
            GridSpec(bins=1000)

    def test_midpoint_sampling(self):
        g = GridSpec(lo=0.0, hi=1.0, bins=4)
        assert np.allclose(g.points(), [0.125, 0.375, 0.625, 0.875])


class TestSignals:
    def test_kernel_peak(self):
        assert blur_kernel(0.0) == pytest.approx(1.0)

    def test_source_at_zero(self):
        # 0.5 + e^-4 - e^-9 + 0.5 e^-16, evaluated independently
        assert source_signal(0.0) == pytest.approx(0.5181922853522349, abs=1e-12)

    def test_kernel_even_on_grid(self):
        _, g = synthesize_signals(GridSpec())
        # midpoint grid is symmetric about 0: reversing flips the sign of x
        assert np.allclose(g, g[::-1], atol=1e-15)

    def test_signals_real(self):
        f, g = synthesize_signals(SMALL_GRID)
        assert np.isrealobj(f) and np.isrealobj(g)


class TestBoundsVerification:
    def test_gaussian_spectrum_slightly_exceeds_caption_bounds(self):
        report = verify_bounds(GridSpec(), 0.3, SpectralBounds(0.1, 0.9))
        # exact top of the spectrum of 0.3 G*G is 0.3 * pi
        assert report.b_max == pytest.approx(0.3 * np.pi, rel=1e-6)
        assert report.b_min < 0.1
        assert not report.within


class TestRunDeconv:
    def test_zero_kernel_never_moves(self):
        grid = SMALL_GRID
        f, _ = synthesize_signals(grid)
        op = CyclicConvolutionOperator(np.zeros(grid.bins), grid.dx)
        y = op.apply(f)
        from cheby_landweber.solvers import SolverConfig, run
        res = run(SolverConfig(operator=op, y=y, omega=0.3, max_iter=5,
                               x0=y, x_ref=f, record_every=1))
        errs = res.errors()
        assert np.allclose(errs, errs[0])

    def test_threshold_crossings_and_domination(self):
        result = run_deconv(iters=130)
        plain = result.errors["plain"]
        cheb8 = result.errors["cheb_T8"]
        k_plain = int(np.argmax(plain <= 0.1))
        k_cheb = int(np.argmax(cheb8 <= 0.1))
        assert 80 <= k_plain <= 120
        assert 20 <= k_cheb <= 30
        # plain curve monotone decreasing
        assert np.all(np.diff(plain) <= 1e-12)
        # all Chebyshev curves below plain at common period multiples
        # (from the second period on; T=1 is still above plain at k=8)
        for k in (16, 40, 80, 120):
            for lab in ("cheb_T1", "cheb_T2", "cheb_T8"):
                assert result.errors[lab][k] <= plain[k]

    def test_iterates_stay_real(self):
        result = run_deconv(grid=SMALL_GRID, iters=40, snapshot_every=10)
        for snaps in result.snapshots.values():
            for s in snaps.values():
                assert np.max(np.abs(s.imag)) < 1e-12

    def test_snapshot_indices(self):
        result = run_deconv(grid=SMALL_GRID, iters=60, snapshot_every=30)
        assert set(result.snapshots["plain"]) == {0, 30, 60}

    def test_bin_doubling_robustness(self):
        # halving dx with fixed span changes the k=100 error by < 1%
        e_coarse = run_deconv(grid=GridSpec(bins=8192), iters=100)
        e_fine = run_deconv(grid=GridSpec(bins=16384), iters=100)
        a = e_coarse.errors["plain"][100]
        b = e_fine.errors["plain"][100]
        assert abs(a - b) / b < 0.01
