"""Chebyshev inertial Landweber iteration for linear inverse problems."""

__version__ = "0.1.0"

from .operators import (CyclicConvolutionOperator, DimensionMismatchError,
                        LinearOperator, MatrixOperator, inner, norm)
from .schedules import (InertialSchedule, chebyshev_factors, constant_schedule,
                        convergence_bound_U, empirical_contraction)
from .solvers import (DivergenceError, SolverConfig, SolverRun,
                      inertial_landweber_step, landweber_step, run)
from .spectral import (PowerIterationError, SpectralBounds, exact_bounds,
                       extreme_eigenvalues, iteration_spectral_radius,
                       marchenko_pastur_bounds, omega_opt)

__all__ = [
    "CyclicConvolutionOperator", "DimensionMismatchError", "LinearOperator",
    "MatrixOperator", "inner", "norm",
    "InertialSchedule", "chebyshev_factors", "constant_schedule",
    "convergence_bound_U", "empirical_contraction",
    "DivergenceError", "SolverConfig", "SolverRun",
    "inertial_landweber_step", "landweber_step", "run",
    "PowerIterationError", "SpectralBounds", "exact_bounds",
    "extreme_eigenvalues", "iteration_spectral_radius",
    "marchenko_pastur_bounds", "omega_opt",
]
