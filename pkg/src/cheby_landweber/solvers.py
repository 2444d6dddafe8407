"""Landweber solver engine: plain, inertial, and projected variants."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from .operators import LinearOperator, as_cvector
from .schedules import InertialSchedule, constant_schedule

# projector(values, k) -> values; applied element-wise to the iterate
Projector = Callable[[np.ndarray, int], np.ndarray]


class DivergenceError(RuntimeError):
    """Iterate became non-finite; carries the last finite history."""

    def __init__(self, iteration: int, history: list):
        super().__init__(f"iterate diverged at iteration {iteration}")
        self.iteration = iteration
        self.history = history


def landweber_step(op: LinearOperator, y, x, omega: float) -> np.ndarray:
    """One gradient step x - omega * T*(T x - y)."""
    x = as_cvector(x)
    return x - omega * op.adjoint_apply(op.apply(x) - as_cvector(y))


def inertial_landweber_step(
    op: LinearOperator, y, x, omega: float, omega_k: float
) -> np.ndarray:
    """Inertial step x - omega_k * omega * T*(T x - y); omega_k=1 is plain."""
    x = as_cvector(x)
    return x - (omega_k * omega) * op.adjoint_apply(op.apply(x) - as_cvector(y))


def default_record_every(max_iter: int) -> int:
    return 1 if max_iter <= 1000 else 10


@dataclass
class SolverConfig:
    operator: LinearOperator
    y: np.ndarray
    omega: float
    schedule: InertialSchedule = field(default_factory=lambda: constant_schedule(1.0))
    projector: Optional[Projector] = None
    max_iter: int = 100
    x_ref: Optional[np.ndarray] = None
    x0: Optional[np.ndarray] = None
    record_every: Optional[int] = None
    norm_scale: float = 1.0  # multiplier on vector 2-norms (e.g. sqrt(dx))
    project_before_inertia: bool = True  # False: inertial combination first

    def __post_init__(self):
        self.y = as_cvector(self.y)
        if self.y.shape[0] != self.operator.out_dim:
            raise ValueError("y dimension does not match operator.out_dim")
        if self.x_ref is not None:
            self.x_ref = as_cvector(self.x_ref)
            if self.x_ref.shape[0] != self.operator.in_dim:
                raise ValueError("x_ref dimension does not match operator.in_dim")
        if self.x0 is not None:
            self.x0 = as_cvector(self.x0)
            if self.x0.shape[0] != self.operator.in_dim:
                raise ValueError("x0 dimension does not match operator.in_dim")

    def initial_iterate(self) -> np.ndarray:
        if self.x0 is not None:
            return self.x0.copy()
        if self.operator.in_dim == self.operator.out_dim:
            return self.y.copy()
        return np.zeros(self.operator.in_dim, dtype=np.complex128)


@dataclass
class SolverRun:
    x: np.ndarray
    history: list  # (k, residual_norm, error_norm_or_None)
    iterations_done: int

    def ks(self) -> np.ndarray:
        return np.array([h[0] for h in self.history])

    def residuals(self) -> np.ndarray:
        return np.array([h[1] for h in self.history])

    def errors(self) -> np.ndarray:
        return np.array([h[2] for h in self.history], dtype=float)


def run(config: SolverConfig) -> SolverRun:
    """Run the (projected, inertial) Landweber iteration.

    Per iteration: form the plain Landweber output s, optionally project it
    element-wise, then take the inertial combination
    x <- x + omega_k * (proj(s) - x).  History is recorded at k = 0, every
    record_every iterations, and at the final k.
    """
    op = config.operator
    y = config.y
    omega = config.omega
    schedule = config.schedule
    every = config.record_every or default_record_every(config.max_iter)
    x = config.initial_iterate()
    history: list = []

    def record(k, x):
        residual = config.norm_scale * np.linalg.norm(op.apply(x) - y)
        err = None
        if config.x_ref is not None:
            err = config.norm_scale * np.linalg.norm(x - config.x_ref)
        history.append((k, float(residual), err))

    record(0, x)
    for k in range(config.max_iter):
        omega_k = schedule.factor(k)
        with np.errstate(over="ignore", invalid="ignore"):
            s = landweber_step(op, y, x, omega)
            if config.projector is not None and config.project_before_inertia:
                s = config.projector(s, k)
            x_next = x + omega_k * (s - x)
            if config.projector is not None and not config.project_before_inertia:
                x_next = config.projector(x_next, k)
        if not np.all(np.isfinite(x_next.view(np.float64))):
            raise DivergenceError(k + 1, history)
        x = x_next
        if (k + 1) % every == 0 or (k + 1) == config.max_iter:
            record(k + 1, x)
    return SolverRun(x=x, history=history, iterations_done=config.max_iter)
