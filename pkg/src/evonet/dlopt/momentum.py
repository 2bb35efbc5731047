"""Momentum and Nesterov weight updates, and learning-rate decay schedules."""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from typing import Callable

import numpy as np

from evonet.errors import DimensionError, ParameterError


@dataclass(frozen=True, eq=False)
class MomentumState:
    """Previous weight update, momentum coefficient ``m`` and learning rate.

    A learning rate of exactly 0 is accepted so that training can be
    switched off without changing code paths.
    """

    velocity: np.ndarray
    m: float = 0.9
    alpha: float = 0.1

    def __post_init__(self):
        object.__setattr__(self, "velocity", np.asarray(self.velocity, dtype=float))
        if not 0 <= self.m < 1:
            raise ParameterError(f"momentum must lie in [0, 1), got {self.m}")
        if self.alpha < 0:
            raise ParameterError(f"learning rate must be >= 0, got {self.alpha}")

    @classmethod
    def zeros(cls, n: int, m: float = 0.9, alpha: float = 0.1) -> "MomentumState":
        return cls(np.zeros(n), m, alpha)


def momentum_step(state: MomentumState, gradient) -> tuple[MomentumState, np.ndarray]:
    """``dw(t) = -alpha * g + m * dw(t-1)``; returns the new state and ``dw(t)``."""
    g = np.asarray(gradient, dtype=float)
    if g.shape != state.velocity.shape:
        raise DimensionError(f"gradient shape {g.shape} != velocity shape {state.velocity.shape}")
    delta = -state.alpha * g + state.m * state.velocity
    return replace(state, velocity=delta), delta


def nesterov_step(state: MomentumState, weights,
                  gradient_at: Callable[[np.ndarray], np.ndarray]) -> tuple[MomentumState, np.ndarray]:
    """Momentum step using the gradient at the look-ahead point
    ``w + m * dw(t-1)``."""
    w = np.asarray(weights, dtype=float)
    if w.shape != state.velocity.shape:
        raise DimensionError(f"weights shape {w.shape} != velocity shape {state.velocity.shape}")
    lookahead = w + state.m * state.velocity
    return momentum_step(state, gradient_at(lookahead))


@dataclass(frozen=True)
class LrSchedule:
    """Step decay (``factor`` every ``period`` epochs) or exponential decay
    (``exp(-k * epoch)``)."""

    kind: str = "step"
    lr0: float = 0.1
    factor: float = 0.5
    period: int = 10
    k: float = 0.0

    def __post_init__(self):
        if self.kind not in ("step", "exp", "exponential"):
            raise ParameterError(f"unknown schedule kind {self.kind!r}")
        if self.lr0 <= 0:
            raise ParameterError("lr0 must be > 0")
        if self.kind == "step" and not (0 < self.factor < 1 and self.period >= 1):
            raise ParameterError("step decay needs 0 < factor < 1 and period >= 1")
        if self.k < 0:
            raise ParameterError("exponential decay rate k must be >= 0")


def lr_at(schedule: LrSchedule, epoch: int) -> float:
    if epoch < 0:
        raise ParameterError("epoch must be >= 0")
    if schedule.kind == "step":
        return schedule.lr0 * schedule.factor ** (epoch // schedule.period)
    return schedule.lr0 * math.exp(-schedule.k * epoch)


@dataclass(frozen=True)
class Optimizer:
    """Update rule plus learning-rate policy, as used by the BP trainer."""

    kind: str = "momentum"
    lr: float = 0.5
    momentum: float = 0.9
    schedule: LrSchedule | None = None

    def __post_init__(self):
        if self.kind not in ("momentum", "nesterov"):
            raise ParameterError(f"unknown optimizer {self.kind!r}")
        if self.lr < 0:
            raise ParameterError("learning rate must be >= 0")
        if not 0 <= self.momentum < 1:
            raise ParameterError("momentum must lie in [0, 1)")

    def init_state(self, n_weights: int) -> MomentumState:
        return MomentumState.zeros(n_weights, self.momentum, self.lr)

    def step(self, state: MomentumState, weights: np.ndarray,
             gradient_at: Callable[[np.ndarray], np.ndarray],
             epoch: int) -> tuple[MomentumState, np.ndarray]:
        lr = lr_at(self.schedule, epoch) if self.schedule is not None else self.lr
        state = replace(state, alpha=lr)
        if self.kind == "nesterov":
            return nesterov_step(state, weights, gradient_at)
        return momentum_step(state, gradient_at(weights))
