"""Error measures used as (inverse) fitness, and success/failure marking."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from evonet.errors import DimensionError, NumericError, ParameterError

MEASURES = ("sqe", "abs", "exp", "prechelt")


def _pair(targets, actuals):
    t = np.asarray(targets, dtype=float).ravel()
    a = np.asarray(actuals, dtype=float).ravel()
    if t.shape != a.shape:
        raise DimensionError(f"targets have {t.size} values, actuals {a.size}")
    if t.size == 0:
        raise DimensionError("error measures need at least one value")
    return t, a


def error_sqe(targets, actuals) -> float:
    """Summed squared error."""
    t, a = _pair(targets, actuals)
    d = t - a
    return float(np.dot(d, d))


def error_abs(targets, actuals) -> float:
    t, a = _pair(targets, actuals)
    return float(np.sum(np.abs(t - a)))


def error_exp(targets, actuals) -> float:
    """Summed ``exp(|t - a|)``; a perfect fit of k values scores k."""
    t, a = _pair(targets, actuals)
    return float(np.sum(np.exp(np.abs(t - a))))


@dataclass(frozen=True)
class FitnessSpec:
    """Which measure to use, plus the constants the percentage form needs.

    ``o_max``/``o_min`` are the output range, ``n`` the output-neuron count
    and ``T`` the validation pattern count.
    """

    measure: str = "sqe"
    o_max: float = 1.0
    o_min: float = 0.0
    n: int = 1
    T: int = 1

    def __post_init__(self):
        if self.measure not in MEASURES:
            raise ParameterError(f"unknown error measure {self.measure!r}")
        if self.measure == "prechelt" and not self.o_max > self.o_min:
            raise ParameterError("prechelt measure needs o_max > o_min")
        if self.n < 1 or self.T < 1:
            raise ParameterError("n and T must both be >= 1")


def error_prechelt(spec: FitnessSpec, e_sqe: float) -> float:
    """``100 * (o_max - o_min) / n * e_sqe / T``.

    The range multiplies rather than divides; this is deliberate.
    """
    if e_sqe < 0:
        raise ParameterError("summed squared error cannot be negative")
    return 100.0 * (spec.o_max - spec.o_min) / spec.n * e_sqe / spec.T


def evaluate(spec: FitnessSpec, targets, actuals) -> float:
    """Apply ``spec.measure`` to a target/output pair (any matching shape)."""
    if spec.measure == "sqe":
        return error_sqe(targets, actuals)
    if spec.measure == "abs":
        return error_abs(targets, actuals)
    if spec.measure == "exp":
        return error_exp(targets, actuals)
    return error_prechelt(spec, error_sqe(targets, actuals))


def fitness_of(error: float) -> float:
    """Map an error onto ``(0, 1]``; zero error gives the maximum fitness 1."""
    return 1.0 / (1.0 + error)


def mark(individual, error_before: float, error_after: float) -> bool:
    """Store and return ``success`` = the error strictly decreased."""
    if math.isnan(error_before) or math.isnan(error_after):
        raise NumericError("cannot mark an individual with a NaN error")
    success = error_after < error_before
    individual.success = success
    return success
