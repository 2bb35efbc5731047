"""Fitness-driven temperature and the mutation intensities derived from it."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from evonet.errors import DomainError, ParameterError
from evonet.genome import BitStringGenome, ConnectionGene, GeneListGenome, MatrixGenome


@dataclass(frozen=True)
class TemperatureParams:
    alpha: float = 1.0
    delta_min: int = 1
    delta_max: int = 3
    f_max: float = 1.0

    def __post_init__(self):
        if not 0 <= self.delta_min <= self.delta_max:
            raise ParameterError("need 0 <= delta_min <= delta_max")
        if self.f_max <= 0:
            raise ParameterError("f_max must be > 0")
        if self.alpha <= 0:
            raise ParameterError("alpha must be > 0")


def temperature(f: float, f_max: float) -> float:
    """``1 - f / f_max``: the fitter the parent, the colder."""
    if f > f_max:
        raise DomainError(f"fitness {f} exceeds the maximum {f_max}")
    if f < 0:
        raise DomainError(f"fitness {f} is negative")
    return 1.0 - f / f_max


def instantaneous_temperature(T: float, rng: np.random.Generator) -> float:
    """One fresh ``U(0,1) * T`` draw, taken per operator application."""
    if not 0 <= T <= 1:
        raise DomainError(f"temperature {T} outside [0, 1]")
    return float(rng.random()) * T


def perturb_weights(genome, params: TemperatureParams, t_inst: float,
                    rng: np.random.Generator):
    """Add ``N(0, alpha * t_inst)`` noise (variance, not std) to every weight.

    Matrix genomes perturb present connections in row-major order; gene lists
    perturb every connection gene in gene order. Structure never changes.
    """
    if t_inst < 0:
        raise DomainError("instantaneous temperature must be >= 0")
    variance = params.alpha * t_inst
    if variance == 0:
        return genome
    sigma = math.sqrt(variance)
    if isinstance(genome, MatrixGenome):
        rows, cols = np.nonzero(genome.connectivity)
        w = np.array(genome.weights)
        w[rows, cols] += rng.normal(0.0, sigma, size=len(rows))
        return genome.replace(weights=w)
    if isinstance(genome, GeneListGenome):
        noise = rng.normal(0.0, sigma, size=len(genome.connections))
        conns = tuple(
            ConnectionGene(c.in_id, c.out_id, c.weight + float(d), c.enabled, c.innovation)
            for c, d in zip(genome.connections, noise)
        )
        return GeneListGenome(genome.neurons, conns)
    if isinstance(genome, BitStringGenome):
        raise ParameterError("bit-string weights mutate through bit flips, not gaussian noise")
    raise TypeError(f"not a genome: {type(genome).__name__}")


def structural_mutation_count(params: TemperatureParams, t_inst: float,
                              rng: np.random.Generator) -> int:
    """``delta_min + floor(U(0,1) * t_inst * (delta_max - delta_min))``."""
    if not 0 <= t_inst <= 1:
        raise DomainError(f"instantaneous temperature {t_inst} outside [0, 1]")
    u = float(rng.random())
    return params.delta_min + math.floor(u * t_inst * (params.delta_max - params.delta_min))
