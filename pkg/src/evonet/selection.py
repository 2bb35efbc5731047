"""Parent selection: linear rank probabilities, fittest-half truncation and
uniform random pairing."""

from __future__ import annotations

import math
from dataclasses import dataclass
from operator import attrgetter
from typing import Callable, Sequence

import numpy as np

from evonet.errors import EmptyPopulationError, PopulationTooSmallError

STRATEGIES = ("rank", "fittest-half", "random-pair")

_error = attrgetter("error")


def rank_probabilities(M: int) -> np.ndarray:
    """``P(rank) = (M - rank) / (1 + 2 + ... + M)`` for ranks ``0..M-1``."""
    if M < 1:
        raise EmptyPopulationError("cannot rank an empty population")
    return np.arange(M, 0, -1, dtype=float) / (M * (M + 1) / 2)


@dataclass(frozen=True)
class RankedPopulation:
    """Individuals sorted by ascending error; position = rank."""

    individuals: tuple

    @classmethod
    def of(cls, population: Sequence, key: Callable = _error) -> "RankedPopulation":
        if not population:
            raise EmptyPopulationError("cannot rank an empty population")
        # sorted() is stable, so equal errors keep their prior order
        return cls(tuple(sorted(population, key=key)))

    def __len__(self):
        return len(self.individuals)

    def __getitem__(self, rank):
        return self.individuals[rank]


def sample_ranks(M: int, rng: np.random.Generator, size: int | None = None):
    return rng.choice(M, size=size, p=rank_probabilities(M))


def sample_parent(pop: RankedPopulation, rng: np.random.Generator):
    return pop[int(sample_ranks(len(pop), rng))]


def fittest_half(population: Sequence, key: Callable = _error) -> list:
    """The ``ceil(M/2)`` lowest-error individuals in their original order."""
    M = len(population)
    if M < 2:
        raise PopulationTooSmallError("fittest_half needs at least 2 individuals")
    keep = sorted(range(M), key=lambda i: key(population[i]))[: math.ceil(M / 2)]
    return [population[i] for i in sorted(keep)]


def random_pairing(population: Sequence, rng: np.random.Generator) -> list[tuple]:
    """Uniformly random perfect matching; odd populations first gain a
    duplicate of one uniformly chosen member."""
    members = list(population)
    if not members:
        raise EmptyPopulationError("cannot pair an empty population")
    if len(members) % 2:
        members.append(members[int(rng.integers(len(members)))])
    order = rng.permutation(len(members))
    return [(members[order[k]], members[order[k + 1]]) for k in range(0, len(members), 2)]
