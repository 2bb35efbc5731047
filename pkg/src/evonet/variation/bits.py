"""Bit-flip mutation and n-point crossover on fixed-length chromosomes."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from evonet.errors import IncompatibleParentsError, ParameterError
from evonet.genome import BitStringGenome


@dataclass(frozen=True)
class BitMutationRates:
    p_granularity: float = 0.05
    p_connectivity: float = 0.02
    p_weight: float = 0.02

    def __post_init__(self):
        for name in ("p_granularity", "p_connectivity", "p_weight"):
            if not 0 <= getattr(self, name) <= 1:
                raise ParameterError(f"{name} must lie in [0, 1]")


def _bit_categories(genome: BitStringGenome) -> np.ndarray:
    """0 = header bit, 1 = connectivity bit, 2 = weight storage bit."""
    H, G = genome.header_width, genome.g_max
    cat = np.full(len(genome.memory), 2, dtype=np.int8)
    cat[:H] = 0
    cat[H::G] = 1
    return cat


def _clamp_header(memory: str, H: int, g_max: int) -> str:
    g = int(memory[:H], 2) + 1
    g = min(max(g, 2), g_max)
    return format(g - 1, f"0{H}b") + memory[H:]


def mutate_bitstring(genome: BitStringGenome, rates: BitMutationRates,
                     rng: np.random.Generator) -> BitStringGenome:
    """Flip every stored bit with its category's probability.

    Weight bits are right-aligned inside each chunk, so a granularity change
    re-reads the low ``g - 1`` bits: shrinking drops the most significant
    ones, growing brings stored (initially zero) bits back. A header that
    decodes outside ``(1, g_max]`` is clamped to the nearest valid value.
    """
    cat = _bit_categories(genome)
    p = np.array([rates.p_granularity, rates.p_connectivity, rates.p_weight])[cat]
    flips = rng.random(len(cat)) < p
    bits = np.frombuffer(genome.memory.encode(), dtype=np.uint8) - ord("0")
    bits = bits ^ flips.astype(np.uint8)
    memory = (bits + ord("0")).astype(np.uint8).tobytes().decode()
    return genome.with_memory(_clamp_header(memory, genome.header_width, genome.g_max))


def npoint_crossover(a: str, b: str, n: int, rng: np.random.Generator | None = None,
                     cut_points=None) -> tuple[str, str]:
    """Exchange alternating segments between ``n`` distinct cut points.

    A cut point ``c`` separates bit ``c - 1`` from bit ``c``.
    """
    if len(a) != len(b):
        raise IncompatibleParentsError(f"parents have lengths {len(a)} and {len(b)}")
    L = len(a)
    if not 1 <= n < L:
        raise ParameterError(f"need 1 <= n < {L}, got n={n}")
    if cut_points is None:
        cuts = np.sort(rng.choice(np.arange(1, L), size=n, replace=False))
    else:
        cuts = np.sort(np.asarray(cut_points, dtype=int))
        if len(cuts) != n or len(set(cuts.tolist())) != n or cuts[0] < 1 or cuts[-1] >= L:
            raise ParameterError("cut points must be n distinct positions in [1, L)")
    bounds = [0, *cuts.tolist(), L]
    c1, c2 = [], []
    for s, (lo, hi) in enumerate(zip(bounds[:-1], bounds[1:])):
        x, y = (a, b) if s % 2 == 0 else (b, a)
        c1.append(x[lo:hi])
        c2.append(y[lo:hi])
    return "".join(c1), "".join(c2)


def crossover_bitstrings(a: BitStringGenome, b: BitStringGenome, n: int,
                         rng: np.random.Generator) -> tuple[BitStringGenome, BitStringGenome]:
    """n-point crossover of two chromosomes' fixed-length memories."""
    if (a.layout, a.g_max, a.w_lo) != (b.layout, b.g_max, b.w_lo):
        raise IncompatibleParentsError("parents use different layouts or codebooks")
    m1, m2 = npoint_crossover(a.memory, b.memory, n, rng)
    H = a.header_width
    return (a.with_memory(_clamp_header(m1, H, a.g_max)),
            a.with_memory(_clamp_header(m2, H, a.g_max)))
