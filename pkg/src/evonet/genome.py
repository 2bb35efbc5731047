"""Genome representations: bit strings, connectivity/weight matrices, gene lists.

Node numbering is shared by the bit-string and matrix encodings: inputs occupy
``0..m-1``, hidden neurons ``m..m+N-1`` and outputs ``m+N..m+N+n-1``. A
connection ``(i, j)`` feeds neuron ``i`` into neuron ``j`` and is legal in
feedforward mode only when ``i < j`` and ``j`` is not an input.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from evonet.errors import (
    InfeasibleRangeError,
    ParameterError,
    RepresentationError,
    StructuralDecodeError,
)

INPUT, HIDDEN, OUTPUT = "input", "hidden", "output"
ROLES = (INPUT, HIDDEN, OUTPUT)

Slot = tuple[int, int]


def header_width(g_max: int) -> int:
    """Bits needed to store ``g - 1`` for every granularity up to ``g_max``."""
    if g_max < 2:
        raise ParameterError(f"g_max must be >= 2, got {g_max}")
    return max(1, math.ceil(math.log2(g_max)))


def fixed_length_of(layout: Sequence[Slot] | int, g_max: int, H: int | None = None) -> int:
    """Length of the padded storage used for crossover: header plus one
    ``g_max``-bit chunk per slot."""
    if g_max < 2:
        raise ParameterError(f"g_max must be >= 2, got {g_max}")
    if H is None:
        H = header_width(g_max)
    slots = layout if isinstance(layout, int) else len(layout)
    return H + slots * g_max


def legal_slot(i: int, j: int, n_inputs: int) -> bool:
    return i < j and j >= n_inputs


def default_layout(n_inputs: int, n_hidden: int, n_outputs: int) -> tuple[Slot, ...]:
    """Every legal feedforward slot, grouped by target neuron."""
    size = n_inputs + n_hidden + n_outputs
    return tuple((i, j) for j in range(n_inputs, size) for i in range(j))


def _check_layout(layout, size, n_inputs):
    seen_targets = set()
    prev_target = None
    for i, j in layout:
        if not (0 <= i < size and 0 <= j < size):
            raise ParameterError(f"layout slot {(i, j)} outside a {size}-node network")
        if not legal_slot(i, j, n_inputs):
            raise ParameterError(f"layout slot {(i, j)} is not a feedforward slot")
        if j != prev_target:
            if j in seen_targets:
                raise ParameterError(f"slots targeting neuron {j} are not contiguous")
            seen_targets.add(j)
            prev_target = j
    if len(set(layout)) != len(layout):
        raise ParameterError("layout contains duplicate slots")


@dataclass(frozen=True)
class BitStringGenome:
    """Bit-string chromosome held in its padded fixed-length memory.

    ``memory`` is the header followed by one ``g_max``-bit chunk per layout
    slot. The first bit of a chunk is the connectivity bit; the weight bits
    of the current granularity ``g`` are the last ``g - 1`` bits of the
    chunk. Remaining bits are stored but unused by the decoded network.
    """

    memory: str
    layout: tuple[Slot, ...]
    n_inputs: int
    n_hidden: int
    n_outputs: int
    g_max: int
    w_lo: int

    def __post_init__(self):
        object.__setattr__(self, "layout", tuple((int(i), int(j)) for i, j in self.layout))
        if set(self.memory) - {"0", "1"}:
            raise StructuralDecodeError("bit strings may contain only '0' and '1'")
        expected = fixed_length_of(self.layout, self.g_max)
        if len(self.memory) != expected:
            raise StructuralDecodeError(
                f"fixed memory has {len(self.memory)} bits, expected {expected}"
            )
        _check_layout(self.layout, self.size, self.n_inputs)
        g = int(self.header, 2) + 1
        if not 1 < g <= self.g_max:
            raise StructuralDecodeError(f"header decodes to granularity {g}, outside (1, {self.g_max}]")

    @property
    def size(self) -> int:
        return self.n_inputs + self.n_hidden + self.n_outputs

    @property
    def header_width(self) -> int:
        return header_width(self.g_max)

    @property
    def header(self) -> str:
        return self.memory[: self.header_width]

    @property
    def granularity(self) -> int:
        return int(self.header, 2) + 1

    @property
    def weight_codebook(self) -> tuple[int, int]:
        """``(w_lo, bits)``: weight bits ``b`` decode to ``w_lo + b``."""
        return self.w_lo, self.granularity - 1

    def chunk(self, k: int) -> str:
        start = self.header_width + k * self.g_max
        return self.memory[start : start + self.g_max]

    @property
    def substrings(self) -> tuple[str, ...]:
        g = self.granularity
        out = []
        for k in range(len(self.layout)):
            c = self.chunk(k)
            out.append("1" + c[self.g_max - (g - 1) :] if c[0] == "1" else "0")
        return tuple(out)

    @property
    def logical_bits(self) -> str:
        return self.header + "".join(self.substrings)

    def slot_weight(self, k: int) -> int | None:
        """Decoded integer weight of slot ``k``, or None when absent."""
        c = self.chunk(k)
        if c[0] == "0":
            return None
        g = self.granularity
        return self.w_lo + int(c[self.g_max - (g - 1) :], 2)

    def with_memory(self, memory: str) -> "BitStringGenome":
        return BitStringGenome(memory, self.layout, self.n_inputs, self.n_hidden,
                               self.n_outputs, self.g_max, self.w_lo)

    @classmethod
    def from_logical(cls, bits: str, layout, n_inputs, n_hidden, n_outputs, g_max, w_lo):
        """Parse a variable-length logical string (absent slots carry one bit)."""
        layout = tuple(layout)
        H = header_width(g_max)
        if set(bits) - {"0", "1"}:
            raise StructuralDecodeError("bit strings may contain only '0' and '1'")
        if len(bits) < H:
            raise StructuralDecodeError(f"string of {len(bits)} bits has no {H}-bit header")
        g = int(bits[:H], 2) + 1
        if not 1 < g <= g_max:
            raise StructuralDecodeError(f"header decodes to granularity {g}, outside (1, {g_max}]")
        pos = H
        chunks = []
        for k in range(len(layout)):
            if pos >= len(bits):
                raise StructuralDecodeError(f"string ends before slot {k}")
            if bits[pos] == "0":
                chunks.append("0" * g_max)
                pos += 1
            else:
                w = bits[pos + 1 : pos + g]
                if len(w) != g - 1:
                    raise StructuralDecodeError(f"slot {k} is truncated")
                chunks.append("1" + "0" * (g_max - g) + w)
                pos += g
        if pos != len(bits):
            raise StructuralDecodeError(f"{len(bits) - pos} trailing bits after the last slot")
        return cls(bits[:H] + "".join(chunks), layout, n_inputs, n_hidden, n_outputs, g_max, w_lo)


def _readonly(a, dtype):
    a = np.array(a, dtype=dtype, copy=True)
    a.setflags(write=False)
    return a


@dataclass(frozen=True, eq=False)
class MatrixGenome:
    """Connectivity and weight matrices over ``m + N + n`` neurons plus a
    hidden-neuron existence vector."""

    n_inputs: int
    n_hidden_max: int
    n_outputs: int
    connectivity: np.ndarray
    weights: np.ndarray
    hidden_exists: np.ndarray

    def __post_init__(self):
        size = self.size
        object.__setattr__(self, "connectivity", _readonly(self.connectivity, np.int8))
        object.__setattr__(self, "weights", _readonly(self.weights, np.float64))
        object.__setattr__(self, "hidden_exists", _readonly(self.hidden_exists, np.int8))
        if self.connectivity.shape != (size, size) or self.weights.shape != (size, size):
            raise ParameterError(f"matrices must have shape {(size, size)}")
        if self.hidden_exists.shape != (self.n_hidden_max,):
            raise ParameterError(f"hidden_exists must have length {self.n_hidden_max}")
        problems = matrix_violations(self)
        if problems:
            raise ParameterError("; ".join(problems))

    @property
    def size(self) -> int:
        return self.n_inputs + self.n_hidden_max + self.n_outputs

    @property
    def output_indices(self) -> range:
        return range(self.n_inputs + self.n_hidden_max, self.size)

    @property
    def hidden_indices(self) -> list[int]:
        """Matrix indices of existing hidden neurons."""
        return [self.n_inputs + h for h in np.flatnonzero(self.hidden_exists)]

    def exists(self) -> np.ndarray:
        mask = np.ones(self.size, dtype=bool)
        mask[self.n_inputs : self.n_inputs + self.n_hidden_max] = self.hidden_exists.astype(bool)
        return mask

    def connections(self) -> list[Slot]:
        return [(int(i), int(j)) for i, j in zip(*np.nonzero(self.connectivity))]

    @property
    def connection_count(self) -> int:
        return int(self.connectivity.sum())

    @property
    def hidden_count(self) -> int:
        return int(self.hidden_exists.sum())

    def legal_absent_slots(self) -> list[Slot]:
        exists = self.exists()
        idx = np.flatnonzero(exists)
        return [
            (int(i), int(j))
            for j in idx
            for i in idx
            if legal_slot(i, j, self.n_inputs) and not self.connectivity[i, j]
        ]

    def replace(self, connectivity=None, weights=None, hidden_exists=None) -> "MatrixGenome":
        return MatrixGenome(
            self.n_inputs,
            self.n_hidden_max,
            self.n_outputs,
            self.connectivity if connectivity is None else connectivity,
            self.weights if weights is None else weights,
            self.hidden_exists if hidden_exists is None else hidden_exists,
        )

    def __eq__(self, other):
        if not isinstance(other, MatrixGenome):
            return NotImplemented
        return (
            (self.n_inputs, self.n_hidden_max, self.n_outputs)
            == (other.n_inputs, other.n_hidden_max, other.n_outputs)
            and np.array_equal(self.connectivity, other.connectivity)
            and np.array_equal(self.weights, other.weights)
            and np.array_equal(self.hidden_exists, other.hidden_exists)
        )

    __hash__ = None


def matrix_violations(g: MatrixGenome) -> list[str]:
    problems = []
    conn = g.connectivity.astype(bool)
    if np.any(g.weights[~conn] != 0):
        problems.append("weights present where connectivity is 0")
    if np.any(np.tril(conn)):
        problems.append("connectivity has entries on or below the diagonal")
    if np.any(conn[:, : g.n_inputs]):
        problems.append("connections target an input neuron")
    if not np.all((g.hidden_exists == 0) | (g.hidden_exists == 1)):
        problems.append("hidden_exists entries must be 0 or 1")
    if not np.all((g.connectivity == 0) | (g.connectivity == 1)):
        problems.append("connectivity entries must be 0 or 1")
    dead = ~g.exists()
    if np.any(conn[dead, :]) or np.any(conn[:, dead]):
        problems.append("connection touches a non-existent hidden neuron")
    if not np.all(np.isfinite(g.weights)):
        problems.append("non-finite weight")
    return problems


@dataclass(frozen=True)
class NeuronGene:
    id: int
    role: str


@dataclass(frozen=True)
class ConnectionGene:
    in_id: int
    out_id: int
    weight: float
    enabled: bool
    innovation: int


@dataclass(frozen=True)
class GeneListGenome:
    neurons: tuple[NeuronGene, ...]
    connections: tuple[ConnectionGene, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "neurons", tuple(self.neurons))
        object.__setattr__(self, "connections", tuple(self.connections))
        ids = [n.id for n in self.neurons]
        if len(set(ids)) != len(ids):
            raise ParameterError("neuron ids must be unique")
        for n in self.neurons:
            if n.role not in ROLES:
                raise ParameterError(f"unknown neuron role {n.role!r}")
        innovations = [c.innovation for c in self.connections]
        if len(set(innovations)) != len(innovations):
            raise ParameterError("innovation numbers must be unique within a genome")
        known = set(ids)
        for c in self.connections:
            if c.in_id not in known or c.out_id not in known:
                raise ParameterError(f"connection gene {c.innovation} references an unknown neuron")

    def ids_with_role(self, role: str) -> list[int]:
        return [n.id for n in self.neurons if n.role == role]

    def role_of(self, neuron_id: int) -> str:
        for n in self.neurons:
            if n.id == neuron_id:
                return n.role
        raise KeyError(neuron_id)

    @property
    def n_inputs(self) -> int:
        return len(self.ids_with_role(INPUT))

    @property
    def n_outputs(self) -> int:
        return len(self.ids_with_role(OUTPUT))

    @property
    def hidden_count(self) -> int:
        return len(self.ids_with_role(HIDDEN))

    @property
    def connection_count(self) -> int:
        return sum(1 for c in self.connections if c.enabled)

    def enabled_edges(self) -> list[Slot]:
        return [(c.in_id, c.out_id) for c in self.connections if c.enabled]

    def max_innovation(self) -> int:
        return max((c.innovation for c in self.connections), default=0)


def find_cycle(nodes: Iterable[int], edges: Iterable[Slot]) -> bool:
    """True when the directed graph has a cycle."""
    nodes = list(nodes)
    indeg = {n: 0 for n in nodes}
    succ = {n: [] for n in nodes}
    for a, b in edges:
        succ[a].append(b)
        indeg[b] += 1
    stack = [n for n in nodes if indeg[n] == 0]
    seen = 0
    while stack:
        n = stack.pop()
        seen += 1
        for m in succ[n]:
            indeg[m] -= 1
            if indeg[m] == 0:
                stack.append(m)
    return seen != len(nodes)


def genelist_violations(g: GeneListGenome) -> list[str]:
    problems = []
    ids = {n.id for n in g.neurons}
    for c in g.connections:
        if g.role_of(c.out_id) == INPUT:
            problems.append(f"gene {c.innovation} targets an input neuron")
        if c.in_id == c.out_id:
            problems.append(f"gene {c.innovation} is a self-loop")
        if not math.isfinite(c.weight):
            problems.append(f"gene {c.innovation} has a non-finite weight")
    if find_cycle(ids, g.enabled_edges()):
        problems.append("enabled connections form a cycle")
    return problems


def genome_violations(genome) -> list[str]:
    """Every invariant the genome breaks (empty list when valid)."""
    if isinstance(genome, MatrixGenome):
        return matrix_violations(genome)
    if isinstance(genome, GeneListGenome):
        return genelist_violations(genome)
    if isinstance(genome, BitStringGenome):
        problems = []
        g = genome.granularity
        if not 1 < g <= genome.g_max:
            problems.append(f"granularity {g} outside (1, {genome.g_max}]")
        for k, s in enumerate(genome.substrings):
            if s[0] == "1" and len(s) != g:
                problems.append(f"slot {k} substring has {len(s)} bits, expected {g}")
            if s[0] == "0" and len(s) != 1:
                problems.append(f"absent slot {k} still carries weight bits")
        expected = genome.header_width + sum(1 if s == "0" else g for s in genome.substrings)
        if len(genome.logical_bits) != expected:
            problems.append("logical length mismatch")
        return problems
    raise TypeError(f"not a genome: {type(genome).__name__}")


# ---------------------------------------------------------------- bit strings


def decode_bitstring(genome: BitStringGenome) -> MatrixGenome:
    size = genome.size
    conn = np.zeros((size, size), dtype=np.int8)
    weights = np.zeros((size, size))
    for k, (i, j) in enumerate(genome.layout):
        w = genome.slot_weight(k)
        if w is not None:
            conn[i, j] = 1
            weights[i, j] = w
    return MatrixGenome(genome.n_inputs, genome.n_hidden, genome.n_outputs, conn, weights,
                        np.ones(genome.n_hidden, dtype=np.int8))


def encode_bitstring(matrix: MatrixGenome, g: int, layout=None, w_lo: int = -2,
                     g_max: int | None = None) -> BitStringGenome:
    """Inverse of :func:`decode_bitstring` over the layout slots.

    Raises RepresentationError when a present weight falls outside the
    ``2**(g-1)`` integers starting at ``w_lo`` or when a connection has no
    layout slot.
    """
    g_max = g if g_max is None else g_max
    if not 1 < g <= g_max:
        raise ParameterError(f"granularity {g} outside (1, {g_max}]")
    if layout is None:
        layout = default_layout(matrix.n_inputs, matrix.n_hidden_max, matrix.n_outputs)
    layout = tuple(layout)
    in_layout = set(layout)
    for slot in matrix.connections():
        if slot not in in_layout:
            raise RepresentationError(f"connection {slot} has no slot in the layout")
    bits = g - 1
    w_hi = w_lo + 2**bits - 1
    H = header_width(g_max)
    chunks = []
    for i, j in layout:
        if not matrix.connectivity[i, j]:
            chunks.append("0" * g_max)
            continue
        w = float(matrix.weights[i, j])
        if w != round(w) or not w_lo <= w <= w_hi:
            raise RepresentationError(f"weight {w} at {(i, j)} not in codebook {w_lo}..{w_hi}")
        chunks.append("1" + "0" * (g_max - g) + format(int(w) - w_lo, f"0{bits}b"))
    header = format(g - 1, f"0{H}b")
    return BitStringGenome(header + "".join(chunks), layout, matrix.n_inputs,
                           matrix.n_hidden_max, matrix.n_outputs, g_max, w_lo)


def random_bitstring_genome(rng: np.random.Generator, n_inputs: int, n_hidden: int,
                            n_outputs: int, g_max: int, w_lo: int,
                            granularity: tuple[int, int] | None = None,
                            layout=None) -> BitStringGenome:
    """Random chromosome with granularity drawn uniformly from the range."""
    g_lo, g_hi = granularity or (2, g_max)
    if not 1 < g_lo <= g_hi <= g_max:
        raise InfeasibleRangeError(f"granularity range {(g_lo, g_hi)} outside (1, {g_max}]")
    if layout is None:
        layout = default_layout(n_inputs, n_hidden, n_outputs)
    g = int(rng.integers(g_lo, g_hi + 1))
    H = header_width(g_max)
    body = rng.integers(0, 2, size=len(layout) * g_max)
    # dormant bits start at zero so growing the granularity zero-extends
    chunks = []
    for k in range(len(layout)):
        c = body[k * g_max : (k + 1) * g_max]
        if c[0]:
            chunks.append("1" + "0" * (g_max - g) + "".join(map(str, c[g_max - (g - 1) :])))
        else:
            chunks.append("0" * g_max)
    return BitStringGenome(format(g - 1, f"0{H}b") + "".join(chunks), layout,
                           n_inputs, n_hidden, n_outputs, g_max, w_lo)


# ----------------------------------------------------------- random matrices


@dataclass(frozen=True)
class InitRanges:
    hidden: tuple[int, int] = (1, 4)
    connections: tuple[int, int] = (2, 10)
    weights: tuple[float, float] = (-0.5, 0.5)


def _slot_count(n_inputs, n_hidden, n_outputs):
    size = n_inputs + n_hidden + n_outputs
    return sum(j for j in range(n_inputs, size))


def random_matrix_genome(ranges: InitRanges, rng: np.random.Generator, n_inputs: int,
                         n_hidden_max: int, n_outputs: int) -> MatrixGenome:
    """Uniform hidden count, uniform connection count, uniform slot placement.

    The connection count is clamped to the legal slots available for the
    drawn hidden count.
    """
    h_lo, h_hi = ranges.hidden
    c_lo, c_hi = ranges.connections
    w_lo, w_hi = ranges.weights
    if not 0 <= h_lo <= h_hi <= n_hidden_max:
        raise InfeasibleRangeError(f"hidden range {ranges.hidden} outside [0, {n_hidden_max}]")
    if not 0 <= c_lo <= c_hi:
        raise InfeasibleRangeError(f"invalid connection range {ranges.connections}")
    if c_lo > _slot_count(n_inputs, h_hi, n_outputs):
        raise InfeasibleRangeError(
            f"c_min={c_lo} exceeds the {_slot_count(n_inputs, h_hi, n_outputs)} legal slots"
        )
    if w_lo > w_hi:
        raise InfeasibleRangeError(f"invalid weight interval {ranges.weights}")
    h = int(rng.integers(h_lo, h_hi + 1))
    c = int(rng.integers(c_lo, c_hi + 1))
    hidden_exists = np.zeros(n_hidden_max, dtype=np.int8)
    if h:
        hidden_exists[rng.choice(n_hidden_max, size=h, replace=False)] = 1
    size = n_inputs + n_hidden_max + n_outputs
    empty = MatrixGenome(n_inputs, n_hidden_max, n_outputs, np.zeros((size, size)),
                         np.zeros((size, size)), hidden_exists)
    slots = empty.legal_absent_slots()
    c = min(c, len(slots))
    conn = np.zeros((size, size), dtype=np.int8)
    weights = np.zeros((size, size))
    if c:
        for k in rng.choice(len(slots), size=c, replace=False):
            i, j = slots[k]
            conn[i, j] = 1
            weights[i, j] = rng.uniform(w_lo, w_hi)
    return empty.replace(connectivity=conn, weights=weights)


# ---------------------------------------------------------------- gene lists


def minimal_genelist(m: int, n: int, rng: np.random.Generator,
                     weight_interval: tuple[float, float] = (-1.0, 1.0)) -> GeneListGenome:
    """Fully connected input->output genome with no hidden neurons.

    Inputs get ids ``0..m-1`` and outputs ``m..m+n-1``; innovation numbers
    ``1..m*n`` follow ``(in_id, out_id)`` order so every minimal genome of the
    same shape aligns gene for gene.
    """
    if m < 1 or n < 1:
        raise ParameterError("minimal_genelist needs m >= 1 and n >= 1")
    neurons = [NeuronGene(i, INPUT) for i in range(m)]
    neurons += [NeuronGene(m + o, OUTPUT) for o in range(n)]
    lo, hi = weight_interval
    conns = []
    innovation = 1
    for i in range(m):
        for o in range(n):
            conns.append(ConnectionGene(i, m + o, float(rng.uniform(lo, hi)), True, innovation))
            innovation += 1
    return GeneListGenome(tuple(neurons), tuple(conns))


# ------------------------------------------------------------- serialization


def genome_kind(genome) -> str:
    if isinstance(genome, BitStringGenome):
        return "bitstring"
    if isinstance(genome, MatrixGenome):
        return "matrix"
    if isinstance(genome, GeneListGenome):
        return "genelist"
    raise TypeError(f"not a genome: {type(genome).__name__}")


def genome_to_dict(genome) -> dict:
    kind = genome_kind(genome)
    if kind == "bitstring":
        return {
            "kind": kind,
            "n_inputs": genome.n_inputs,
            "n_hidden": genome.n_hidden,
            "n_outputs": genome.n_outputs,
            "g_max": genome.g_max,
            "w_lo": genome.w_lo,
            "layout": [list(s) for s in genome.layout],
            "memory": genome.memory,
            "bits": genome.logical_bits,
        }
    if kind == "matrix":
        return {
            "kind": kind,
            "n_inputs": genome.n_inputs,
            "n_hidden_max": genome.n_hidden_max,
            "n_outputs": genome.n_outputs,
            "connectivity": genome.connectivity.astype(int).tolist(),
            "weights": genome.weights.tolist(),
            "hidden_exists": genome.hidden_exists.astype(int).tolist(),
        }
    return {
        "kind": kind,
        "neurons": [{"id": n.id, "role": n.role} for n in genome.neurons],
        "connections": [
            {"in": c.in_id, "out": c.out_id, "weight": c.weight, "enabled": c.enabled,
             "innovation": c.innovation}
            for c in genome.connections
        ],
    }


def genome_from_dict(d: dict):
    try:
        kind = d["kind"]
        if kind == "bitstring":
            args = (tuple(map(tuple, d["layout"])), d["n_inputs"], d["n_hidden"],
                    d["n_outputs"], d["g_max"], d["w_lo"])
            if "memory" in d:
                g = BitStringGenome(d["memory"], *args)
                if "bits" in d and d["bits"] != g.logical_bits:
                    raise StructuralDecodeError("'bits' disagrees with 'memory'")
                return g
            return BitStringGenome.from_logical(d["bits"], *args)
        if kind == "matrix":
            return MatrixGenome(d["n_inputs"], d["n_hidden_max"], d["n_outputs"],
                                np.array(d["connectivity"]), np.array(d["weights"], dtype=float),
                                np.array(d["hidden_exists"]))
        if kind == "genelist":
            return GeneListGenome(
                tuple(NeuronGene(int(n["id"]), n["role"]) for n in d["neurons"]),
                tuple(ConnectionGene(int(c["in"]), int(c["out"]), float(c["weight"]),
                                     bool(c["enabled"]), int(c["innovation"]))
                      for c in d["connections"]),
            )
    except (KeyError, TypeError) as exc:
        raise ParameterError(f"malformed genome record: {exc!r}") from exc
    raise ParameterError(f"unknown genome kind {d.get('kind')!r}")


def dumps(genome, **kwargs) -> str:
    return json.dumps(genome_to_dict(genome), **kwargs)


def loads(text: str):
    return genome_from_dict(json.loads(text))


__all__ = [
    "BitStringGenome", "MatrixGenome", "GeneListGenome", "NeuronGene", "ConnectionGene",
    "InitRanges", "INPUT", "HIDDEN", "OUTPUT", "header_width", "fixed_length_of",
    "default_layout", "legal_slot", "decode_bitstring", "encode_bitstring",
    "random_bitstring_genome", "random_matrix_genome", "minimal_genelist",
    "genome_violations", "find_cycle", "genome_to_dict", "genome_from_dict",
    "genome_kind", "dumps", "loads",
]
