"""Gene-list operators with historical innovation numbers."""

from __future__ import annotations

from dataclasses import dataclass, field, replace

import numpy as np

from evonet.errors import ExhaustedSlotsError, InvalidTargetError
from evonet.genome import (
    HIDDEN,
    INPUT,
    OUTPUT,
    ConnectionGene,
    GeneListGenome,
    NeuronGene,
    find_cycle,
)


@dataclass
class InnovationRegistry:
    """Single-writer source of innovation numbers and neuron ids.

    Every mutation event gets a fresh number; numbers are never reused.
    """

    counter: int = 1
    next_neuron_id: int = 0
    history: list = field(default_factory=list)

    @classmethod
    def for_minimal(cls, m: int, n: int) -> "InnovationRegistry":
        """Registry that continues after :func:`minimal_genelist`'s numbering."""
        return cls(counter=m * n + 1, next_neuron_id=m + n)

    def assign(self, kind: str, endpoints: tuple[int, int]) -> int:
        number = self.counter
        self.counter += 1
        self.history.append((kind, tuple(endpoints), number))
        return number

    def new_neuron_id(self) -> int:
        nid = self.next_neuron_id
        self.next_neuron_id += 1
        return nid

    def to_dict(self) -> dict:
        return {"counter": self.counter, "next_neuron_id": self.next_neuron_id,
                "history": [[k, list(e), n] for k, e, n in self.history]}

    @classmethod
    def from_dict(cls, d: dict) -> "InnovationRegistry":
        return cls(d["counter"], d["next_neuron_id"],
                   [(k, tuple(e), n) for k, e, n in d["history"]])


def _reaches(edges, start, goal) -> bool:
    succ = {}
    for a, b in edges:
        succ.setdefault(a, []).append(b)
    stack, seen = [start], {start}
    while stack:
        n = stack.pop()
        if n == goal:
            return True
        for m in succ.get(n, ()):
            if m not in seen:
                seen.add(m)
                stack.append(m)
    return False


def legal_new_pairs(genome: GeneListGenome) -> list[tuple[int, int]]:
    """Absent ``(in, out)`` pairs whose addition keeps the graph of all genes
    acyclic. Inputs never receive and outputs never send."""
    present = {(c.in_id, c.out_id) for c in genome.connections}
    all_edges = list(present)
    roles = {n.id: n.role for n in genome.neurons}
    ids = sorted(roles)
    pairs = []
    for a in ids:
        if roles[a] == OUTPUT:
            continue
        for b in ids:
            if a == b or roles[b] == INPUT or (a, b) in present:
                continue
            if not _reaches(all_edges, b, a):
                pairs.append((a, b))
    return pairs


def neat_add_connection(genome: GeneListGenome, registry: InnovationRegistry,
                        rng: np.random.Generator,
                        weight_interval: tuple[float, float] = (-1.0, 1.0)) -> GeneListGenome:
    pairs = legal_new_pairs(genome)
    if not pairs:
        raise ExhaustedSlotsError("no connection can be added without a cycle or duplicate")
    a, b = pairs[int(rng.integers(len(pairs)))]
    w = float(rng.uniform(*weight_interval))
    gene = ConnectionGene(a, b, w, True, registry.assign("add_connection", (a, b)))
    return GeneListGenome(genome.neurons, genome.connections + (gene,))


def neat_split_connection(genome: GeneListGenome, registry: InnovationRegistry,
                          connection_gene: ConnectionGene | int) -> GeneListGenome:
    """Disable a gene and route it through a new hidden neuron: the incoming
    link gets weight 1, the outgoing link inherits the old weight."""
    number = connection_gene if isinstance(connection_gene, int) else connection_gene.innovation
    matches = [c for c in genome.connections if c.innovation == number]
    if not matches:
        raise InvalidTargetError(f"no gene with innovation {number}")
    old = matches[0]
    if not old.enabled:
        raise InvalidTargetError(f"gene {number} is disabled")
    nid = registry.new_neuron_id()
    first = ConnectionGene(old.in_id, nid, 1.0, True,
                           registry.assign("split_in", (old.in_id, nid)))
    second = ConnectionGene(nid, old.out_id, old.weight, True,
                            registry.assign("split_out", (nid, old.out_id)))
    conns = tuple(replace(c, enabled=False) if c.innovation == number else c
                  for c in genome.connections)
    return GeneListGenome(genome.neurons + (NeuronGene(nid, HIDDEN),), conns + (first, second))


@dataclass(frozen=True)
class AlignedRow:
    innovation: int
    a: ConnectionGene | None
    b: ConnectionGene | None

    @property
    def matching(self) -> bool:
        return self.a is not None and self.b is not None


def align_by_innovation(a: GeneListGenome, b: GeneListGenome) -> list[AlignedRow]:
    ga = {c.innovation: c for c in a.connections}
    gb = {c.innovation: c for c in b.connections}
    return [AlignedRow(k, ga.get(k), gb.get(k)) for k in sorted(ga.keys() | gb.keys())]


def crossover_genelists(a: GeneListGenome, b: GeneListGenome, a_is_fitter: bool,
                        rng: np.random.Generator, max_tries: int = 10) -> GeneListGenome:
    """Matching genes come from a uniformly chosen parent, unmatched genes
    from the fitter parent only. A child whose enabled genes form a cycle is
    resampled; after ``max_tries`` the fitter parent is returned unchanged."""
    fitter = a if a_is_fitter else b
    rows = align_by_innovation(a, b)
    ids = [n.id for n in fitter.neurons]
    for _ in range(max_tries):
        genes = []
        for row in rows:
            if row.matching:
                genes.append(row.a if rng.random() < 0.5 else row.b)
            else:
                gene = row.a if a_is_fitter else row.b
                if gene is not None:
                    genes.append(gene)
        edges = [(c.in_id, c.out_id) for c in genes if c.enabled]
        if not find_cycle(ids, edges):
            return GeneListGenome(fitter.neurons, tuple(genes))
    return fitter
