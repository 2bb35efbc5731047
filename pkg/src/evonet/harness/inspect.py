"""Human-readable genome reports and DOT export."""

from __future__ import annotations

from dataclasses import dataclass, field

from evonet.genome import (
    HIDDEN,
    INPUT,
    OUTPUT,
    BitStringGenome,
    GeneListGenome,
    MatrixGenome,
    decode_bitstring,
)
from evonet.phenotype import build_network


@dataclass
class GenomeSummary:
    kind: str
    neurons: dict  # id -> role
    edges: list  # (src, dst, weight, enabled, innovation or None)
    inactive: list = field(default_factory=list)
    extra: dict = field(default_factory=dict)


def summarize(genome) -> GenomeSummary:
    extra = {}
    if isinstance(genome, BitStringGenome):
        extra = {"granularity": genome.granularity, "g_max": genome.g_max,
                 "fixed_length": len(genome.memory)}
        kind, matrix = "bitstring", decode_bitstring(genome)
    elif isinstance(genome, MatrixGenome):
        kind, matrix = "matrix", genome
    elif isinstance(genome, GeneListGenome):
        neurons = {n.id: n.role for n in genome.neurons}
        edges = [(c.in_id, c.out_id, c.weight, c.enabled, c.innovation) for c in genome.connections]
        active = set(build_network(genome).node_ids)
        inactive = [i for i, r in neurons.items() if r == HIDDEN and i not in active]
        return GenomeSummary("genelist", neurons, edges, inactive)
    else:
        raise TypeError(f"not a genome: {type(genome).__name__}")
    exists = matrix.exists()
    m, N = matrix.n_inputs, matrix.n_hidden_max
    neurons = {}
    for i in range(matrix.size):
        if exists[i]:
            neurons[i] = INPUT if i < m else HIDDEN if i < m + N else OUTPUT
    edges = [(i, j, float(matrix.weights[i, j]), True, None) for i, j in matrix.connections()]
    active = set(build_network(matrix).node_ids)
    inactive = [i for i, r in neurons.items() if r == HIDDEN and i not in active]
    return GenomeSummary(kind, neurons, edges, inactive, extra)


def text_report(summary: GenomeSummary) -> str:
    roles = list(summary.neurons.values())
    enabled = [e for e in summary.edges if e[3]]
    lines = [
        f"encoding: {summary.kind}",
        f"neurons: {len(roles)} (inputs {roles.count(INPUT)}, hidden {roles.count(HIDDEN)}, "
        f"outputs {roles.count(OUTPUT)})",
        f"connections: {len(summary.edges)} ({len(enabled)} enabled)",
    ]
    lines += [f"{k}: {v}" for k, v in summary.extra.items()]
    if summary.inactive:
        lines.append("inactive hidden neurons: " + ", ".join(map(str, summary.inactive)))
    lines.append("connections:")
    for src, dst, w, on, innovation in summary.edges:
        tag = f"  [{innovation}]" if innovation is not None else ""
        state = "" if on else "  (disabled)"
        lines.append(f"  {src} -> {dst}  w={w:.6g}{tag}{state}")
    return "\n".join(lines)


_SHAPES = {INPUT: "box", HIDDEN: "ellipse", OUTPUT: "doublecircle"}


def to_dot(summary: GenomeSummary) -> str:
    lines = ["digraph genome {", "  rankdir=LR;"]
    for nid, role in summary.neurons.items():
        style = ", style=dashed" if nid in summary.inactive else ""
        lines.append(f'  n{nid} [label="{nid}", shape={_SHAPES[role]}{style}];')
    for src, dst, w, on, innovation in summary.edges:
        if on:
            lines.append(f'  n{src} -> n{dst} [label="{w:.3g}"];')
    lines.append("}")
    return "\n".join(lines)
