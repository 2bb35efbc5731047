"""Feedforward phenotypes decoded from genomes, plus their two trainers.

A :class:`Network` evaluates nodes in topological order; inputs come first
and carry the presented pattern, every other node applies the activation to
the weighted sum of its predecessors. Weights may be trained by partial
backpropagation or simulated annealing and written back to the genome.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass, replace

import numpy as np

from evonet import fitness as fit
from evonet.dlopt import Optimizer, dropout_infer
from evonet.errors import CyclicGenomeError, DataError, DimensionError, ParameterError
from evonet.genome import (
    HIDDEN,
    INPUT,
    OUTPUT,
    BitStringGenome,
    GeneListGenome,
    MatrixGenome,
    decode_bitstring,
)

_ROLE_RANK = {INPUT: 0, HIDDEN: 1, OUTPUT: 2}
LOSSES = ("sqe", "abs", "exp")


def _sigmoid(z):
    return 1.0 / (1.0 + np.exp(-z))


ACTIVATIONS = {
    "sigmoid": (_sigmoid, lambda z, a: a * (1.0 - a)),
    "identity": (lambda z: z, lambda z, a: np.ones_like(z)),
    "tanh": (np.tanh, lambda z, a: 1.0 - a * a),
}


@dataclass(eq=False)
class Network:
    """Decoded phenotype.

    ``src``/``dst`` hold positions into ``node_ids``; ``keys[c]`` locates
    connection ``c`` in the genome it came from (matrix cell, innovation
    number or bit-string slot) so trained weights can be written back.
    """

    node_ids: tuple[int, ...]
    roles: tuple[str, ...]
    src: np.ndarray
    dst: np.ndarray
    weights: np.ndarray
    keys: tuple
    activation: str = "sigmoid"
    hidden_dropout: float = 0.0

    def __post_init__(self):
        self.src = np.asarray(self.src, dtype=np.intp)
        self.dst = np.asarray(self.dst, dtype=np.intp)
        self.weights = np.asarray(self.weights, dtype=float).copy()
        if self.activation not in ACTIVATIONS:
            raise ParameterError(f"unknown activation {self.activation!r}")
        if not (len(self.src) == len(self.dst) == len(self.weights) == len(self.keys)):
            raise ParameterError("connection arrays disagree in length")
        if np.any(self.src >= self.dst):
            raise ParameterError("node order is not topological for every connection")
        roles = np.array(self.roles)
        self.input_positions = np.flatnonzero(roles == INPUT)
        self.output_positions = np.flatnonzero(roles == OUTPUT)
        self.hidden_positions = np.flatnonzero(roles == HIDDEN)
        if len(self.input_positions) and self.input_positions[-1] != len(self.input_positions) - 1:
            raise ParameterError("input nodes must lead the node order")

    @property
    def n_inputs(self) -> int:
        return len(self.input_positions)

    @property
    def n_outputs(self) -> int:
        return len(self.output_positions)

    @property
    def connections(self) -> list[tuple[int, int, int]]:
        return [(self.node_ids[s], self.node_ids[d], c)
                for c, (s, d) in enumerate(zip(self.src, self.dst))]

    def copy(self) -> "Network":
        return replace(self, weights=self.weights.copy())

    def with_weights(self, weights) -> "Network":
        return replace(self, weights=np.asarray(weights, dtype=float).copy())


@dataclass
class ForwardTrace:
    pre_activation: np.ndarray
    activation: np.ndarray


# ------------------------------------------------------------------ building


def _prune(nodes, edges, roles):
    """Drop hidden nodes with neither a path from an input nor one to an output."""
    succ = {n: [] for n in nodes}
    pred = {n: [] for n in nodes}
    for a, b in edges:
        succ[a].append(b)
        pred[b].append(a)

    def reach(starts, nbrs):
        seen = set(starts)
        stack = list(starts)
        while stack:
            for m in nbrs[stack.pop()]:
                if m not in seen:
                    seen.add(m)
                    stack.append(m)
        return seen

    from_input = reach([n for n in nodes if roles[n] == INPUT], succ)
    to_output = reach([n for n in nodes if roles[n] == OUTPUT], pred)
    keep = [n for n in nodes if roles[n] != HIDDEN or n in from_input or n in to_output]
    kept = set(keep)
    return keep, [(a, b) for a, b in edges if a in kept and b in kept]


def _topological(nodes, edges, roles):
    indeg = {n: 0 for n in nodes}
    succ = {n: [] for n in nodes}
    for a, b in edges:
        succ[a].append(b)
        indeg[b] += 1
    heap = [(_ROLE_RANK[roles[n]], n) for n in nodes if indeg[n] == 0]
    heapq.heapify(heap)
    order = []
    while heap:
        _, n = heapq.heappop(heap)
        order.append(n)
        for m in succ[n]:
            indeg[m] -= 1
            if indeg[m] == 0:
                heapq.heappush(heap, (_ROLE_RANK[roles[m]], m))
    if len(order) != len(nodes):
        raise CyclicGenomeError("enabled connections contain a cycle")
    return order


def build_network(genome, activation: str = "sigmoid", prune: bool = True,
                  hidden_dropout: float = 0.0) -> Network:
    """Decode any genome variant into an evaluable :class:`Network`."""
    if isinstance(genome, BitStringGenome):
        slot_of = {s: k for k, s in enumerate(genome.layout)}
        net = build_network(decode_bitstring(genome), activation, prune, hidden_dropout)
        net.keys = tuple(slot_of[k] for k in net.keys)
        return net
    if isinstance(genome, MatrixGenome):
        exists = genome.exists()
        nodes = [int(i) for i in np.flatnonzero(exists)]
        roles = {}
        for i in nodes:
            if i < genome.n_inputs:
                roles[i] = INPUT
            elif i < genome.n_inputs + genome.n_hidden_max:
                roles[i] = HIDDEN
            else:
                roles[i] = OUTPUT
        edges = genome.connections()
        weight_of = {e: float(genome.weights[e]) for e in edges}
    elif isinstance(genome, GeneListGenome):
        nodes = [n.id for n in genome.neurons]
        roles = {n.id: n.role for n in genome.neurons}
        edges = []
        key_of = {}
        for c in genome.connections:
            if not c.enabled:
                continue
            if roles[c.out_id] == INPUT:
                raise ParameterError(f"gene {c.innovation} targets an input neuron")
            edges.append((c.in_id, c.out_id))
            key_of.setdefault((c.in_id, c.out_id), []).append((c.innovation, c.weight))
    else:
        raise TypeError(f"not a genome: {type(genome).__name__}")

    order = _topological(nodes, edges, roles)
    if prune:
        kept, edges = _prune(order, edges, roles)
        kept = set(kept)
        order = [n for n in order if n in kept]
    pos = {n: p for p, n in enumerate(order)}
    src, dst, weights, keys = [], [], [], []
    if isinstance(genome, MatrixGenome):
        for e in sorted(edges, key=lambda e: (pos[e[1]], pos[e[0]])):
            src.append(pos[e[0]])
            dst.append(pos[e[1]])
            weights.append(weight_of[e])
            keys.append(e)
    else:
        seen = set()
        for e in sorted(edges, key=lambda e: (pos[e[1]], pos[e[0]])):
            if e in seen:
                continue
            seen.add(e)
            for innovation, w in key_of[e]:
                src.append(pos[e[0]])
                dst.append(pos[e[1]])
                weights.append(w)
                keys.append(innovation)
    return Network(tuple(order), tuple(roles[n] for n in order), src, dst, weights,
                   tuple(keys), activation, hidden_dropout)


def genome_with_weights(genome, net: Network):
    """Copy ``genome`` with the network's (trained) weights written back."""
    if isinstance(genome, MatrixGenome):
        w = np.array(genome.weights)
        for (i, j), value in zip(net.keys, net.weights):
            w[i, j] = value
        return genome.replace(weights=w)
    if isinstance(genome, GeneListGenome):
        new = dict(zip(net.keys, (float(v) for v in net.weights)))
        conns = tuple(replace(c, weight=new[c.innovation]) if c.innovation in new else c
                      for c in genome.connections)
        return GeneListGenome(genome.neurons, conns)
    raise ParameterError("trained weights can be written back to matrix and gene-list genomes only")


# ---------------------------------------------------------------- evaluation


def _dense(net: Network, weights, inference: bool) -> np.ndarray:
    n = len(net.node_ids)
    W = np.zeros((n, n))
    np.add.at(W, (net.src, net.dst), weights)
    if inference and net.hidden_dropout > 0 and len(net.hidden_positions):
        W[net.hidden_positions] = dropout_infer(W[net.hidden_positions], net.hidden_dropout)
    return W


def _propagate(net: Network, X: np.ndarray, W: np.ndarray, mask=None):
    act, _ = ACTIVATIONS[net.activation]
    P, n = X.shape[0], len(net.node_ids)
    Z = np.zeros((P, n))
    A = np.zeros((P, n))
    n_in = net.n_inputs
    A[:, :n_in] = X
    for j in range(n_in, n):
        Z[:, j] = A[:, :j] @ W[:j, j]
        A[:, j] = act(Z[:, j])
        if mask is not None:
            A[:, j] *= mask[:, j]
    return Z, A


def _as_batch(net: Network, inputs) -> np.ndarray:
    X = np.asarray(inputs, dtype=float)
    if X.ndim == 1:
        X = X[None, :]
    if X.ndim != 2 or X.shape[1] != net.n_inputs:
        raise DimensionError(f"network expects {net.n_inputs} inputs, got shape {np.shape(inputs)}")
    return X


def forward_batch(net: Network, inputs) -> np.ndarray:
    """Outputs for a ``(patterns, inputs)`` matrix, shape ``(patterns, outputs)``."""
    X = _as_batch(net, inputs)
    _, A = _propagate(net, X, _dense(net, net.weights, inference=True))
    return A[:, net.output_positions]


def forward(net: Network, input_vector) -> np.ndarray:
    x = np.asarray(input_vector, dtype=float)
    if x.ndim != 1:
        raise DimensionError("forward takes a single input vector")
    return forward_batch(net, x)[0]


def trace(net: Network, input_vector) -> ForwardTrace:
    X = _as_batch(net, np.asarray(input_vector, dtype=float))
    Z, A = _propagate(net, X, _dense(net, net.weights, inference=True))
    return ForwardTrace(Z[0], A[0])


def _loss_derivative(loss, outputs, targets):
    diff = outputs - targets
    if loss == "sqe":
        return 2.0 * diff
    if loss == "abs":
        return np.sign(diff)
    if loss == "exp":
        return np.exp(np.abs(diff)) * np.sign(diff)
    raise ParameterError(f"loss must be one of {LOSSES}, got {loss!r}")


def _deltas(net: Network, X, Y, loss, weights, mask=None):
    """Per-pattern activations and ``dE/dz`` for every node."""
    W = _dense(net, weights, inference=False)
    Z, A = _propagate(net, X, W, mask)
    _, dact = ACTIVATIONS[net.activation]
    a_raw = A if mask is None else ACTIVATIONS[net.activation][0](Z)
    P, n = A.shape
    dA = np.zeros((P, n))
    dA[:, net.output_positions] = _loss_derivative(loss, A[:, net.output_positions], Y)
    D = np.zeros((P, n))
    for j in range(n - 1, net.n_inputs - 1, -1):
        d = dA[:, j] * dact(Z[:, j], a_raw[:, j])
        if mask is not None:
            d = d * mask[:, j]
        D[:, j] = d
        dA[:, :j] += np.outer(d, W[:j, j])
    return A, D


def _check_targets(net, X, targets):
    Y = np.asarray(targets, dtype=float)
    if Y.ndim == 1:
        Y = Y[:, None] if net.n_outputs == 1 and len(Y) == len(X) else Y[None, :]
    if Y.shape != (X.shape[0], net.n_outputs):
        raise DimensionError(f"targets shape {Y.shape} != {(X.shape[0], net.n_outputs)}")
    if X.shape[0] == 0:
        raise DataError("batch is empty")
    return Y


def per_pattern_gradients(net: Network, inputs, targets, loss: str = "sqe",
                          weights=None, mask=None) -> np.ndarray:
    """``(patterns, connections)`` array of single-pattern error gradients."""
    X = _as_batch(net, inputs)
    Y = _check_targets(net, X, targets)
    w = net.weights if weights is None else weights
    A, D = _deltas(net, X, Y, loss, w, mask)
    return A[:, net.src] * D[:, net.dst]


def backprop_gradients(net: Network, inputs, targets, loss: str = "sqe",
                       weights=None, mask=None) -> np.ndarray:
    """Gradient of the summed ``loss`` over the batch for every weight.

    The absolute-error derivative at zero residual is taken as 0.
    """
    return per_pattern_gradients(net, inputs, targets, loss, weights, mask).sum(axis=0)


def network_error(net: Network, inputs, targets, spec: fit.FitnessSpec | None = None) -> float:
    """Configured error measure of the network on a pattern set."""
    spec = spec or fit.FitnessSpec()
    X = _as_batch(net, inputs)
    Y = _check_targets(net, X, targets)
    if spec.measure == "prechelt":
        spec = replace(spec, n=Y.shape[1], T=Y.shape[0])
    return fit.evaluate(spec, Y, forward_batch(net, X))


# ------------------------------------------------------------------ trainers


def _splits(dataset):
    Xt, Yt = dataset.train_inputs, dataset.train_targets
    Xv, Yv = dataset.val_inputs, dataset.val_targets
    if len(Xt) == 0 or len(Xv) == 0:
        raise DataError("dataset has an empty training or validation split")
    return Xt, Yt, Xv, Yv


def partial_train_bp(net: Network, dataset, epochs: int, optimizer: Optimizer | None = None,
                     spec: fit.FitnessSpec | None = None, loss: str = "sqe",
                     rng: np.random.Generator | None = None):
    """Full-batch gradient training on the training split.

    Returns ``(trained_copy, error_before, error_after)`` where both errors
    are the configured measure on the validation split.
    """
    if epochs < 1:
        raise ParameterError("epochs must be >= 1")
    optimizer = optimizer or Optimizer()
    Xt, Yt, Xv, Yv = _splits(dataset)
    out = net.copy()
    before = network_error(out, Xv, Yv, spec)
    if len(out.weights) == 0:
        return out, before, before
    Xt = _as_batch(out, Xt)
    Yt = _check_targets(out, Xt, Yt)
    state = optimizer.init_state(len(out.weights))
    w = out.weights
    for epoch in range(epochs):
        mask = None
        if out.hidden_dropout > 0:
            if rng is None:
                raise ParameterError("dropout training needs an rng")
            mask = np.ones((len(Xt), len(out.node_ids)))
            mask[:, out.hidden_positions] = (
                rng.random((len(Xt), len(out.hidden_positions))) >= out.hidden_dropout
            )
        state, delta = optimizer.step(
            state, w, lambda v: backprop_gradients(out, Xt, Yt, loss, v, mask), epoch
        )
        w = w + delta
    out.weights = w
    return out, before, network_error(out, Xv, Yv, spec)


@dataclass(frozen=True)
class SaSchedule:
    T0: float = 1.0
    cooling: float = 0.9
    steps_per_temperature: int = 5
    T_min: float = 0.01
    proposal_sigma: float = 0.5

    def __post_init__(self):
        if not self.T0 > self.T_min > 0:
            raise ParameterError("SA schedule needs T0 > T_min > 0")
        if not 0 < self.cooling < 1:
            raise ParameterError("SA cooling factor must lie in (0, 1)")
        if self.steps_per_temperature < 1:
            raise ParameterError("steps_per_temperature must be >= 1")
        if self.proposal_sigma < 0:
            raise ParameterError("proposal_sigma must be >= 0")


@dataclass
class AcceptStats:
    proposed: int = 0
    accepted: int = 0
    uphill_accepted: int = 0


def sa_accept(delta_e: float, T: float, rng: np.random.Generator) -> bool:
    """Metropolis rule: downhill always, uphill with ``exp(-dE / T)``."""
    if delta_e <= 0:
        return True
    return bool(rng.random() < math.exp(-delta_e / T))


def train_sa(net: Network, dataset, schedule: SaSchedule, rng: np.random.Generator,
             spec: fit.FitnessSpec | None = None):
    """Simulated annealing over the weights on the training split.

    Each proposal perturbs one uniformly chosen weight by
    ``N(0, proposal_sigma**2)``; temperature cools geometrically from ``T0``
    while it stays above ``T_min``. Returns ``(best_copy, best_error, stats)``.
    """
    Xt, Yt, _, _ = _splits(dataset)
    stats = AcceptStats()
    current = net.weights.copy()
    probe = net.copy()
    e_cur = network_error(probe, Xt, Yt, spec)
    best, e_best = current.copy(), e_cur
    if len(current) == 0:
        return probe, e_cur, stats
    T = schedule.T0
    while T > schedule.T_min:
        for _ in range(schedule.steps_per_temperature):
            k = int(rng.integers(len(current)))
            proposal = current.copy()
            proposal[k] += rng.normal(0.0, schedule.proposal_sigma)
            probe.weights = proposal
            e_new = network_error(probe, Xt, Yt, spec)
            stats.proposed += 1
            delta = e_new - e_cur
            if sa_accept(delta, T, rng):
                stats.accepted += 1
                if delta > 0:
                    stats.uphill_accepted += 1
                current, e_cur = proposal, e_new
                if e_cur < e_best:
                    best, e_best = current.copy(), e_cur
        T *= schedule.cooling
    return net.with_weights(best), e_best, stats
