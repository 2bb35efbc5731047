"""Structural mutations on matrix genomes: neuron deletion, importance-ranked
connection deletion/addition and function-preserving cell division."""

from __future__ import annotations

import logging
import math

import numpy as np

from evonet.errors import CapacityError, DataError, ExhaustedSlotsError, ParameterError
from evonet.genome import MatrixGenome
from evonet.phenotype import build_network, per_pattern_gradients

log = logging.getLogger(__name__)

CONNECTION_TEST_SENTINEL = math.inf


def connection_test(w: float, deltas) -> float:
    """Importance of a connection: ``sum(xi) / sqrt(sum((xi - mean(xi))**2))``
    with ``xi = w + delta_i`` over the validation patterns.

    Perfectly stable ``xi`` yield :data:`CONNECTION_TEST_SENTINEL` (most
    important) unless they are all zero, which scores 0.
    """
    d = np.asarray(deltas, dtype=float)
    if d.ndim != 1 or len(d) < 2:
        raise ParameterError("connection_test needs at least 2 per-pattern updates")
    xi = w + d
    total = float(xi.sum())
    if np.all(xi == xi[0]):
        return 0.0 if total == 0 else CONNECTION_TEST_SENTINEL
    spread = math.sqrt(float(np.sum((xi - xi.mean()) ** 2)))
    if spread == 0:
        return 0.0 if total == 0 else CONNECTION_TEST_SENTINEL
    return total / spread


def _validation(dataset):
    X, Y = dataset.val_inputs, dataset.val_targets
    if len(X) == 0:
        raise DataError("connection ranking needs validation patterns")
    return np.asarray(X, dtype=float), np.asarray(Y, dtype=float)


def connection_tests(genome: MatrixGenome, slots, X, Y, eta: float,
                     activation: str = "sigmoid") -> np.ndarray:
    """Test statistic for each ``(i, j)`` slot; absent slots are scored as
    zero-weight connections (their gradient is exact at weight 0)."""
    conn = np.array(genome.connectivity)
    for i, j in slots:
        conn[i, j] = 1
    probe = genome.replace(connectivity=conn)
    net = build_network(probe, activation, prune=False)
    col = {k: c for c, k in enumerate(net.keys)}
    grads = per_pattern_gradients(net, X, Y, loss="abs")
    out = np.empty(len(slots))
    for s, slot in enumerate(slots):
        c = col[slot]
        out[s] = connection_test(net.weights[c], -eta * grads[:, c])
    return out


def delete_neurons(genome: MatrixGenome, count: int, rng: np.random.Generator) -> MatrixGenome:
    """Remove ``count`` uniformly chosen hidden neurons and their links."""
    hidden = genome.hidden_indices
    if count > len(hidden):
        log.warning("asked to delete %d of %d hidden neurons; clamping", count, len(hidden))
        count = len(hidden)
    if count <= 0:
        return genome
    victims = rng.choice(hidden, size=count, replace=False)
    conn = np.array(genome.connectivity)
    w = np.array(genome.weights)
    exists = np.array(genome.hidden_exists)
    for v in victims:
        conn[v, :] = conn[:, v] = 0
        w[v, :] = w[:, v] = 0.0
        exists[v - genome.n_inputs] = 0
    return genome.replace(connectivity=conn, weights=w, hidden_exists=exists)


def delete_connections(genome: MatrixGenome, count: int, dataset, eta: float,
                       activation: str = "sigmoid") -> MatrixGenome:
    """Remove the ``count`` connections with the smallest ``|test|``."""
    X, Y = _validation(dataset)
    slots = genome.connections()
    count = min(count, len(slots))
    if count <= 0:
        return genome
    tests = connection_tests(genome, slots, X, Y, eta, activation)
    doomed = np.argsort(np.abs(tests), kind="stable")[:count]
    conn = np.array(genome.connectivity)
    w = np.array(genome.weights)
    for k in doomed:
        i, j = slots[k]
        conn[i, j] = 0
        w[i, j] = 0.0
    return genome.replace(connectivity=conn, weights=w)


def add_connections(genome: MatrixGenome, count: int, dataset, eta: float,
                    init_interval: tuple[float, float], rng: np.random.Generator,
                    activation: str = "sigmoid") -> MatrixGenome:
    """Enable the ``count`` absent legal slots with the largest ``|test|``.

    New weights are uniform over ``init_interval``; ``(0, 0)`` adds
    zero-weight links.
    """
    if count <= 0:
        return genome
    X, Y = _validation(dataset)
    slots = genome.legal_absent_slots()
    if not slots:
        raise ExhaustedSlotsError("no absent feedforward slot is left to add")
    count = min(count, len(slots))
    tests = connection_tests(genome, slots, X, Y, eta, activation)
    chosen = np.argsort(-np.abs(tests), kind="stable")[:count]
    lo, hi = init_interval
    conn = np.array(genome.connectivity)
    w = np.array(genome.weights)
    for k in chosen:
        i, j = slots[k]
        conn[i, j] = 1
        w[i, j] = rng.uniform(lo, hi)
    return genome.replace(connectivity=conn, weights=w)


def split_neuron(genome: MatrixGenome, neuron_i: int, alpha: float):
    """Cell division returning ``(genome, (first, second))`` matrix indices.

    A free hidden slot is moved directly after ``neuron_i`` (a relabelling of
    hidden neurons that keeps their relative order) so the split pair stays
    strictly upper triangular.
    """
    m, N = genome.n_inputs, genome.n_hidden_max
    if not (m <= neuron_i < m + N) or not genome.hidden_exists[neuron_i - m]:
        raise ParameterError(f"neuron {neuron_i} is not an existing hidden neuron")
    free = [h for h in range(N) if not genome.hidden_exists[h]]
    if not free:
        raise CapacityError(f"all {N} hidden neuron slots are in use")
    h_i = neuron_i - m
    # nearest free slot keeps the relabelling small
    f = min(free, key=lambda h: (abs(h - h_i), h))
    order = [h for h in range(N) if h != f]
    order.insert(order.index(h_i) + 1, f)
    perm = np.concatenate([np.arange(m), m + np.array(order, dtype=int),
                           np.arange(m + N, genome.size)])
    conn = np.array(genome.connectivity)[np.ix_(perm, perm)]
    w = np.array(genome.weights)[np.ix_(perm, perm)]
    exists = np.array(genome.hidden_exists)[order]
    first = m + order.index(h_i)
    second = first + 1
    exists[second - m] = 1
    conn[:, second] = conn[:, first]
    w[:, second] = w[:, first]
    conn[second, :] = conn[first, :]
    outgoing = w[first, :].copy()
    w[first, :] = (1.0 + alpha) * outgoing
    w[second, :] = -alpha * outgoing
    return genome.replace(connectivity=conn, weights=w, hidden_exists=exists), (first, second)


def cell_division(genome: MatrixGenome, neuron_i: int, alpha: float) -> MatrixGenome:
    """Split hidden ``neuron_i`` in two: both copies keep the incoming
    weights, outgoing weights become ``(1 + alpha) w`` and ``-alpha w``."""
    return split_neuron(genome, neuron_i, alpha)[0]
