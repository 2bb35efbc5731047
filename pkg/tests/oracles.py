"""Straight-line reference implementations used as independent oracles.

These deliberately avoid numpy vectorization and the package's own helpers:
plain loops over Python floats, written directly from the defining formulas.
"""

from __future__ import annotations

import math
from decimal import Decimal, localcontext


def sqe(targets, actuals):
    total = 0.0
    for t, a in zip(targets, actuals):
        total += (t - a) * (t - a)
    return total


def abs_error(targets, actuals):
    total = 0.0
    for t, a in zip(targets, actuals):
        total += abs(t - a)
    return total


def exp_error(targets, actuals):
    total = 0.0
    for t, a in zip(targets, actuals):
        total += math.exp(abs(t - a))
    return total


def percentage_error(o_max, o_min, n_outputs, n_patterns, e_sq):
    return 100.0 * (o_max - o_min) / n_outputs * e_sq / n_patterns


def rank_probability(M, rank):
    denom = 0
    for k in range(1, M + 1):
        denom += k
    return (M - rank) / denom


def temperature(f, f_max):
    return 1.0 - f / f_max


def instantaneous(u, T):
    return u * T


def perturbed(weight, alpha, t_inst, z):
    """Weight after adding ``z`` standard-normal units of ``sqrt(alpha * t)``."""
    return weight + math.sqrt(alpha * t_inst) * z


def mutation_count(d_min, d_max, u, t_inst):
    return d_min + int(math.floor(u * t_inst * (d_max - d_min)))


def importance_statistic(w, deltas):
    xi = [w + d for d in deltas]
    mean = sum(xi) / len(xi)
    ss = 0.0
    for x in xi:
        ss += (x - mean) ** 2
    return sum(xi) / math.sqrt(ss)


def momentum_updates(g_seq, alpha, m):
    """Sequence of updates ``dw(t) = -alpha g(t) + m dw(t-1)`` from ``dw(0)=0``."""
    out, prev = [], [0.0] * len(g_seq[0])
    for g in g_seq:
        prev = [-alpha * gi + m * pi for gi, pi in zip(g, prev)]
        out.append(prev)
    return out


def nesterov_trajectory(grad, w0, alpha, m, steps):
    """Iterate the look-ahead update on a list of weights."""
    w, v = list(w0), [0.0] * len(w0)
    history = []
    for _ in range(steps):
        look = [wi + m * vi for wi, vi in zip(w, v)]
        g = grad(look)
        v = [-alpha * gi + m * vi for gi, vi in zip(g, v)]
        w = [wi + vi for wi, vi in zip(w, v)]
        history.append((list(w), list(v)))
    return history


def sigmoid(z):
    return 1.0 / (1.0 + math.exp(-z))


def matrix_forward(n_inputs, n_hidden_max, n_outputs, conn, weights, exists, x):
    """Evaluate a matrix genome node by node, without any pruning."""
    size = n_inputs + n_hidden_max + n_outputs
    act = [0.0] * size
    for i in range(n_inputs):
        act[i] = float(x[i])
    for j in range(n_inputs, size):
        if j < n_inputs + n_hidden_max and not exists[j - n_inputs]:
            continue
        z = 0.0
        for i in range(j):
            if conn[i][j]:
                z += act[i] * weights[i][j]
        act[j] = sigmoid(z)
    return [act[j] for j in range(n_inputs + n_hidden_max, size)]


def lcn_reference(grid, radius):
    rows, cols = len(grid), len(grid[0])
    padded = [[0.0] * (cols + 2 * radius) for _ in range(rows + 2 * radius)]
    for r in range(rows):
        for c in range(cols):
            padded[r + radius][c + radius] = float(grid[r][c])
    out = [[0.0] * cols for _ in range(rows)]
    for r in range(rows):
        for c in range(cols):
            window = []
            for dr in range(2 * radius + 1):
                for dc in range(2 * radius + 1):
                    window.append(padded[r + dr][c + dc])
            mean = sum(window) / len(window)
            var = sum((v - mean) ** 2 for v in window) / len(window)
            std = math.sqrt(var)
            centred = grid[r][c] - mean
            out[r][c] = centred / std if std > 1 else centred
    return out


def central_difference(f, x, h=1e-6):
    """Gradient of scalar ``f`` at list ``x`` by central differences."""
    grad = []
    for k in range(len(x)):
        up, down = list(x), list(x)
        up[k] += h
        down[k] -= h
        grad.append((f(up) - f(down)) / (2 * h))
    return grad


def batchnorm_weighted_sum(x, gamma, beta, upstream, epsilon):
    """``sum(upstream * batchnorm(x))`` in 50-digit decimal arithmetic.

    ``x`` and ``upstream`` are lists of rows; training-mode statistics.
    """
    with localcontext() as ctx:
        ctx.prec = 50
        B, F = len(x), len(x[0])
        eps = Decimal(epsilon)
        total = Decimal(0)
        for f in range(F):
            col = [Decimal(x[b][f]) for b in range(B)]
            mean = sum(col) / B
            var = sum((v - mean) ** 2 for v in col) / B
            std = (var + eps).sqrt()
            for b in range(B):
                y = Decimal(gamma[f]) * (col[b] - mean) / std + Decimal(beta[f])
                total += y * Decimal(upstream[b][f])
        return total


def precise_central_difference(f, x, h="1e-20"):
    """Central differences of a decimal-valued ``f`` at float list ``x``;
    step and arithmetic are far below float64 resolution."""
    with localcontext() as ctx:
        ctx.prec = 50
        step = Decimal(h)
        grad = []
        for k in range(len(x)):
            up = [Decimal(v) for v in x]
            down = list(up)
            up[k] += step
            down[k] -= step
            grad.append(float((f(up) - f(down)) / (2 * step)))
        return grad
