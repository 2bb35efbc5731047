"""Input whitening, local contrastive normalization and batch normalization."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from numpy.lib.stride_tricks import sliding_window_view

from evonet.errors import BatchSizeError, CacheError, DataError, ParameterError


def whiten(data) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Per-feature zero mean and unit variance.

    Returns ``(whitened, mean, std)``. Constant features are centred but not
    scaled; their reported std is 0.
    """
    x = np.asarray(data, dtype=float)
    if x.ndim != 2 or x.shape[0] == 0:
        raise DataError("whiten needs a non-empty patterns x features matrix")
    if x.shape[0] < 2:
        raise DataError("whiten needs at least 2 patterns")
    mean = x.mean(axis=0)
    centred = x - mean
    std = centred.std(axis=0)
    scale = np.where(std > 0, std, 1.0)
    return centred / scale, mean, std


def apply_whitening(data, mean, std) -> np.ndarray:
    """Reuse statistics from :func:`whiten` on new data."""
    x = np.asarray(data, dtype=float)
    return (x - mean) / np.where(std > 0, std, 1.0)


def lcn(feature_map, radius: int = 1) -> np.ndarray:
    """Local contrastive normalization of one 2-D feature map.

    Each pixel's ``(2r+1)**2`` window (zero padded at the edges) is centred on
    its own mean; the centred target is divided by the window's population
    standard deviation only when that exceeds 1.
    """
    x = np.asarray(feature_map, dtype=float)
    if x.ndim != 2 or x.size == 0:
        raise DataError("lcn needs a non-empty 2-D grid")
    if radius < 1:
        raise ParameterError("radius must be >= 1")
    padded = np.pad(x, radius)
    win = sliding_window_view(padded, (2 * radius + 1, 2 * radius + 1))
    mean = win.mean(axis=(-2, -1))
    std = np.sqrt(((win - mean[..., None, None]) ** 2).mean(axis=(-2, -1)))
    centred = x - mean
    return np.where(std > 1.0, centred / np.where(std > 1.0, std, 1.0), centred)


@dataclass(eq=False)
class BatchNormState:
    gamma: np.ndarray
    beta: np.ndarray
    running_mean: np.ndarray
    running_var: np.ndarray
    epsilon: float = 1e-5
    momentum_stats: float = 0.9

    def __post_init__(self):
        for name in ("gamma", "beta", "running_mean", "running_var"):
            setattr(self, name, np.asarray(getattr(self, name), dtype=float).copy())
        n = self.gamma.shape
        if not (self.beta.shape == self.running_mean.shape == self.running_var.shape == n):
            raise ParameterError("batchnorm parameter arrays must share one feature count")
        if self.epsilon <= 0:
            raise ParameterError("epsilon must be > 0")

    @classmethod
    def fresh(cls, n_features: int, epsilon: float = 1e-5, momentum_stats: float = 0.9):
        return cls(np.ones(n_features), np.zeros(n_features), np.zeros(n_features),
                   np.ones(n_features), epsilon, momentum_stats)


@dataclass(eq=False)
class BatchNormCache:
    x_hat: np.ndarray
    inv_std: np.ndarray
    gamma: np.ndarray
    mode: str
    consumed: bool = field(default=False)


def batchnorm_forward(batch, state: BatchNormState, mode: str = "train"):
    """Normalize a ``(batch, features)`` matrix.

    In train mode the mini-batch statistics are used and folded into the
    running averages; in infer mode the running averages are used.
    """
    x = np.asarray(batch, dtype=float)
    if x.ndim != 2 or x.shape[1] != state.gamma.shape[0]:
        raise ParameterError(f"batch must have shape (B, {state.gamma.shape[0]})")
    if mode == "train":
        if x.shape[0] < 2:
            raise BatchSizeError("train-mode batch normalization needs a batch of >= 2")
        mu = x.mean(axis=0)
        var = x.var(axis=0)
        r = state.momentum_stats
        state.running_mean = r * state.running_mean + (1 - r) * mu
        state.running_var = r * state.running_var + (1 - r) * var
    elif mode == "infer":
        mu, var = state.running_mean, state.running_var
    else:
        raise ParameterError(f"unknown batchnorm mode {mode!r}")
    inv_std = 1.0 / np.sqrt(var + state.epsilon)
    x_hat = (x - mu) * inv_std
    out = state.gamma * x_hat + state.beta
    return out, BatchNormCache(x_hat, inv_std, state.gamma.copy(), mode)


def batchnorm_backward(cache: BatchNormCache, upstream_gradient):
    """Exact gradients of a train-mode forward pass.

    Returns ``(input_gradient, dgamma, dbeta)``. A cache may be consumed once.
    """
    dy = np.asarray(upstream_gradient, dtype=float)
    if cache.consumed:
        raise CacheError("batchnorm cache already consumed by a backward pass")
    if dy.shape != cache.x_hat.shape:
        raise CacheError(f"upstream gradient shape {dy.shape} does not match cache {cache.x_hat.shape}")
    cache.consumed = True
    dbeta = dy.sum(axis=0)
    dgamma = (dy * cache.x_hat).sum(axis=0)
    dx_hat = dy * cache.gamma
    if cache.mode == "infer":
        return dx_hat * cache.inv_std, dgamma, dbeta
    n = dy.shape[0]
    dx = (cache.inv_std / n) * (
        n * dx_hat - dx_hat.sum(axis=0) - cache.x_hat * (dx_hat * cache.x_hat).sum(axis=0)
    )
    return dx, dgamma, dbeta
