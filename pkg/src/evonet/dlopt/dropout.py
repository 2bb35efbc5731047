"""Dropout with test-time weight scaling (no inverted scaling during training)."""

from __future__ import annotations

import numpy as np

from evonet.errors import ParameterError


def _check_p(p):
    if not 0 <= p < 1:
        raise ParameterError(f"dropout probability must lie in [0, 1), got {p}")


def dropout_train(activations, p: float, rng: np.random.Generator):
    """Zero each unit independently with probability ``p``; survivors are
    left unscaled. Returns ``(dropped, mask)``."""
    _check_p(p)
    a = np.asarray(activations, dtype=float)
    if p == 0:
        return a.copy(), np.ones(a.shape)
    mask = (rng.random(a.shape) >= p).astype(float)
    return a * mask, mask


def dropout_infer(weights, p: float) -> np.ndarray:
    """Scale outgoing weights by ``1 - p`` to match expected training input."""
    _check_p(p)
    return np.asarray(weights, dtype=float) * (1.0 - p)
