"""Builtin truth-table tasks and strict CSV ingestion."""

from __future__ import annotations

import csv
import itertools
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from evonet.dlopt import apply_whitening, whiten
from evonet.errors import DataError

MAX_PARITY_BITS = 16
DATA_STREAM = 7


@dataclass(eq=False)
class Dataset:
    """Patterns plus a train/validation split.

    With ``holdout=False`` both splits are the full pattern set, which is the
    only sensible choice for truth tables such as XOR.
    """

    inputs: np.ndarray
    targets: np.ndarray
    train_idx: np.ndarray
    val_idx: np.ndarray
    name: str = ""

    def __post_init__(self):
        self.inputs = np.asarray(self.inputs, dtype=float)
        self.targets = np.asarray(self.targets, dtype=float)
        if self.targets.ndim == 1:
            self.targets = self.targets[:, None]
        if len(self.inputs) != len(self.targets):
            raise DataError("inputs and targets have different pattern counts")
        self.train_idx = np.asarray(self.train_idx, dtype=int)
        self.val_idx = np.asarray(self.val_idx, dtype=int)

    @classmethod
    def full(cls, inputs, targets, name: str = "") -> "Dataset":
        n = len(inputs)
        return cls(inputs, targets, np.arange(n), np.arange(n), name)

    @property
    def holdout(self) -> bool:
        return not np.array_equal(self.train_idx, self.val_idx)

    @property
    def n_inputs(self) -> int:
        return self.inputs.shape[1]

    @property
    def n_outputs(self) -> int:
        return self.targets.shape[1]

    @property
    def train_inputs(self):
        return self.inputs[self.train_idx]

    @property
    def train_targets(self):
        return self.targets[self.train_idx]

    @property
    def val_inputs(self):
        return self.inputs[self.val_idx]

    @property
    def val_targets(self):
        return self.targets[self.val_idx]


def xor_table():
    X = np.array([[0, 0], [0, 1], [1, 0], [1, 1]], dtype=float)
    return X, np.array([[0], [1], [1], [0]], dtype=float)


def parity_table(n_bits: int):
    if not 1 <= n_bits <= MAX_PARITY_BITS:
        raise DataError(f"parity size must lie in [1, {MAX_PARITY_BITS}], got {n_bits}")
    X = np.array(list(itertools.product((0, 1), repeat=n_bits)), dtype=float)
    return X, (X.sum(axis=1) % 2)[:, None]


def read_csv(path, n_inputs: int | None = None, n_outputs: int = 1, header: bool = False):
    """Parse a numeric CSV; errors name the offending line and column."""
    rows = []
    width = None
    with open(path, newline="") as fh:
        for lineno, row in enumerate(csv.reader(fh), start=1):
            if header and lineno == 1:
                continue
            if not row or all(not cell.strip() for cell in row):
                continue
            if width is None:
                width = len(row)
            elif len(row) != width:
                raise DataError(f"{path}: line {lineno} has {len(row)} columns, expected {width}")
            values = []
            for col, cell in enumerate(row, start=1):
                try:
                    values.append(float(cell))
                except ValueError:
                    raise DataError(
                        f"{path}: line {lineno}, column {col}: {cell.strip()!r} is not numeric"
                    ) from None
            rows.append(values)
    if not rows:
        raise DataError(f"{path}: no data rows")
    data = np.array(rows)
    if not np.all(np.isfinite(data)):
        raise DataError(f"{path}: non-finite values")
    if n_inputs is None:
        n_inputs = width - n_outputs
    if n_inputs < 1 or n_outputs < 1 or n_inputs + n_outputs != width:
        raise DataError(f"{path}: {width} columns cannot hold {n_inputs} inputs + {n_outputs} outputs")
    return data[:, :n_inputs], data[:, n_inputs:]


def split_indices(n: int, validation_fraction: float, seed: int):
    """Deterministic shuffled split; fraction 0 means no holdout."""
    if not 0 <= validation_fraction < 1:
        raise DataError("validation_fraction must lie in [0, 1)")
    if validation_fraction == 0:
        return np.arange(n), np.arange(n)
    rng = np.random.default_rng(np.random.SeedSequence(seed, spawn_key=(DATA_STREAM,)))
    perm = rng.permutation(n)
    n_val = max(1, int(round(n * validation_fraction)))
    if n_val >= n:
        raise DataError(f"{n} patterns are too few for a {validation_fraction} holdout")
    return np.sort(perm[n_val:]), np.sort(perm[:n_val])


def load_dataset(source: str, *, seed: int = 0, validation_fraction: float = 0.2,
                 n_inputs: int | None = None, n_outputs: int = 1, header: bool = False,
                 bias_input: bool = False, whiten_inputs: bool = False) -> Dataset:
    """Load ``"xor"``, ``"parity:N"`` or a CSV path.

    ``whiten_inputs`` standardizes inputs with training-split statistics;
    ``bias_input`` then appends a constant-1 input column.
    """
    if source == "xor":
        X, Y = xor_table()
    elif source.startswith("parity:"):
        try:
            bits = int(source.split(":", 1)[1])
        except ValueError:
            raise DataError(f"bad parity size in {source!r}") from None
        X, Y = parity_table(bits)
    elif Path(source).suffix.lower() == ".csv" or Path(source).exists():
        X, Y = read_csv(source, n_inputs, n_outputs, header)
    else:
        raise DataError(f"unknown dataset {source!r}")
    train, val = split_indices(len(X), validation_fraction, seed)
    if whiten_inputs:
        _, mean, std = whiten(X[train])
        X = apply_whitening(X, mean, std)
    if bias_input:
        X = np.hstack([X, np.ones((len(X), 1))])
    return Dataset(X, Y, train, val, source)
