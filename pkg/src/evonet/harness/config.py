"""JSON experiment configuration with whole-document validation.

Every violated constraint is collected before anything is reported, so one
run of ``evonet evolve`` lists all of a config's problems at once.
"""

from __future__ import annotations

import dataclasses
import json
from dataclasses import dataclass, field
from pathlib import Path

from evonet.dlopt import LrSchedule, Optimizer
from evonet.engine import EvolutionConfig, OperatorParams, TrainerSettings
from evonet.errors import ConfigError, EvonetError
from evonet.fitness import FitnessSpec
from evonet.genome import InitRanges
from evonet.phenotype import SaSchedule
from evonet.variation import BitMutationRates

SCHEMA_VERSION = 1


@dataclass(frozen=True)
class DatasetSettings:
    source: str = "xor"
    validation_fraction: float = 0.2
    n_inputs: int | None = None
    n_outputs: int = 1
    header: bool = False
    bias_input: bool = False
    whiten_inputs: bool = False


@dataclass(frozen=True)
class OutputSettings:
    dir: str = "runs/default"
    checkpoint_every: int = 10


@dataclass(frozen=True)
class ExperimentConfig:
    seed: int = 0
    dataset: DatasetSettings = field(default_factory=DatasetSettings)
    evolution: EvolutionConfig = field(default_factory=EvolutionConfig)
    output: OutputSettings = field(default_factory=OutputSettings)
    schema_version: int = SCHEMA_VERSION


# nested dataclass fields, by (owner, field name)
_NESTED = {
    (ExperimentConfig, "dataset"): DatasetSettings,
    (ExperimentConfig, "evolution"): EvolutionConfig,
    (ExperimentConfig, "output"): OutputSettings,
    (EvolutionConfig, "fitness"): FitnessSpec,
    (EvolutionConfig, "operators"): OperatorParams,
    (EvolutionConfig, "trainer"): TrainerSettings,
    (EvolutionConfig, "init"): InitRanges,
    (OperatorParams, "bit_rates"): BitMutationRates,
    (TrainerSettings, "optimizer"): Optimizer,
    (TrainerSettings, "sa"): SaSchedule,
    (Optimizer, "schedule"): LrSchedule,
}


def _type_ok(cls, name, value) -> bool:
    spec = next(f for f in dataclasses.fields(cls) if f.name == name)
    if value is None:
        return "None" in str(spec.type)
    default = spec.default
    if isinstance(default, bool):
        return isinstance(value, bool)
    if isinstance(default, (int, float)):
        return isinstance(value, (int, float)) and not isinstance(value, bool)
    return True


def _build(cls, data, path: str, problems: list):
    if not isinstance(data, dict):
        problems.append(f"{path or 'config'} must be an object")
        return None
    names = {f.name for f in dataclasses.fields(cls)}
    for key in sorted(set(data) - names):
        problems.append(f"{path}{key}: unknown key")
    kwargs = {}
    for name in names & set(data):
        value = data[name]
        nested = _NESTED.get((cls, name))
        if nested is not None and value is not None:
            value = _build(nested, value, f"{path}{name}.", problems)
            if value is None:
                continue
        elif isinstance(value, list):
            value = tuple(value)
        elif not _type_ok(cls, name, value):
            default = next(f.default for f in dataclasses.fields(cls) if f.name == name)
            kind = "a boolean" if isinstance(default, bool) else "a number"
            problems.append(f"{path}{name}: expected {kind}, got {value!r}")
            continue
        kwargs[name] = value
    try:
        return cls(**kwargs)
    except (EvonetError, TypeError) as exc:
        problems.append(f"{path.rstrip('.') or 'config'}: {exc}")
        return None


def parse_config(data: dict) -> ExperimentConfig:
    """Validate a decoded JSON document; raises :class:`ConfigError` listing
    every problem found."""
    problems: list[str] = []
    if not isinstance(data, dict):
        raise ConfigError(["config must be a JSON object"])
    version = data.get("schema_version")
    if version != SCHEMA_VERSION:
        problems.append(f"schema_version must be {SCHEMA_VERSION}, got {version!r}")
    seed = data.get("seed", 0)
    if not isinstance(seed, int) or isinstance(seed, bool) or not 0 <= seed < 2**64:
        problems.append("seed must be an integer in [0, 2^64)")
        seed = 0
    evo = dict(data.get("evolution", {}) or {})
    evo.setdefault("seed", seed)
    config = _build(ExperimentConfig, {**data, "evolution": evo}, "", problems)
    if config is not None:
        if config.evolution.seed != seed:
            problems.append("evolution.seed must match the top-level seed")
        problems.extend(config.evolution.problems())
        ds = config.dataset
        if not 0 <= ds.validation_fraction < 1:
            problems.append("dataset.validation_fraction must lie in [0, 1)")
        if ds.n_outputs < 1:
            problems.append("dataset.n_outputs must be ≥ 1")
        if config.output.checkpoint_every < 0:
            problems.append("output.checkpoint_every must be ≥ 0")
    if problems:
        raise ConfigError(problems)
    return config


def load_config(path) -> ExperimentConfig:
    try:
        data = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise ConfigError([f"{path}: invalid JSON ({exc})"]) from None
    return parse_config(data)


def config_to_dict(config: ExperimentConfig) -> dict:
    """Plain-JSON snapshot that :func:`parse_config` maps back to ``config``."""
    return dataclasses.asdict(config)
