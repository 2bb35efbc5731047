"""Experiment surface: datasets, JSON config, run artifacts and the CLI."""

from evonet.harness.config import ExperimentConfig, load_config, parse_config
from evonet.harness.datasets import Dataset, load_dataset

__all__ = ["Dataset", "ExperimentConfig", "load_config", "load_dataset", "parse_config"]
