"""On-disk run layout: config snapshot, metrics CSV, checkpoints, best genome.

::

    <dir>/config.json
    <dir>/metrics.csv
    <dir>/checkpoints/gen_000100.json
    <dir>/best_genome.json
"""

from __future__ import annotations

import json
from pathlib import Path

from evonet.engine import GenerationReport
from evonet.errors import DataError
from evonet.genome import genome_to_dict

METRICS_HEADER = "gen,best,mean,worst,hidden_mean,conn_mean"


def metrics_row(r: GenerationReport) -> str:
    return ",".join([str(r.generation)] + [repr(float(v)) for v in
                    (r.best, r.mean, r.worst, r.hidden_mean, r.conn_mean)])


class RunArtifacts:
    def __init__(self, directory):
        self.dir = Path(directory)
        self.checkpoint_dir = self.dir / "checkpoints"

    @property
    def metrics_path(self) -> Path:
        return self.dir / "metrics.csv"

    @property
    def best_path(self) -> Path:
        return self.dir / "best_genome.json"

    @property
    def config_path(self) -> Path:
        return self.dir / "config.json"

    def prepare(self, config_snapshot: dict) -> None:
        self.checkpoint_dir.mkdir(parents=True, exist_ok=True)
        self.config_path.write_text(json.dumps(config_snapshot, indent=2) + "\n")

    def write_metrics(self, history) -> None:
        """Rewrite the whole log; used at start and after a resume."""
        text = "\n".join([METRICS_HEADER] + [metrics_row(r) for r in history]) + "\n"
        self.metrics_path.write_text(text)

    def append_metrics(self, report: GenerationReport) -> None:
        with open(self.metrics_path, "a") as fh:
            fh.write(metrics_row(report) + "\n")

    def checkpoint_path(self, generation: int) -> Path:
        return self.checkpoint_dir / f"gen_{generation:06d}.json"

    def write_checkpoint(self, generation: int, data: dict) -> Path:
        path = self.checkpoint_path(generation)
        path.write_text(json.dumps(data) + "\n")
        return path

    def write_best(self, genome) -> None:
        self.best_path.write_text(json.dumps(genome_to_dict(genome), indent=2) + "\n")


def read_checkpoint(path) -> dict:
    try:
        data = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise DataError(f"cannot read checkpoint {path}: {exc}") from None
    if not isinstance(data, dict) or "evolution" not in data or "config" not in data:
        raise DataError(f"{path} is not a checkpoint file")
    return data
