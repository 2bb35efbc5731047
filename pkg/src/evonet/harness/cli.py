"""Command-line entry point: evolve, eval, inspect, plot-metrics.

Exit codes: 0 target reached (or command succeeded), 2 stopped by
stagnation or the generation limit, 1 on any error. ``EVONET_LOG_LEVEL``
sets log verbosity (default WARNING).
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from pathlib import Path

from evonet.engine import Evolution
from evonet.errors import ConfigError, DataError, EvonetError
from evonet.fitness import FitnessSpec
from evonet.genome import loads
from evonet.harness.artifacts import RunArtifacts, read_checkpoint
from evonet.harness.config import ExperimentConfig, config_to_dict, load_config
from evonet.harness.datasets import load_dataset
from evonet.harness.inspect import summarize, text_report, to_dot
from evonet.harness.plot import plot_metrics
from evonet.phenotype import build_network, network_error

log = logging.getLogger("evonet")

EXIT_TARGET, EXIT_ERROR, EXIT_STOPPED = 0, 1, 2


def dataset_for(config: ExperimentConfig):
    ds = config.dataset
    return load_dataset(ds.source, seed=config.seed, validation_fraction=ds.validation_fraction,
                        n_inputs=ds.n_inputs, n_outputs=ds.n_outputs, header=ds.header,
                        bias_input=ds.bias_input, whiten_inputs=ds.whiten_inputs)


def _replay_key(snapshot: dict) -> dict:
    return {k: v for k, v in snapshot.items() if k != "output"}


def run_evolve(config_path, resume=None) -> int:
    """Run (or resume) the experiment described by ``config_path``."""
    config = load_config(config_path)
    snapshot = config_to_dict(config)
    dataset = dataset_for(config)
    artifacts = RunArtifacts(config.output.dir)
    if resume is not None:
        data = read_checkpoint(resume)
        if _replay_key(data["config"]) != _replay_key(json.loads(json.dumps(snapshot))):
            raise ConfigError(["--resume checkpoint was written by a different configuration"])
        evo = Evolution.from_checkpoint(config.evolution, dataset, data["evolution"])
        log.info("resuming at generation %d", evo.generation)
    else:
        evo = Evolution(config.evolution, dataset)
    artifacts.prepare(snapshot)
    artifacts.write_metrics(evo.history)
    every = config.output.checkpoint_every

    def on_generation(e: Evolution, report):
        artifacts.append_metrics(report)
        log.info("gen %d best %.6g mean %.6g", report.generation, report.best, report.mean)
        if every and report.generation % every == 0:
            artifacts.write_checkpoint(report.generation,
                                       {"config": snapshot, "evolution": e.to_checkpoint()})

    status = evo.run(on_generation)
    artifacts.write_checkpoint(evo.generation, {"config": snapshot, "evolution": evo.to_checkpoint()})
    artifacts.write_best(evo.best.genome)
    print(f"{status}: generation {evo.generation}, best error {evo.best.error:.6g}")
    return EXIT_TARGET if status == "target" else EXIT_STOPPED


def _read_genome(path):
    try:
        return loads(Path(path).read_text())
    except OSError as exc:
        raise DataError(f"cannot read genome {path}: {exc}") from None
    except (json.JSONDecodeError, KeyError, TypeError) as exc:
        raise DataError(f"{path}: invalid genome JSON ({exc})") from None


def cmd_evolve(args) -> int:
    return run_evolve(args.config, args.resume)


def cmd_eval(args) -> int:
    genome = _read_genome(args.genome)
    dataset = load_dataset(args.dataset, seed=args.seed, validation_fraction=args.validation_fraction,
                           n_outputs=args.n_outputs, bias_input=args.bias_input)
    net = build_network(genome, args.activation)
    spec = FitnessSpec(measure=args.measure)
    err = network_error(net, dataset.val_inputs, dataset.val_targets, spec)
    print(f"{args.measure} error on {len(dataset.val_idx)} patterns: {err:.6g}")
    return 0


def cmd_inspect(args) -> int:
    summary = summarize(_read_genome(args.genome))
    print(text_report(summary))
    dot = to_dot(summary)
    if args.dot:
        Path(args.dot).write_text(dot + "\n")
    else:
        print()
        print(dot)
    return 0


def cmd_plot(args) -> int:
    plot_metrics(args.inp, args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="evonet", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("evolve", help="run an experiment from a JSON config")
    p.add_argument("--config", required=True)
    p.add_argument("--resume", help="checkpoint JSON to continue from")
    p.set_defaults(func=cmd_evolve)

    p = sub.add_parser("eval", help="error of a saved genome on a dataset")
    p.add_argument("--genome", required=True)
    p.add_argument("--dataset", required=True, help='"xor", "parity:N" or a CSV path')
    p.add_argument("--bias-input", action="store_true", help="append a constant-1 input")
    p.add_argument("--activation", default="sigmoid", choices=["sigmoid", "tanh", "identity"])
    p.add_argument("--measure", default="sqe", choices=["sqe", "abs", "exp", "prechelt"])
    p.add_argument("--n-outputs", type=int, default=1)
    p.add_argument("--validation-fraction", type=float, default=0.0)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("inspect", help="describe a saved genome and emit DOT")
    p.add_argument("--genome", required=True)
    p.add_argument("--dot", help="write the DOT graph here instead of stdout")
    p.set_defaults(func=cmd_inspect)

    p = sub.add_parser("plot-metrics", help="SVG chart of a metrics CSV")
    p.add_argument("--in", dest="inp", required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_plot)
    return parser


def main(argv=None) -> int:
    logging.basicConfig(level=os.environ.get("EVONET_LOG_LEVEL", "WARNING").upper(),
                        format="%(levelname)s %(name)s: %(message)s")
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ConfigError as exc:
        print("invalid configuration:", file=sys.stderr)
        for problem in exc.problems:
            print(f"  - {problem}", file=sys.stderr)
        return EXIT_ERROR
    except (EvonetError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
