import json
import xml.etree.ElementTree as ET

import numpy as np
import pytest

from conftest import matrix_from_edges
from evonet.errors import ConfigError, DataError
from evonet.genome import dumps, genome_to_dict, minimal_genelist, random_bitstring_genome
from evonet.harness.artifacts import METRICS_HEADER, read_checkpoint
from evonet.harness.cli import main, run_evolve
from evonet.harness.config import config_to_dict, load_config, parse_config
from evonet.harness.datasets import load_dataset, read_csv, split_indices
from evonet.harness.inspect import summarize, text_report, to_dot
from evonet.harness.plot import plot_metrics, read_metrics, render_svg


class TestDatasets:
    def test_xor(self):
        d = load_dataset("xor", validation_fraction=0.0)
        assert d.inputs.shape == (4, 2) and d.targets.shape == (4, 1)
        assert d.targets.ravel().tolist() == [0, 1, 1, 0]

    def test_parity(self):
        d = load_dataset("parity:3", validation_fraction=0.0)
        assert len(d.inputs) == 8
        for x, y in zip(d.inputs.astype(int), d.targets.ravel()):
            assert y == x[0] ^ x[1] ^ x[2]

    def test_parity_guard(self):
        with pytest.raises(DataError):
            load_dataset("parity:17")
        with pytest.raises(DataError):
            load_dataset("parity:x")

    def test_unknown(self):
        with pytest.raises(DataError):
            load_dataset("mnist")

    def test_bias_column(self):
        d = load_dataset("xor", validation_fraction=0.0, bias_input=True)
        assert d.n_inputs == 3 and np.all(d.inputs[:, 2] == 1)

    def test_csv_non_numeric(self, tmp_path):
        path = tmp_path / "bad.csv"
        path.write_text("1,2,3\n4,x,6\n")
        with pytest.raises(DataError, match=r"line 2, column 2"):
            read_csv(path)

    def test_csv_ragged(self, tmp_path):
        path = tmp_path / "bad.csv"
        path.write_text("1,2,3\n4,5\n")
        with pytest.raises(DataError, match="line 2"):
            read_csv(path)

    def test_csv_header_and_columns(self, tmp_path):
        path = tmp_path / "ok.csv"
        path.write_text("a,b,y1,y2\n1,2,3,4\n5,6,7,8\n")
        X, Y = read_csv(path, n_outputs=2, header=True)
        assert X.tolist() == [[1, 2], [5, 6]] and Y.tolist() == [[3, 4], [7, 8]]

    def test_csv_load(self, tmp_path):
        path = tmp_path / "reg.csv"
        path.write_text("".join(f"{k},{2 * k}\n" for k in range(10)))
        d = load_dataset(str(path), seed=3)
        assert len(d.val_idx) == 2 and len(d.train_idx) == 8

    @pytest.mark.parametrize("n,fraction", [(10, 0.2), (37, 0.3), (5, 0.5)])
    def test_split_disjoint_covering_deterministic(self, n, fraction):
        train, val = split_indices(n, fraction, seed=11)
        assert not set(train) & set(val)
        assert sorted([*train, *val]) == list(range(n))
        again = split_indices(n, fraction, seed=11)
        assert np.array_equal(train, again[0]) and np.array_equal(val, again[1])

    def test_split_depends_on_seed(self):
        assert any(not np.array_equal(split_indices(50, 0.2, 0)[1], split_indices(50, 0.2, s)[1])
                   for s in range(1, 5))


def _experiment(tmp_path, name="run", **evolution):
    ev = {"encoding": "genelist", "population_size": 10, "max_generations": 40,
          "target_error": 0.01, "trainer": {"bp_epochs": 50,
                                            "optimizer": {"kind": "momentum", "lr": 0.5,
                                                          "momentum": 0.9}}}
    ev.update(evolution)
    cfg = {"schema_version": 1, "seed": 5,
           "dataset": {"source": "xor", "validation_fraction": 0.0, "bias_input": True},
           "evolution": ev,
           "output": {"dir": str(tmp_path / name), "checkpoint_every": 5}}
    path = tmp_path / f"{name}.json"
    path.write_text(json.dumps(cfg))
    return path


class TestConfig:
    def test_population_size_diagnostic(self):
        with pytest.raises(ConfigError) as info:
            parse_config({"schema_version": 1, "seed": 0, "evolution": {"population_size": 1}})
        assert "population_size must be ≥ 2" in info.value.problems

    def test_collects_every_problem(self):
        with pytest.raises(ConfigError) as info:
            parse_config({"schema_version": 1, "seed": 0, "colour": "red",
                          "evolution": {"population_size": 1, "max_generations": 0,
                                        "trainer": {"bp_epochs": "many"}}})
        assert len(info.value.problems) >= 4

    def test_schema_version(self):
        with pytest.raises(ConfigError):
            parse_config({"schema_version": 99, "seed": 0})

    def test_seed_mismatch(self):
        with pytest.raises(ConfigError):
            parse_config({"schema_version": 1, "seed": 0, "evolution": {"seed": 1}})

    def test_round_trip(self, tmp_path):
        config = load_config(_experiment(tmp_path))
        assert parse_config(json.loads(json.dumps(config_to_dict(config)))) == config

    def test_shipped_configs_parse(self):
        from pathlib import Path
        for path in sorted(Path(__file__).parent.parent.joinpath("configs").glob("*.json")):
            load_config(path)

    def test_cli_diagnostic(self, tmp_path, capsys):
        path = tmp_path / "bad.json"
        path.write_text(json.dumps({"schema_version": 1, "seed": 0,
                                    "evolution": {"population_size": 1}}))
        assert main(["evolve", "--config", str(path)]) == 1
        assert "population_size must be ≥ 2" in capsys.readouterr().err


class TestEvolveCommand:
    def test_target_exit_and_artifacts(self, tmp_path):
        path = _experiment(tmp_path)
        assert main(["evolve", "--config", str(path)]) == 0
        out = tmp_path / "run"
        lines = (out / "metrics.csv").read_text().splitlines()
        assert lines[0] == METRICS_HEADER
        best = [float(line.split(",")[1]) for line in lines[1:]]
        assert all(b2 <= b1 for b1, b2 in zip(best, best[1:]))
        assert best[-1] < 0.01
        assert json.loads((out / "config.json").read_text())["seed"] == 5
        assert (out / "best_genome.json").exists()
        assert list((out / "checkpoints").glob("gen_*.json"))

    def test_stopped_exit(self, tmp_path):
        path = _experiment(tmp_path, max_generations=3, target_error=None)
        assert main(["evolve", "--config", str(path)]) == 2

    def test_byte_identical_rerun(self, tmp_path):
        a = _experiment(tmp_path, "a", max_generations=8, target_error=None)
        b = _experiment(tmp_path, "b", max_generations=8, target_error=None)
        run_evolve(a)
        run_evolve(b)
        for name in ("metrics.csv", "best_genome.json"):
            assert (tmp_path / "a" / name).read_bytes() == (tmp_path / "b" / name).read_bytes()

    def test_resume_matches_uninterrupted(self, tmp_path):
        full = _experiment(tmp_path, "full", max_generations=12, target_error=None)
        part = _experiment(tmp_path, "part", max_generations=12, target_error=None)
        run_evolve(full)
        checkpoint = tmp_path / "full" / "checkpoints" / "gen_000005.json"
        assert read_checkpoint(checkpoint)["evolution"]["generation"] == 5
        run_evolve(part, resume=checkpoint)
        for name in ("metrics.csv", "best_genome.json"):
            assert (tmp_path / "full" / name).read_bytes() == (tmp_path / "part" / name).read_bytes()

    def test_resume_rejects_other_config(self, tmp_path):
        first = _experiment(tmp_path, "first", max_generations=5, target_error=None)
        other = _experiment(tmp_path, "other", max_generations=5, target_error=None,
                            population_size=12)
        run_evolve(first)
        with pytest.raises(ConfigError):
            run_evolve(other, resume=tmp_path / "first" / "checkpoints" / "gen_000005.json")

    def test_missing_config(self, tmp_path, capsys):
        assert main(["evolve", "--config", str(tmp_path / "nope.json")]) == 1


class TestEvalAndInspect:
    def test_eval(self, tmp_path, capsys):
        path = tmp_path / "g.json"
        path.write_text(dumps(minimal_genelist(3, 1, np.random.default_rng(0))))
        assert main(["eval", "--genome", str(path), "--dataset", "xor", "--bias-input"]) == 0
        assert "sqe error on 4 patterns" in capsys.readouterr().out

    def test_eval_bad_genome(self, tmp_path):
        path = tmp_path / "g.json"
        path.write_text('{"kind": "genelist"}')
        assert main(["inspect", "--genome", str(path)]) == 1

    def test_minimal_dot(self):
        dot = to_dot(summarize(minimal_genelist(2, 1, np.random.default_rng(0))))
        nodes = [line for line in dot.splitlines() if "label" in line and "->" not in line]
        edges = [line for line in dot.splitlines() if "->" in line]
        assert len(nodes) == 3 and len(edges) == 2

    def test_pruned_hidden_inactive(self):
        # hidden neuron 2 exists but is reachable from no input and reaches no output
        g = matrix_from_edges(2, 1, 1, {(0, 3): 0.5, (1, 3): 0.5})
        summary = summarize(g)
        assert summary.inactive == [2]
        assert "inactive hidden neurons: 2" in text_report(summary)
        assert "style=dashed" in to_dot(summary)

    def test_counts_match_serialized_fields(self):
        rng = np.random.default_rng(1)
        g = minimal_genelist(3, 2, rng)
        data = genome_to_dict(g)
        summary = summarize(g)
        assert len(summary.neurons) == len(data["neurons"])
        assert len(summary.edges) == len(data["connections"])
        m = matrix_from_edges(2, 2, 1, {(0, 2): 1.0, (2, 4): 1.0, (1, 4): 0.3}, exists=[1, 0])
        assert len(summarize(m).edges) == len(m.connections())
        b = random_bitstring_genome(rng, 2, 1, 1, 4, -2)
        sb = summarize(b)
        assert sb.extra["fixed_length"] == len(genome_to_dict(b)["memory"])

    def test_inspect_cli(self, tmp_path, capsys):
        path = tmp_path / "g.json"
        path.write_text(dumps(minimal_genelist(2, 1, np.random.default_rng(0))))
        dot = tmp_path / "g.dot"
        assert main(["inspect", "--genome", str(path), "--dot", str(dot)]) == 0
        assert "encoding: genelist" in capsys.readouterr().out
        assert dot.read_text().startswith("digraph")


def _write_metrics(path, rows):
    path.write_text(METRICS_HEADER + "\n" + "".join(
        f"{g},{b},{m},{w},0,0\n" for g, b, m, w in rows))


def _points(svg):
    root = ET.fromstring(svg)
    lines = {p.get("data-series"): [tuple(map(float, xy.split(",")))
                                    for xy in p.get("points").split()]
             for p in root.iter("{http://www.w3.org/2000/svg}polyline")}
    return root, lines


class TestPlot:
    def test_three_polylines(self, tmp_path):
        rng = np.random.default_rng(0)
        rows = [(g, *sorted(rng.random(3))) for g in range(200)]
        csv_path, svg_path = tmp_path / "m.csv", tmp_path / "m.svg"
        _write_metrics(csv_path, rows)
        assert main(["plot-metrics", "--in", str(csv_path), "--out", str(svg_path)]) == 0
        root, lines = _points(svg_path.read_text())
        assert set(lines) == {"best", "mean", "worst"}
        assert all(len(v) == 200 for v in lines.values())

    def test_single_point(self, tmp_path):
        csv_path = tmp_path / "m.csv"
        _write_metrics(csv_path, [(0, 0.5, 0.5, 0.5)])
        _, lines = _points(render_svg(read_metrics(csv_path)))
        assert all(len(v) == 1 and all(np.isfinite(v[0])) for v in lines.values())

    def test_axes_cover_extrema(self, tmp_path):
        rng = np.random.default_rng(1)
        rows = [(g, *sorted(rng.random(3) * 5)) for g in range(3, 40)]
        csv_path = tmp_path / "m.csv"
        _write_metrics(csv_path, rows)
        root, lines = _points(render_svg(read_metrics(csv_path)))
        values = [v for r in rows for v in r[1:]]
        assert float(root.get("data-x-min")) <= 3 and float(root.get("data-x-max")) >= 39
        assert float(root.get("data-y-min")) <= min(values)
        assert float(root.get("data-y-max")) >= max(values)
        width, height = float(root.get("width")), float(root.get("height"))
        for pts in lines.values():
            assert all(0 <= x <= width and 0 <= y <= height for x, y in pts)

    def test_empty(self, tmp_path):
        csv_path = tmp_path / "m.csv"
        csv_path.write_text(METRICS_HEADER + "\n")
        with pytest.raises(DataError):
            plot_metrics(csv_path, tmp_path / "m.svg")
        assert main(["plot-metrics", "--in", str(csv_path), "--out", str(tmp_path / "x.svg")]) == 1

    def test_missing_columns(self, tmp_path):
        csv_path = tmp_path / "m.csv"
        csv_path.write_text("gen,best\n0,1\n")
        with pytest.raises(DataError):
            read_metrics(csv_path)
