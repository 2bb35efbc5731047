"""Generation loops for the three encodings.

* ``matrix``: hybrid pipeline. Successful parents get more BP; failed ones
  are annealed, and if that does not help, structurally mutated in the
  order neuron deletion, connection deletion, connection addition, neuron
  addition, each candidate followed by partial BP.
* ``genelist``: innovation-aligned crossover, temperature-scaled weight
  noise, connection addition and connection splitting, then partial BP.
* ``bitstring``: n-point crossover on fixed-length memories and three-rate
  bit mutation; weights are codebook integers, no gradient training.

Every random draw comes from a stream derived from ``(seed, generation,
purpose, index)``, so a run is a pure function of its config and can resume
from any checkpointed generation.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import asdict, dataclass, field, replace

import numpy as np

from evonet import selection as sel
from evonet.dlopt import Optimizer
from evonet.errors import ConfigError, ExhaustedSlotsError, ParameterError
from evonet.fitness import FitnessSpec, fitness_of
from evonet.genome import (
    BitStringGenome,
    InitRanges,
    MatrixGenome,
    genome_from_dict,
    genome_to_dict,
    genome_violations,
    minimal_genelist,
    random_bitstring_genome,
    random_matrix_genome,
)
from evonet.phenotype import (
    SaSchedule,
    build_network,
    genome_with_weights,
    network_error,
    partial_train_bp,
    train_sa,
)
from evonet.variation import (
    BitMutationRates,
    InnovationRegistry,
    TemperatureParams,
    add_connections,
    cell_division,
    crossover_bitstrings,
    crossover_genelists,
    delete_connections,
    delete_neurons,
    instantaneous_temperature,
    mutate_bitstring,
    neat_add_connection,
    neat_split_connection,
    perturb_weights,
    structural_mutation_count,
    temperature,
)

ENCODINGS = ("bitstring", "matrix", "genelist")
DEFAULT_SELECTION = {"matrix": "rank", "genelist": "rank", "bitstring": "random-pair"}
STRUCTURAL_ORDER = ("delete_neurons", "delete_connections", "add_connections", "add_neurons")

# named random streams
_INIT, _SELECT, _OFFSPRING = 0, 1, 2


def stream(seed: int, *key: int) -> np.random.Generator:
    return np.random.default_rng(np.random.SeedSequence(seed, spawn_key=tuple(key)))


# -------------------------------------------------------------------- config


@dataclass(frozen=True)
class OperatorParams:
    alpha: float = 1.0
    cell_division_alpha: float | None = 0.5
    delete_neurons: tuple[int, int] = (1, 2)
    delete_connections: tuple[int, int] = (1, 3)
    add_connections: tuple[int, int] = (1, 3)
    add_neurons: tuple[int, int] = (1, 2)
    neat_add_connection: tuple[int, int] = (0, 4)
    neat_split_connection: tuple[int, int] = (0, 4)
    eta: float = 0.1
    add_init_interval: tuple[float, float] = (-0.1, 0.1)
    genelist_weight_interval: tuple[float, float] = (-1.0, 1.0)
    bit_rates: BitMutationRates = field(default_factory=BitMutationRates)
    crossover_points: int = 2
    crossover_rate: float = 0.75

    def temperature_params(self, kind: str) -> TemperatureParams:
        lo, hi = getattr(self, kind)
        return TemperatureParams(alpha=self.alpha, delta_min=lo, delta_max=hi, f_max=1.0)


@dataclass(frozen=True)
class TrainerSettings:
    bp_epochs: int = 100
    optimizer: Optimizer = field(default_factory=Optimizer)
    loss: str = "sqe"
    hidden_dropout: float = 0.0
    activation: str = "sigmoid"
    sa: SaSchedule = field(default_factory=SaSchedule)


@dataclass(frozen=True)
class EvolutionConfig:
    encoding: str = "genelist"
    population_size: int = 20
    max_generations: int = 100
    offspring_per_generation: int | None = None
    selection: str | None = None
    fitness: FitnessSpec = field(default_factory=FitnessSpec)
    operators: OperatorParams = field(default_factory=OperatorParams)
    trainer: TrainerSettings = field(default_factory=TrainerSettings)
    init: InitRanges = field(default_factory=InitRanges)
    n_hidden_max: int = 8
    g_max: int = 4
    w_lo: int = -2
    granularity: tuple[int, int] = (2, 4)
    target_error: float | None = 0.01
    stagnation_window: int = 50
    stagnation_tol: float = 1e-6
    seed: int = 0

    @property
    def selection_strategy(self) -> str:
        return self.selection or DEFAULT_SELECTION[self.encoding]

    @property
    def n_offspring(self) -> int:
        if self.offspring_per_generation is not None:
            return self.offspring_per_generation
        return max(1, self.population_size // 2)

    def problems(self) -> list[str]:
        p = []
        if self.encoding not in ENCODINGS:
            p.append(f"encoding must be one of {', '.join(ENCODINGS)}")
        if self.population_size < 2:
            p.append("population_size must be ≥ 2")
        if self.max_generations < 1:
            p.append("max_generations must be ≥ 1")
        if self.offspring_per_generation is not None and self.offspring_per_generation < 1:
            p.append("offspring_per_generation must be ≥ 1")
        if self.selection is not None and self.selection not in sel.STRATEGIES:
            p.append(f"selection must be one of {', '.join(sel.STRATEGIES)}")
        if self.stagnation_window < 1:
            p.append("stagnation_window must be ≥ 1")
        if self.n_hidden_max < 0:
            p.append("n_hidden_max must be ≥ 0")
        if self.trainer.bp_epochs < 0:
            p.append("trainer.bp_epochs must be ≥ 0")
        if self.trainer.loss not in ("sqe", "abs", "exp"):
            p.append("trainer.loss must be one of sqe, abs, exp")
        if not 0 <= self.trainer.hidden_dropout < 1:
            p.append("trainer.hidden_dropout must lie in [0, 1)")
        if not 0 <= self.operators.crossover_rate <= 1:
            p.append("operators.crossover_rate must lie in [0, 1]")
        if self.operators.crossover_points < 1:
            p.append("operators.crossover_points must be ≥ 1")
        if self.operators.eta < 0:
            p.append("operators.eta must be ≥ 0")
        for kind in STRUCTURAL_ORDER + ("neat_add_connection", "neat_split_connection"):
            lo, hi = getattr(self.operators, kind)
            if not 0 <= lo <= hi:
                p.append(f"operators.{kind} must be an interval [lo, hi] with 0 ≤ lo ≤ hi")
        if self.init.hidden[1] > self.n_hidden_max and self.encoding == "matrix":
            p.append("init.hidden upper bound must be ≤ n_hidden_max")
        if not 1 < self.granularity[0] <= self.granularity[1] <= self.g_max:
            p.append("granularity must satisfy 1 < lo ≤ hi ≤ g_max")
        return p

    def validate(self) -> "EvolutionConfig":
        problems = self.problems()
        if problems:
            raise ConfigError(problems)
        return self


# -------------------------------------------------------------- individuals


@dataclass
class Individual:
    genome: object
    error: float = math.inf
    success: bool | None = None
    lineage: tuple = ()
    id: int = 0


@dataclass
class GenerationReport:
    generation: int
    best: float
    mean: float
    worst: float
    hidden_mean: float
    conn_mean: float
    operator_counts: dict = field(default_factory=dict)


def structure_stats(genome) -> tuple[int, int]:
    """(hidden neurons, enabled connections) of a genome."""
    if isinstance(genome, BitStringGenome):
        net = build_network(genome)
        return len(net.hidden_positions), len(net.weights)
    return genome.hidden_count, genome.connection_count


def report(generation: int, population, counts=None) -> GenerationReport:
    errors = np.array([ind.error for ind in population])
    stats = np.array([structure_stats(ind.genome) for ind in population], dtype=float)
    return GenerationReport(generation, float(errors.min()), float(errors.mean()),
                            float(errors.max()), float(stats[:, 0].mean()),
                            float(stats[:, 1].mean()), dict(sorted((counts or {}).items())))


def replace_worst(population: list, offspring, policy: str = "worst") -> list:
    """Each offspring, in order, replaces the current worst member if it is
    strictly better; population size is unchanged."""
    if policy != "worst":
        raise ParameterError(f"unknown replacement policy {policy!r}")
    if not offspring:
        raise ParameterError("replacement needs at least one offspring")
    pop = list(population)
    for child in offspring:
        worst = max(range(len(pop)), key=lambda i: (pop[i].error, i))
        if child.error < pop[worst].error:
            pop[worst] = child
    return pop


# ------------------------------------------------------------------ helpers


def _spec(config: EvolutionConfig, dataset) -> FitnessSpec:
    return replace(config.fitness, n=dataset.n_outputs, T=len(dataset.val_idx))


def _net(config, genome):
    t = config.trainer
    return build_network(genome, t.activation, hidden_dropout=t.hidden_dropout)


def evaluate_genome(config, dataset, genome) -> float:
    return network_error(_net(config, genome), dataset.val_inputs, dataset.val_targets,
                         _spec(config, dataset))


def _bp(config, dataset, genome, rng):
    """Partial BP; returns (trained genome, error before, error after)."""
    t = config.trainer
    if t.bp_epochs == 0:
        e = evaluate_genome(config, dataset, genome)
        return genome, e, e
    net, before, after = partial_train_bp(_net(config, genome), dataset, t.bp_epochs,
                                          t.optimizer, _spec(config, dataset), t.loss, rng)
    return genome_with_weights(genome, net), before, after


def _parent_pairs(population, strategy, n, rng):
    if strategy == "rank":
        ranked = sel.RankedPopulation.of(population)
        idx = sel.sample_ranks(len(ranked), rng, size=2 * n)
        return [(ranked[int(idx[2 * k])], ranked[int(idx[2 * k + 1])]) for k in range(n)]
    pool = sel.fittest_half(population) if strategy == "fittest-half" else population
    pairs = []
    while len(pairs) < n:
        pairs.extend(sel.random_pairing(pool, rng))
    return pairs[:n]


def _temperature_of(error: float) -> float:
    return temperature(fitness_of(error), 1.0)


# --------------------------------------------------------------- hybrid step


def epnet_step(individual: Individual, config: EvolutionConfig, dataset,
               rng: np.random.Generator, trace: list | None = None,
               counts: Counter | None = None) -> Individual:
    """One offspring from a matrix-encoded parent.

    ``trace`` receives the ordered list of structural kinds attempted (an
    empty list when no structural phase ran).
    """
    counts = counts if counts is not None else Counter()
    ops = config.operators
    genome = individual.genome

    def child(g, error, success):
        return Individual(g, error, success, (individual.id,))

    if individual.success:
        counts["bp"] += 1
        g, before, after = _bp(config, dataset, genome, rng)
        return child(g, after, after < before)

    counts["sa"] += 1
    net, _, _ = train_sa(_net(config, genome), dataset, config.trainer.sa, rng,
                         _spec(config, dataset))
    annealed = genome_with_weights(genome, net)
    base_error = evaluate_genome(config, dataset, annealed)
    if base_error < individual.error:
        return child(annealed, base_error, True)

    T = _temperature_of(base_error)
    attempted = []
    last = None
    for kind in STRUCTURAL_ORDER:
        t_inst = instantaneous_temperature(T, rng)
        count = structural_mutation_count(ops.temperature_params(kind), t_inst, rng)
        candidate = _structural(kind, annealed, count, config, dataset, rng)
        if candidate is None:
            continue
        attempted.append(kind)
        counts[kind] += 1
        trained, _, err = _bp(config, dataset, candidate, rng)
        last = (trained, err)
        if err < base_error:
            break
    if trace is not None:
        trace.append(attempted)
    if last is None:
        return child(annealed, base_error, False)
    g, err = last
    return child(g, err, err < base_error)


def _structural(kind, genome: MatrixGenome, count, config, dataset, rng):
    """Apply one structural mutation kind, or None when it cannot apply."""
    ops = config.operators
    act = config.trainer.activation
    if count <= 0:
        return None
    if kind == "delete_neurons":
        return delete_neurons(genome, count, rng) if genome.hidden_count else None
    if kind == "delete_connections":
        return delete_connections(genome, count, dataset, ops.eta, act) if genome.connection_count else None
    if kind == "add_connections":
        try:
            return add_connections(genome, count, dataset, ops.eta, ops.add_init_interval, rng, act)
        except ExhaustedSlotsError:
            return None
    # add_neurons: repeated cell division of uniformly chosen hidden neurons
    out = genome
    for _ in range(count):
        hidden = out.hidden_indices
        if not hidden or out.hidden_count >= out.n_hidden_max:
            break
        alpha = ops.cell_division_alpha
        if alpha is None:
            alpha = float(rng.random())
        out = cell_division(out, hidden[int(rng.integers(len(hidden)))], alpha)
    return out if out is not genome else None


# ---------------------------------------------------------------- evolution


class Evolution:
    """Stateful, checkpointable generation loop."""

    def __init__(self, config: EvolutionConfig, dataset):
        self.config = config.validate()
        self.dataset = dataset
        self.population: list[Individual] = []
        self.registry: InnovationRegistry | None = None
        self.generation = -1
        self.next_id = 0
        self.history: list[GenerationReport] = []
        self.best_seen = math.inf
        self.last_improvement = 0
        self.trace: list[tuple[int, int, list]] = []

    # ---------------------------------------------------------------- state

    def _new_id(self) -> int:
        self.next_id += 1
        return self.next_id - 1

    def _record(self, counts):
        rep = report(self.generation, self.population, counts)
        self.history.append(rep)
        if rep.best < self.best_seen - self.config.stagnation_tol:
            self.last_improvement = self.generation
        self.best_seen = min(self.best_seen, rep.best)
        return rep

    @property
    def best(self) -> Individual:
        return min(self.population, key=lambda ind: ind.error)

    def status(self) -> str | None:
        """``"target"``, ``"stagnation"``, ``"max_generations"`` or None."""
        c = self.config
        if self.generation < 0:
            return None
        if c.target_error is not None and self.best.error < c.target_error:
            return "target"
        if self.generation - self.last_improvement >= c.stagnation_window:
            return "stagnation"
        if self.generation >= c.max_generations:
            return "max_generations"
        return None

    # ----------------------------------------------------------- generation

    def initialize(self) -> GenerationReport:
        c, d = self.config, self.dataset
        m, n = d.n_inputs, d.n_outputs
        counts = Counter()
        self.population = []
        if c.encoding == "genelist":
            self.registry = InnovationRegistry.for_minimal(m, n)
        for k in range(c.population_size):
            rng = stream(c.seed, 0, _INIT, k)
            ind = Individual(None, id=self._new_id())
            if c.encoding == "genelist":
                ind.genome = minimal_genelist(m, n, rng, c.operators.genelist_weight_interval)
                ind.error = evaluate_genome(c, d, ind.genome)
            elif c.encoding == "matrix":
                g = random_matrix_genome(c.init, rng, m, c.n_hidden_max, n)
                g, before, after = _bp(c, d, g, rng)
                counts["bp"] += 1
                ind.genome, ind.error, ind.success = g, after, after < before
            else:
                ind.genome = random_bitstring_genome(rng, m, c.n_hidden_max, n, c.g_max,
                                                     c.w_lo, c.granularity)
                ind.error = evaluate_genome(c, d, ind.genome)
            self.population.append(ind)
        self.generation = 0
        self.history = []
        self.best_seen = math.inf
        self.last_improvement = 0
        return self._record(counts)

    def step(self) -> GenerationReport:
        c = self.config
        gen = self.generation + 1
        counts = Counter()
        pairs = _parent_pairs(self.population, c.selection_strategy, c.n_offspring,
                              stream(c.seed, gen, _SELECT))
        offspring = []
        for k, (p1, p2) in enumerate(pairs):
            rng = stream(c.seed, gen, _OFFSPRING, k)
            if c.encoding == "matrix":
                attempts = []
                child = epnet_step(p1, c, self.dataset, rng, attempts, counts)
                if attempts:
                    self.trace.append((gen, k, attempts[0]))
                offspring.append(child)
            elif c.encoding == "genelist":
                offspring.append(self._genelist_child(p1, p2, rng, counts))
            else:
                offspring.extend(self._bitstring_children(p1, p2, rng, counts))
        for child in offspring:
            child.id = self._new_id()
        self.population = replace_worst(self.population, offspring)
        self.generation = gen
        return self._record(counts)

    def _genelist_child(self, p1, p2, rng, counts) -> Individual:
        c, ops = self.config, self.config.operators
        fitter, other = (p1, p2) if p1.error <= p2.error else (p2, p1)
        if fitter is not other and rng.random() < ops.crossover_rate:
            genome = crossover_genelists(fitter.genome, other.genome, True, rng)
            counts["crossover"] += 1
            lineage = (fitter.id, other.id)
        else:
            genome = fitter.genome
            lineage = (fitter.id,)
        T = _temperature_of(fitter.error)
        genome = perturb_weights(genome, ops.temperature_params("neat_add_connection"),
                                 instantaneous_temperature(T, rng), rng)
        n_add = structural_mutation_count(ops.temperature_params("neat_add_connection"),
                                          instantaneous_temperature(T, rng), rng)
        for _ in range(n_add):
            try:
                genome = neat_add_connection(genome, self.registry, rng,
                                             ops.genelist_weight_interval)
                counts["add_connection"] += 1
            except ExhaustedSlotsError:
                break
        n_split = structural_mutation_count(ops.temperature_params("neat_split_connection"),
                                            instantaneous_temperature(T, rng), rng)
        for _ in range(n_split):
            enabled = [g for g in genome.connections if g.enabled]
            if not enabled:
                break
            genome = neat_split_connection(genome, self.registry,
                                           enabled[int(rng.integers(len(enabled)))])
            counts["split_connection"] += 1
        genome, _, error = _bp(c, self.dataset, genome, rng)
        if c.trainer.bp_epochs:
            counts["bp"] += 1
        return Individual(genome, error, None, lineage)

    def _bitstring_children(self, p1, p2, rng, counts) -> list[Individual]:
        c, ops = self.config, self.config.operators
        a, b = p1.genome, p2.genome
        if rng.random() < ops.crossover_rate:
            L = len(a.memory)
            a, b = crossover_bitstrings(a, b, min(ops.crossover_points, L - 1), rng)
            counts["crossover"] += 1
        children = []
        for g in (a, b):
            g = mutate_bitstring(g, ops.bit_rates, rng)
            counts["bit_mutation"] += 1
            children.append(Individual(g, evaluate_genome(c, self.dataset, g), None,
                                       (p1.id, p2.id)))
        return children

    def run(self, callback=None) -> str:
        """Run to a stop condition; ``callback(self, report)`` sees every
        generation including the initial one. Returns the stop status."""
        if self.generation < 0:
            rep = self.initialize()
            if callback:
                callback(self, rep)
        while (status := self.status()) is None:
            rep = self.step()
            if callback:
                callback(self, rep)
        return status

    # ---------------------------------------------------------- checkpoints

    def to_checkpoint(self) -> dict:
        return {
            "generation": self.generation,
            "next_id": self.next_id,
            "best_seen": self.best_seen,
            "last_improvement": self.last_improvement,
            "registry": self.registry.to_dict() if self.registry else None,
            "population": [
                {"id": ind.id, "error": ind.error, "success": ind.success,
                 "lineage": list(ind.lineage), "genome": genome_to_dict(ind.genome)}
                for ind in self.population
            ],
            "history": [asdict(r) for r in self.history],
        }

    @classmethod
    def from_checkpoint(cls, config: EvolutionConfig, dataset, data: dict) -> "Evolution":
        evo = cls(config, dataset)
        evo.generation = data["generation"]
        evo.next_id = data["next_id"]
        evo.best_seen = data["best_seen"]
        evo.last_improvement = data["last_improvement"]
        if data["registry"] is not None:
            evo.registry = InnovationRegistry.from_dict(data["registry"])
        evo.population = [
            Individual(genome_from_dict(p["genome"]), p["error"], p["success"],
                       tuple(p["lineage"]), p["id"])
            for p in data["population"]
        ]
        evo.history = [GenerationReport(**r) for r in data["history"]]
        return evo

    def violations(self) -> list[str]:
        return [f"individual {ind.id}: {v}" for ind in self.population
                for v in genome_violations(ind.genome)]


def init_population(config: EvolutionConfig, dataset) -> list[Individual]:
    evo = Evolution(config, dataset)
    evo.initialize()
    return evo.population


def evolve(config: EvolutionConfig, dataset, callback=None):
    """Run to completion; returns ``(best individual, reports)``."""
    evo = Evolution(config, dataset)
    evo.run(callback)
    return evo.best, evo.history
