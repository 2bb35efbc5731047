"""Reproduction operators: temperature-scaled mutation, structural mutation
of matrix genomes, bit-string GA operators and gene-list operators."""

from evonet.variation.bits import (
    BitMutationRates,
    crossover_bitstrings,
    mutate_bitstring,
    npoint_crossover,
)
from evonet.variation.neat import (
    AlignedRow,
    InnovationRegistry,
    align_by_innovation,
    crossover_genelists,
    legal_new_pairs,
    neat_add_connection,
    neat_split_connection,
)
from evonet.variation.structural import (
    CONNECTION_TEST_SENTINEL,
    add_connections,
    cell_division,
    connection_test,
    connection_tests,
    delete_connections,
    delete_neurons,
    split_neuron,
)
from evonet.variation.temperature import (
    TemperatureParams,
    instantaneous_temperature,
    perturb_weights,
    structural_mutation_count,
    temperature,
)

__all__ = [
    "AlignedRow", "BitMutationRates", "CONNECTION_TEST_SENTINEL", "InnovationRegistry",
    "TemperatureParams", "add_connections", "align_by_innovation", "cell_division",
    "connection_test", "connection_tests", "crossover_bitstrings", "crossover_genelists",
    "delete_connections", "delete_neurons", "instantaneous_temperature", "legal_new_pairs",
    "mutate_bitstring", "neat_add_connection", "neat_split_connection", "npoint_crossover",
    "perturb_weights", "split_neuron", "structural_mutation_count", "temperature",
]
