from collections import Counter
from types import SimpleNamespace

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from evonet.errors import EmptyPopulationError, PopulationTooSmallError
from evonet.selection import (
    RankedPopulation,
    fittest_half,
    random_pairing,
    rank_probabilities,
    sample_parent,
    sample_ranks,
)


def pop(*errors):
    return [SimpleNamespace(error=e, name=k) for k, e in enumerate(errors)]


class TestRankProbabilities:
    def test_four(self):
        np.testing.assert_allclose(rank_probabilities(4), [0.4, 0.3, 0.2, 0.1], rtol=1e-15)

    def test_one(self):
        assert rank_probabilities(1).tolist() == [1.0]

    def test_empty(self):
        with pytest.raises(EmptyPopulationError):
            rank_probabilities(0)

    @given(st.integers(1, 10_000))
    def test_sum_and_strict_decrease(self, M):
        p = rank_probabilities(M)
        assert abs(p.sum() - 1) < 1e-12
        assert np.all(np.diff(p) < 0)

    @given(st.integers(1, 300))
    def test_matches_oracle(self, M):
        p = rank_probabilities(M)
        for lam in range(M):
            assert p[lam] == pytest.approx(oracles.rank_probability(M, lam), rel=1e-12)

    def test_monte_carlo_frequencies(self):
        rng = np.random.default_rng(11)
        freq = np.bincount(sample_ranks(10, rng, size=1_000_000), minlength=10) / 1e6
        assert np.max(np.abs(freq - rank_probabilities(10))) < 0.01


class TestSampleParent:
    def test_single(self):
        ranked = RankedPopulation.of(pop(0.3))
        rng = np.random.default_rng(0)
        assert all(sample_parent(ranked, rng).name == 0 for _ in range(20))

    def test_two(self):
        ranked = RankedPopulation.of(pop(0.9, 0.1))
        idx = sample_ranks(2, np.random.default_rng(1), size=1_000_000)
        assert ranked[0].name == 1
        assert abs(np.mean(idx == 0) - 2 / 3) < 0.01

    def test_deterministic(self):
        ranked = RankedPopulation.of(pop(*range(8)))
        a = [sample_parent(ranked, np.random.default_rng(5)).name for _ in range(3)]
        b = [sample_parent(ranked, np.random.default_rng(5)).name for _ in range(3)]
        assert a == b

    def test_stable_ties(self):
        ranked = RankedPopulation.of(pop(0.5, 0.1, 0.5, 0.1))
        assert [i.name for i in ranked.individuals] == [1, 3, 0, 2]

    @given(st.lists(st.floats(0, 100), min_size=1, max_size=20), st.floats(-50, 50))
    def test_shift_invariance(self, errors, shift):
        a = RankedPopulation.of(pop(*errors))
        b = RankedPopulation.of(pop(*[e + shift for e in errors]))
        # ranks may only differ where rounding merges near-equal errors
        if len(set(errors)) == len({e + shift for e in errors}):
            assert [i.name for i in a.individuals] == [i.name for i in b.individuals]

    def test_empty(self):
        with pytest.raises(EmptyPopulationError):
            RankedPopulation.of([])


class TestFittestHalf:
    def test_even(self):
        assert [i.name for i in fittest_half(pop(0.1, 0.2, 0.3, 0.4))] == [0, 1]

    def test_odd_ceiling(self):
        assert len(fittest_half(pop(5, 4, 3, 2, 1))) == 3

    def test_order_preserved(self):
        assert [i.name for i in fittest_half(pop(0.4, 0.1, 0.3, 0.2))] == [1, 3]

    def test_ties(self):
        assert [i.name for i in fittest_half(pop(1, 1, 1, 1))] == [0, 1]

    def test_too_small(self):
        with pytest.raises(PopulationTooSmallError):
            fittest_half(pop(1))


class TestRandomPairing:
    def test_two(self):
        pairs = random_pairing(pop(1, 2), np.random.default_rng(0))
        assert len(pairs) == 1 and {p.name for p in pairs[0]} == {0, 1}

    def test_four_uniform_matchings(self):
        rng = np.random.default_rng(3)
        members = pop(1, 2, 3, 4)
        counts = Counter()
        for _ in range(100_000):
            matching = frozenset(frozenset(p.name for p in pair)
                                 for pair in random_pairing(members, rng))
            counts[matching] += 1
        assert len(counts) == 3
        for c in counts.values():
            assert abs(c / 100_000 - 1 / 3) < 0.02

    def test_odd_duplicates_one(self):
        pairs = random_pairing(pop(1, 2, 3), np.random.default_rng(4))
        names = [p.name for pair in pairs for p in pair]
        assert len(pairs) == 2 and sorted(Counter(names).values()) == [1, 1, 2]

    @given(st.integers(1, 40), st.integers(0, 2**31))
    def test_everyone_paired(self, M, seed):
        pairs = random_pairing(pop(*range(M)), np.random.default_rng(seed))
        names = [p.name for pair in pairs for p in pair]
        assert set(names) == set(range(M))
        assert len(names) == M + (M % 2)
