import math
from types import SimpleNamespace

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from evonet.errors import DimensionError, NumericError, ParameterError
from evonet.fitness import (
    FitnessSpec,
    error_abs,
    error_exp,
    error_prechelt,
    error_sqe,
    evaluate,
    fitness_of,
    mark,
)

vectors = st.integers(1, 30).flatmap(
    lambda k: st.tuples(
        st.lists(st.floats(-5, 5), min_size=k, max_size=k),
        st.lists(st.floats(-5, 5), min_size=k, max_size=k),
    )
)


class TestExamples:
    def test_sqe(self):
        assert error_sqe([1, 0], [1, 0]) == 0
        assert error_sqe([1, 0], [0.5, 0.5]) == 0.5

    def test_abs(self):
        assert error_abs([1, 0], [0.5, 0.5]) == 1.0
        assert error_abs([0.3, 0.2], [0.3, 0.2]) == 0

    def test_exp(self):
        assert error_exp([1, 2, 3], [1, 2, 3]) == 3.0
        assert error_exp([1], [0]) == pytest.approx(math.e, rel=1e-15)

    def test_percentage(self):
        spec = FitnessSpec("prechelt", 1.0, 0.0, 1, 4)
        assert error_prechelt(spec, 0.04) == pytest.approx(1.0, rel=1e-15)
        assert error_prechelt(spec, 0.0) == 0
        doubled = FitnessSpec("prechelt", 1.0, 0.0, 1, 8)
        assert error_prechelt(doubled, 0.04) == pytest.approx(0.5, rel=1e-15)

    def test_range_multiplies(self):
        wide = FitnessSpec("prechelt", 3.0, 1.0, 1, 1)
        assert error_prechelt(wide, 1.0) == 200.0

    def test_length_mismatch(self):
        for f in (error_sqe, error_abs, error_exp):
            with pytest.raises(DimensionError):
                f([1, 2], [1])

    def test_empty(self):
        with pytest.raises(DimensionError):
            error_sqe([], [])

    def test_matrix_shapes(self):
        t = np.array([[1.0, 0.0], [0.0, 1.0]])
        assert error_sqe(t, np.zeros((2, 2))) == 2.0


class TestSpec:
    def test_degenerate_range(self):
        with pytest.raises(ParameterError):
            FitnessSpec("prechelt", 0.0, 0.0)

    def test_counts(self):
        with pytest.raises(ParameterError):
            FitnessSpec("sqe", n=0)
        with pytest.raises(ParameterError):
            FitnessSpec("sqe", T=0)

    def test_unknown_measure(self):
        with pytest.raises(ParameterError):
            FitnessSpec("huber")

    def test_evaluate_dispatch(self):
        t, a = [1.0, 0.0], [0.5, 0.5]
        assert evaluate(FitnessSpec("sqe"), t, a) == 0.5
        assert evaluate(FitnessSpec("abs"), t, a) == 1.0
        assert evaluate(FitnessSpec("prechelt", T=2), t, a) == 25.0


@settings(max_examples=200)
@given(vectors)
def test_measures_match_loop_oracles(pair):
    t, a = pair
    assert error_sqe(t, a) == pytest.approx(oracles.sqe(t, a), rel=1e-12, abs=1e-300)
    assert error_abs(t, a) == pytest.approx(oracles.abs_error(t, a), rel=1e-12, abs=1e-300)
    assert error_exp(t, a) == pytest.approx(oracles.exp_error(t, a), rel=1e-12)


@settings(max_examples=200)
@given(vectors, st.randoms(use_true_random=False))
def test_nonnegative_symmetric_permutation_invariant(pair, rnd):
    t, a = pair
    order = list(range(len(t)))
    rnd.shuffle(order)
    tp, ap = [t[k] for k in order], [a[k] for k in order]
    for f in (error_sqe, error_abs, error_exp):
        v = f(t, a)
        assert v >= 0
        assert f(a, t) == pytest.approx(v, rel=1e-12, abs=1e-300)
        assert f(tp, ap) == pytest.approx(v, rel=1e-12, abs=1e-300)
    assert error_exp(t, a) >= len(t)


@settings(max_examples=200)
@given(vectors)
def test_abs_bounded_by_cauchy_schwarz(pair):
    t, a = pair
    assert error_abs(t, a) <= math.sqrt(len(t) * error_sqe(t, a)) * (1 + 1e-12) + 1e-12


@given(st.floats(0, 1e6), st.floats(0, 1e6))
def test_percentage_monotone(e1, e2):
    spec = FitnessSpec("prechelt", 1.0, -1.0, 2, 10)
    lo, hi = sorted((e1, e2))
    assert error_prechelt(spec, lo) <= error_prechelt(spec, hi)


class TestMark:
    def test_reduction_is_success(self):
        ind = SimpleNamespace(success=None)
        assert mark(ind, 0.5, 0.3) is True and ind.success is True

    def test_tie_is_failure(self):
        ind = SimpleNamespace(success=None)
        assert mark(ind, 0.5, 0.5) is False and ind.success is False

    def test_increase_is_failure(self):
        assert mark(SimpleNamespace(), 0.3, 0.5) is False

    def test_nan(self):
        with pytest.raises(NumericError):
            mark(SimpleNamespace(), float("nan"), 0.1)


def test_fitness_of_maps_zero_error_to_one():
    assert fitness_of(0.0) == 1.0
    assert 0 < fitness_of(1e9) < 1e-8
