"""Noiseless streaming algorithms and the algorithm registry."""

import itertools

import pytest


def test_parity_linear_and_state_machine_agree():
    """The linear parity and the one-bit automaton compute the same output."""
    from streaming.algorithms import Parity, linear_parity, run_noiseless

    for x in itertools.product((0, 1), repeat=5):
        assert run_noiseless(linear_parity(5), x) == run_noiseless(Parity(), x) == sum(x) % 2


def test_dot_product_and_its_lift():
    """<x, y> mod 2 directly and through the (position, sum) state machine."""
    from streaming.algorithms import dot_product, lift_linear, run_noiseless

    y = [1, 0, 1, 1]
    linear = dot_product(y)
    lifted = lift_linear(linear)
    for x in itertools.product((0, 1), repeat=4):
        expected = sum(a * b for a, b in zip(x, y)) % 2
        assert run_noiseless(linear, x) == expected
        assert run_noiseless(lifted, x) == expected


def test_weighted_sum_modulus():
    """Weights are reduced mod the output field size."""
    from streaming.algorithms import run_noiseless, weighted_sum

    linear = weighted_sum([3, 4, 5], 7)
    assert run_noiseless(linear, [1, 1, 1]) == 12 % 7
    assert run_noiseless(linear, [0, 1, 0]) == 4


def test_partial_sum_splits_additively():
    """A_{0,n} = A_{0,i} + A_{i,n}."""
    from streaming.algorithms import partial_sum, weighted_sum

    linear = weighted_sum([1, 2, 3, 4], 5)
    x = [1, 0, 1, 1]
    for i in range(5):
        left = partial_sum(linear, 0, i, x)
        right = partial_sum(linear, i, 4, x)
        assert linear.add(left, right) == partial_sum(linear, 0, 4, x)


def test_pair_parity_dfa():
    """Counts adjacent 11 pairs mod 2."""
    from streaming.algorithms import PairParityDfa, run_noiseless

    dfa = PairParityDfa()
    for x in itertools.product((0, 1), repeat=6):
        pairs = sum(a & b for a, b in zip(x, x[1:]))
        assert run_noiseless(dfa, x) == pairs % 2


def test_index_problem_returns_target_value():
    """The (i, y_i) stream answers y_target."""
    from streaming.algorithms import IndexAlgorithm, index_layout, index_stream, run_noiseless

    index_bits, pairs = index_layout(16)
    assert (index_bits, pairs) == (3, 4)
    y = [1, 0, 1, 1]
    x = index_stream(y, index_bits)
    assert len(x) == 16
    for target in range(4):
        assert run_noiseless(IndexAlgorithm(index_bits, target), x) == y[target]


def test_bit_counter_and_run_from():
    """run_from continues from an intermediate state."""
    from streaming.algorithms import BitCounter

    counter = BitCounter(8)
    x = [1, 1, 0, 1, 0, 0, 1, 1]
    middle = counter.run_from(counter.init_state, x[:4])
    assert counter.run_from(middle, x[4:]) == 5
    assert counter.state_bits == 4


def test_registry_resolves_ids():
    """Linear ids return the linear form unless a state machine is asked for."""
    from streaming.algorithms import (
        LinearStreamingAlgorithm,
        StreamingAlgorithm,
        build_algorithm,
    )

    assert isinstance(build_algorithm("parity", 4), LinearStreamingAlgorithm)
    assert isinstance(build_algorithm("dot", 4, y=[1, 0, 0, 1], linear=False), StreamingAlgorithm)
    assert isinstance(build_algorithm("dfa", 4), StreamingAlgorithm)


def test_registry_rejects_bad_inputs():
    """Unknown ids and missing y are configuration errors."""
    from errors import ConfigurationError
    from streaming.algorithms import build_algorithm

    with pytest.raises(ConfigurationError):
        build_algorithm("median", 4)
    with pytest.raises(ConfigurationError):
        build_algorithm("dot", 4)


def test_partial_sum_bounds():
    """Intervals must lie within [0, n]."""
    from errors import UsageError
    from streaming.algorithms import linear_parity, partial_sum

    with pytest.raises(UsageError):
        partial_sum(linear_parity(4), 2, 5, [0, 0, 0, 0])
