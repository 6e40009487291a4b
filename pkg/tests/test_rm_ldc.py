"""Reed-Muller LDC: parameter setup, encoding and local decoding with confidence."""

import itertools
import random
from fractions import Fraction

import numpy as np
import pytest


def _tiny_ldc(**overrides):
    from codes.rm_ldc import ldc_setup

    values = dict(d=2, nvars=3, q=8, k=4)
    values.update(overrides)
    return ldc_setup(4, Fraction(1, 2), **values)


def _decode(i, codeword, params, rng):
    from codes.rm_ldc import local_decode_with_confidence, plan_queries

    curves, positions = plan_queries(i, params, rng)
    collected = {p: int(codeword[p]) for p in positions}
    return local_decode_with_confidence(i, collected, curves, params)


def test_desk_parameters():
    """q=16, d=4, nvars=3 gives N_inner = 8 and N = 32768 bits."""
    from codes.rm_ldc import ldc_setup

    params = ldc_setup(16, Fraction(1, 2), d=4, nvars=3, q=16)
    assert params.n_inner == 8
    assert params.codeword_len == 32768
    assert params.capacity == 20
    assert params.k == 32
    assert params.deg_bound == 6
    assert params.d_cap == (15 - 6) * 8 // 4


def test_automatic_setup_is_valid():
    """Without overrides the chosen code holds n bits and respects the field range."""
    from codes.rm_ldc import ldc_setup

    params = ldc_setup(16, Fraction(1, 2))
    assert params.capacity >= 16
    assert 2 * params.d / params.eps_ldc <= params.q <= 4 * params.d / params.eps_ldc
    assert params.q - 1 > params.deg_bound + 2
    assert (params.d, params.nvars, params.q, params.codeword_len) == (16, 1, 64, 2048)


def test_field_outside_range_needs_waiver():
    """q=64 is too large for d=2 at eps=1/2 unless the range check is waived."""
    from codes.rm_ldc import ldc_setup
    from errors import ConfigurationError

    with pytest.raises(ConfigurationError):
        ldc_setup(4, Fraction(1, 2), d=2, nvars=3, q=64)
    assert ldc_setup(4, Fraction(1, 2), d=2, nvars=3, q=64, waive_field_range=True).q == 64


def test_too_small_grid_is_rejected():
    """nvars=1 at d=2 holds only two message bits."""
    from codes.rm_ldc import ldc_setup
    from errors import ConfigurationError

    with pytest.raises(ConfigurationError):
        ldc_setup(4, Fraction(1, 2), d=2, nvars=1, q=8)


def test_encoding_is_systematic_on_the_grid():
    """The outer symbol at grid point i is x_i."""
    from codes.rm_ldc import grid_point_of, outer_index, rm_encode

    params = _tiny_ldc()
    for x in itertools.product((0, 1), repeat=4):
        symbols = rm_encode(x, params)
        for i in range(1, 5):
            assert symbols[outer_index(grid_point_of(i, params), params)] == x[i - 1]


def test_outer_distance_meets_bound():
    """Distinct messages give outer codewords at least (q-d+1) q^(nvars-1) apart."""
    from codes.rm_ldc import ldc_encode, ldc_setup, outer_distance_bound, rm_encode

    params = ldc_setup(3, Fraction(1, 2), d=2, nvars=2, q=8)
    bound = outer_distance_bound(params)
    assert bound == 56
    messages = list(itertools.product((0, 1), repeat=3))
    for a, b in itertools.combinations(messages, 2):
        assert np.count_nonzero(rm_encode(a, params) != rm_encode(b, params)) >= bound
        bits = np.count_nonzero(ldc_encode(a, params) != ldc_encode(b, params))
        assert bits >= bound * params.inner.min_distance
        assert Fraction(bits, params.codeword_len) >= Fraction(1, 2) - params.eps_ldc


def test_restriction_to_a_curve_matches_the_codeword():
    """g(p(lambda)) equals the codeword symbol at p(lambda) for every lambda."""
    from codes.rm_ldc import Curve, message_coefficients, outer_index, restrict_to_curve, rm_encode
    from codes.rs_decoding import poly_eval

    params = _tiny_ldc()
    x = [1, 0, 1, 1]
    symbols = rm_encode(x, params)
    coefficients = message_coefficients(x, params)
    rng = random.Random(3)
    for _ in range(10):
        curve = Curve(
            tuple(rng.randrange(8) for _ in range(3)),
            tuple(rng.randrange(8) for _ in range(3)),
            tuple(rng.randrange(8) for _ in range(3)),
        )
        h = restrict_to_curve(coefficients, curve, params)
        assert h.degree <= params.deg_bound
        for lam in range(8):
            point = curve.at(lam, params.field)
            assert poly_eval(h, lam) == symbols[outer_index(point, params)]


def test_query_plan_is_deterministic_and_bounded():
    """Same seed, same plan; positions sorted, in range and at most Q * N_inner."""
    from codes.rm_ldc import plan_queries

    params = _tiny_ldc()
    curves_a, positions_a = plan_queries(2, params, random.Random(9))
    curves_b, positions_b = plan_queries(2, params, random.Random(9))
    assert curves_a == curves_b
    assert positions_a == positions_b
    assert positions_a == sorted(set(positions_a))
    assert 0 <= positions_a[0] and positions_a[-1] < params.codeword_len
    assert len(positions_a) <= params.queries * params.n_inner
    assert all(curve.v0 == params.grid[1] for curve in curves_a)


@pytest.mark.parametrize("curve_degree", [1, 2])
def test_zero_noise_decodes_with_quarter_confidence(curve_degree):
    """A clean codeword yields (x_i, 1/4) for every i and seed."""
    from codes.rm_ldc import ldc_encode

    params = _tiny_ldc(curve_degree=curve_degree)
    for seed in range(5):
        rng = random.Random(seed)
        for x in ([0, 0, 0, 0], [1, 0, 1, 1], [1, 1, 1, 1]):
            codeword = ldc_encode(x, params)
            for i in range(1, 5):
                verdict = _decode(i, codeword, params, rng)
                assert verdict.bit == x[i - 1]
                assert verdict.conf == Fraction(1, 4)
                assert all(c.delta == 0 and c.bw_found for c in verdict.diagnostics)


def test_random_corruption_keeps_the_bit_and_lowers_confidence():
    """10% random flips: the bit survives and the mean confidence drops."""
    from codes.rm_ldc import ldc_encode, ldc_setup

    params = ldc_setup(4, Fraction(1, 2), d=2, nvars=3, q=16, k=8)
    x = [1, 0, 0, 1]
    codeword = ldc_encode(x, params)
    noise = np.random.default_rng(11)
    rng = random.Random(11)
    correct, confs = 0, []
    for trial in range(60):
        received = codeword ^ (noise.random(len(codeword)) < 0.1).astype(np.uint8)
        i = trial % 4 + 1
        verdict = _decode(i, received, params, rng)
        correct += verdict.bit == x[i - 1]
        confs.append(verdict.conf)
    assert correct >= 58
    assert sum(confs) / len(confs) <= Fraction(1, 4) - Fraction(2, 100)


def test_complemented_copy_flips_the_bit_with_full_confidence():
    """Flipping every bit turns each inner block into another codeword: x_i is inverted."""
    from codes.rm_ldc import ldc_encode

    params = _tiny_ldc()
    x = [0, 1, 1, 0]
    received = 1 - ldc_encode(x, params)
    verdict = _decode(3, received, params, random.Random(0))
    assert verdict.bit == 0
    assert verdict.conf == Fraction(1, 4)


def test_confidence_denominator_divides_base(tiny_sp):
    """Leaf confidences are multiples of 1 / (4 k (q-1) N_inner)."""
    from codes.rm_ldc import ldc_encode

    params = tiny_sp.ldc
    codeword = ldc_encode([1, 1, 0, 1], params)
    noise = np.random.default_rng(5)
    rng = random.Random(5)
    for _ in range(20):
        received = codeword ^ (noise.random(len(codeword)) < 0.05).astype(np.uint8)
        verdict = _decode(1, received, params, rng)
        assert params.conf_denominator % verdict.conf.denominator == 0
        assert 0 <= verdict.conf <= Fraction(1, 4)


def test_missing_collected_position_is_a_usage_error():
    """Local decoding refuses plans whose bits were not collected."""
    from codes.rm_ldc import local_decode_with_confidence, plan_queries
    from errors import UsageError

    params = _tiny_ldc()
    curves, positions = plan_queries(1, params, random.Random(1))
    collected = {p: 0 for p in positions[1:]}
    with pytest.raises(UsageError):
        local_decode_with_confidence(1, collected, curves, params)


def test_grid_point_index_range():
    """Message indices are 1-based."""
    from codes.rm_ldc import grid_point_of
    from errors import UsageError

    params = _tiny_ldc()
    assert grid_point_of(1, params) == (0, 0, 0)
    with pytest.raises(UsageError):
        grid_point_of(0, params)
    with pytest.raises(UsageError):
        grid_point_of(5, params)


def test_distance_bound_summary():
    """Relative distance follows eps_ldc; the cap matches the params."""
    from codes.rm_ldc import ldc_distance_bound, outer_distance_bound

    params = _tiny_ldc()
    bound = ldc_distance_bound(params)
    assert bound.relative == Fraction(1, 2) - params.eps_ldc
    assert bound.outer == outer_distance_bound(params)
    assert bound.d_cap == params.d_cap


def test_mean_confidence_falls_as_noise_rises():
    """Nested noise over rho in {0, .05, .10, .15}: mean confidence never rises and ends below 1/4."""
    from codes.rm_ldc import ldc_encode

    params = _tiny_ldc()
    rhos = [0, 0.05, 0.10, 0.15]
    totals = [Fraction(0)] * len(rhos)
    rng = random.Random(11)
    noise = np.random.default_rng(11)
    trials = 200
    for trial in range(trials):
        x = [rng.randrange(2) for _ in range(4)]
        i = rng.randrange(1, 5)
        clean = ldc_encode(x, params)
        draw = noise.random(params.codeword_len)
        for slot, rho in enumerate(rhos):
            word = clean ^ (draw < rho).astype(np.uint8)
            totals[slot] += _decode(i, word, params, random.Random(trial)).conf
    means = [total / trials for total in totals]
    assert means[0] == Fraction(1, 4)
    assert all(later <= earlier for earlier, later in zip(means, means[1:]))
    assert means[-1] < means[0]
