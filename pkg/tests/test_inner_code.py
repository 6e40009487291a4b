"""First-order Reed-Muller inner code."""

import itertools

import numpy as np
import pytest


@pytest.mark.parametrize("w", [3, 4, 5, 6])
def test_minimum_distance_is_half_the_block(w):
    """Any two distinct codewords differ in at least N_inner / 2 positions."""
    from codes.inner_code import InnerCodeSpec, codeword_table

    spec = InnerCodeSpec(msg_bits=w)
    words = codeword_table(spec)
    distance = min((a ^ b).bit_count() for a, b in itertools.combinations(words, 2))
    assert spec.block_len == 2 ** (w - 1)
    assert distance == spec.min_distance == spec.block_len // 2


def test_encode_layout_for_w3():
    """Symbol 0b011 (a0=1, a=(1,0)) evaluates 1 ^ z_0 at z = 0..3."""
    from codes.inner_code import InnerCodeSpec, inner_encode

    spec = InnerCodeSpec(msg_bits=3)
    assert inner_encode(0b011, spec).tolist() == [1, 0, 1, 0]
    assert inner_encode(0, spec).tolist() == [0, 0, 0, 0]


def test_decode_corrects_below_half_distance():
    """Flipping fewer than N_inner / 4 bits always decodes to the sent symbol."""
    from codes.inner_code import InnerCodeSpec, inner_decode, inner_encode

    spec = InnerCodeSpec(msg_bits=4)
    rng = np.random.default_rng(7)
    for sym in range(16):
        word = inner_encode(sym, spec)
        flip = rng.integers(spec.block_len)
        word[flip] ^= 1
        assert inner_decode(word, spec) == (sym, 1)


def test_decode_ties_go_to_smaller_symbol():
    """A word equidistant from several codewords decodes to the smallest symbol."""
    from codes.inner_code import InnerCodeSpec, inner_decode

    spec = InnerCodeSpec(msg_bits=3)
    # one flip away from symbols 0, 3, 5 and 7
    sym, dist = inner_decode([1, 0, 0, 0], spec)
    assert dist == 1
    assert sym == 0


def test_complement_is_a_codeword():
    """Flipping every bit of a block only toggles a0."""
    from codes.inner_code import InnerCodeSpec, inner_decode, inner_encode

    spec = InnerCodeSpec(msg_bits=4)
    word = 1 - inner_encode(0b0110, spec)
    assert inner_decode(word, spec) == (0b0111, 0)


def test_wrong_block_length_is_rejected():
    """Blocks must have exactly 2^(w-1) bits."""
    from codes.inner_code import InnerCodeSpec, inner_decode
    from errors import UsageError

    with pytest.raises(UsageError):
        inner_decode([0, 1, 0], InnerCodeSpec(msg_bits=3))


def test_decode_all_preserves_order():
    """Batch decoding returns one result per block."""
    from codes.inner_code import InnerCodeSpec, inner_decode_all, inner_encode

    spec = InnerCodeSpec(msg_bits=3)
    blocks = [inner_encode(s, spec) for s in (5, 2, 7)]
    assert [s for s, _ in inner_decode_all(blocks, spec)] == [5, 2, 7]
