"""enc(x): T * (r * ell)^D copies of the LDC codeword."""

from fractions import Fraction

import numpy as np
import pytest


@pytest.mark.parametrize(
    "n,r,ell,T",
    [
        (1, 2, 1, 1), (2, 2, 1, 1), (2, 2, 2, 3), (4, 2, 1, 1),
        (4, 2, 2, 1), (4, 4, 1, 2), (4, 4, 3, 1), (4, 2, 1, 4),
        (1, 4, 5, 2), (2, 2, 3, 1), (4, 4, 2, 1), (4, 2, 3, 1),
    ],
)
def test_stream_length_formula(n, r, ell, T, make_stream_params):
    """|enc(x)| = T * (r * ell)^D * N exactly."""
    from services.encoder import encode_stream, log_base

    sp = make_stream_params(n=n, r=r, ell=ell, T=T)
    depth = log_base(n, r)
    stream = encode_stream([1] * n, sp)
    assert len(stream) == sp.m_len == T * (r * ell) ** depth * sp.copy_len


def test_copies_are_identical(tiny_sp):
    """Every copy equals LDC(x)."""
    from codes.rm_ldc import ldc_encode
    from services.encoder import copy_of, encode_stream

    x = [1, 0, 0, 1]
    stream = encode_stream(x, tiny_sp)
    codeword = ldc_encode(x, tiny_sp.ldc)
    for c in (0, 5, tiny_sp.total_copies - 1):
        assert np.array_equal(copy_of(stream, c, tiny_sp), codeword)


def test_copies_consumed(tiny_sp):
    """An estimate over (i, j] reads (r * ell)^log_r(j - i) copies."""
    from errors import UsageError
    from services.encoder import copies_consumed

    assert copies_consumed(0, 4, tiny_sp) == tiny_sp.copies_per_pass == 16
    assert copies_consumed(2, 3, tiny_sp) == 1
    assert copies_consumed(0, 2, tiny_sp) == 4
    with pytest.raises(UsageError):
        copies_consumed(0, 3, tiny_sp)


def test_message_length_is_checked(tiny_sp):
    """x must have exactly n bits."""
    from errors import UsageError
    from services.encoder import encode_stream

    with pytest.raises(UsageError):
        encode_stream([1, 0, 1], tiny_sp)


def test_describe_echoes_defaults(tiny_sp):
    """The resolved parameter set carries D, M and the default budget."""
    info = tiny_sp.describe()
    assert info["D"] == 2
    assert info["M"] == 16
    assert info["eps_budget"] == "1/8"
    assert info["N"] == 2048
    assert tiny_sp.eps_budget == Fraction(1, 8)
