"""Small parameter sets shared by the decoder, channel and CLI tests."""

import pytest


def tiny_codec(**overrides):
    """q=8, d=2, nvars=3: N = 8^3 * 4 = 2048 bits per copy, room for 4 message bits."""
    from models.params import CodecParams

    values = dict(n=4, r=2, ell=2, T=1, k=4, q=8, d=2, nvars=3)
    values.update(overrides)
    return CodecParams(**values)


def tiny_stream_params(**overrides):
    from services.encoder import build_stream_params

    return build_stream_params(tiny_codec(**overrides))


@pytest.fixture
def tiny_sp():
    return tiny_stream_params()


@pytest.fixture
def tiny_general_sp():
    return tiny_stream_params(mode="general")


@pytest.fixture
def gf16():
    from codes.field import field_of_width

    return field_of_width(4)


@pytest.fixture
def gf8():
    from codes.field import field_of_width

    return field_of_width(3)


@pytest.fixture
def make_stream_params():
    return tiny_stream_params


@pytest.fixture
def make_codec():
    return tiny_codec
