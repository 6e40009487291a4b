"""key=value parameter files and message bit strings."""

import pytest


def test_comments_blanks_and_dashes():
    """Comments and blank lines are skipped; dashes become underscores."""
    from parsers.param_file import parse_param_text

    text = "# codec\nn = 16\n\nr=4  # branching\neps-ldc = 1/2\n"
    assert parse_param_text(text) == {"n": "16", "r": "4", "eps_ldc": "1/2"}


def test_line_without_equals():
    """Lines must be key=value."""
    from errors import ConfigurationError
    from parsers.param_file import parse_param_text

    with pytest.raises(ConfigurationError, match=":2:"):
        parse_param_text("n=4\njust words\n")


def test_param_file_from_disk(tmp_path):
    """Files parse like text; unreadable files are configuration errors."""
    from errors import ConfigurationError
    from parsers.param_file import parse_param_file

    path = tmp_path / "codec.params"
    path.write_text("mode=general\n")
    assert parse_param_file(path) == {"mode": "general"}
    with pytest.raises(ConfigurationError):
        parse_param_file(tmp_path / "missing.params")


def test_hex_bits_most_significant_first():
    """0xA over four bits is 1010."""
    from parsers.param_file import parse_bits

    assert parse_bits("0xA", 4) == [1, 0, 1, 0]
    assert parse_bits("0x1", 8) == [0, 0, 0, 0, 0, 0, 0, 1]
    assert parse_bits("0xF0") == [1, 1, 1, 1, 0, 0, 0, 0]


def test_binary_bits():
    """A 0/1 string is read left to right."""
    from parsers.param_file import format_bits, parse_bits

    assert parse_bits("0110", 4) == [0, 1, 1, 0]
    assert format_bits(parse_bits("1_0_0_1")) == "1001"


@pytest.mark.parametrize("text, n", [("0x1F", 4), ("012", None), ("101", 4), ("0xZZ", None), ("", None)])
def test_bad_bit_strings(text, n):
    """Wrong alphabet, wrong length or overflowing hex."""
    from errors import UsageError
    from parsers.param_file import parse_bits

    with pytest.raises(UsageError):
        parse_bits(text, n)
