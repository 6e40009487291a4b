"""`key=value` parameter files and bit-string inputs."""
from pathlib import Path
from typing import Optional, Sequence

from errors import ConfigurationError, UsageError


def parse_param_text(text: str, source: str = "<text>") -> dict[str, str]:
    params: dict[str, str] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        key, value = key.strip(), value.strip()
        if not sep or not key:
            raise ConfigurationError(f"{source}:{lineno}: expected key=value, got {raw.strip()!r}")
        params[key.replace("-", "_")] = value
    return params


def parse_param_file(path: str | Path) -> dict[str, str]:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as e:
        raise ConfigurationError(f"cannot read parameter file {path}: {e}") from e
    return parse_param_text(text, str(path))


def parse_bits(text: str, n: Optional[int] = None) -> list[int]:
    """A hex literal (0x..., first bit = most significant) or a 0/1 string, x_1 first."""
    text = text.strip().replace("_", "")
    if text.lower().startswith("0x"):
        digits = text[2:]
        try:
            value = int(digits, 16)
        except ValueError as e:
            raise UsageError(f"bad hex literal {text!r}") from e
        width = n if n is not None else 4 * len(digits)
        if value >> width:
            raise UsageError(f"hex literal {text} does not fit in {width} bits")
        return [(value >> (width - 1 - t)) & 1 for t in range(width)]
    if not text or set(text) - {"0", "1"}:
        raise UsageError(f"expected a 0x hex literal or a 0/1 string, got {text!r}")
    bits = [int(c) for c in text]
    if n is not None and len(bits) != n:
        raise UsageError(f"expected {n} bits, got {len(bits)}")
    return bits


def format_bits(bits: Sequence[int]) -> str:
    return "".join(str(int(b)) for b in bits)
