import logging
from typing import Sequence

import numpy as np

from errors import StreamUnderrunError, UsageError


logger = logging.getLogger(__name__)


class BitStream:
    """One-pass reader over a bit vector. Positions are never revisited.

    With `instrumented=True` every read is recorded as a (start, count) span so
    tests and the harness can audit the access pattern.
    """

    def __init__(self, bits: Sequence[int] | np.ndarray, instrumented: bool = False):
        self._bits = np.asarray(bits, dtype=np.uint8)
        self.length = len(self._bits)
        self.cursor = 0
        self.spans: list[tuple[int, int]] | None = [] if instrumented else None

    @property
    def remaining(self) -> int:
        return self.length - self.cursor

    @property
    def bits_read(self) -> int:
        return self.cursor

    def _advance(self, count: int) -> int:
        if count < 0:
            raise UsageError(f"cannot read a negative number of bits ({count})")
        if count > self.remaining:
            raise StreamUnderrunError(
                f"stream underrun at position {self.cursor}: wanted {count} bits, "
                f"{self.remaining} remain of {self.length}"
            )
        start = self.cursor
        self.cursor += count
        if self.spans is not None:
            self.spans.append((start, count))
        return start

    def read(self, count: int) -> np.ndarray:
        start = self._advance(count)
        return self._bits[start : start + count].copy()

    def read_selected(self, count: int, offsets: Sequence[int]) -> np.ndarray:
        """Advance past `count` bits, keeping only those at `offsets` within the window."""
        index = np.asarray(offsets, dtype=np.int64)
        if index.size and (index.min() < 0 or index.max() >= count):
            raise UsageError(f"selected offsets must lie in [0, {count})")
        start = self._advance(count)
        return self._bits[start + index]

    def is_one_pass(self) -> bool:
        """True when the recorded spans tile [0, cursor) in order, each position once."""
        if self.spans is None:
            raise UsageError("stream was not instrumented")
        expected = 0
        for start, count in self.spans:
            if start != expected:
                return False
            expected += count
        return expected == self.cursor


def stream_read(bs: BitStream, count: int) -> np.ndarray:
    return bs.read(count)


def stream_read_selected(bs: BitStream, count: int, offsets: Sequence[int]) -> np.ndarray:
    return bs.read_selected(count, offsets)
