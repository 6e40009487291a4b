"""Binary inner code: first-order Reed-Muller RM(1, w-1), one field symbol per block.

Symbol bits (a0; a1..a_{w-1}), a0 the least significant, define the affine map
z -> a0 ^ <a, z> evaluated at every z in {0,1}^{w-1}; bit t of a block is the
value at the z whose i-th coordinate is bit i of t. Block length is 2^{w-1}
and any two codewords differ in exactly half of the positions or all of them.
"""
import functools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from codes.field import FieldElem
from errors import ConfigurationError, UsageError


@dataclass(frozen=True)
class InnerCodeSpec:
    msg_bits: int
    block_len: int = field(init=False)
    epsilon_in: Fraction = Fraction(0)

    def __post_init__(self):
        if self.msg_bits < 2:
            raise ConfigurationError(f"inner code needs at least 2 message bits, got {self.msg_bits}")
        object.__setattr__(self, "block_len", 1 << (self.msg_bits - 1))

    @property
    def min_distance(self) -> int:
        return self.block_len // 2

    @property
    def codeword_count(self) -> int:
        return 1 << self.msg_bits


def _encode_int(sym: int, spec: InnerCodeSpec) -> int:
    a0 = sym & 1
    linear = sym >> 1
    word = 0
    for t in range(spec.block_len):
        if a0 ^ ((linear & t).bit_count() & 1):
            word |= 1 << t
    return word


@functools.lru_cache(maxsize=None)
def codeword_table(spec: InnerCodeSpec) -> tuple[int, ...]:
    """Every codeword as an int (bit t = block position t), indexed by symbol."""
    return tuple(_encode_int(sym, spec) for sym in range(spec.codeword_count))


@functools.lru_cache(maxsize=None)
def codeword_bits(spec: InnerCodeSpec) -> np.ndarray:
    """(2^w, block_len) uint8 matrix of codeword bits, row = symbol."""
    table = np.zeros((spec.codeword_count, spec.block_len), dtype=np.uint8)
    for sym, word in enumerate(codeword_table(spec)):
        for t in range(spec.block_len):
            table[sym, t] = word >> t & 1
    table.setflags(write=False)
    return table


def bits_to_int(bits: Iterable[int]) -> int:
    word = 0
    for t, bit in enumerate(bits):
        if bit:
            word |= 1 << t
    return word


def _symbol_value(sym: FieldElem | int) -> int:
    return sym.value if isinstance(sym, FieldElem) else int(sym)


def inner_encode(sym: FieldElem | int, spec: InnerCodeSpec) -> np.ndarray:
    value = _symbol_value(sym)
    if not 0 <= value < spec.codeword_count:
        raise UsageError(f"symbol {value} does not fit in {spec.msg_bits} bits")
    return codeword_bits(spec)[value].copy()


def decode_int(word: int, spec: InnerCodeSpec) -> tuple[int, int]:
    """Nearest codeword to an int-packed block: (symbol, distance), ties to the smaller symbol."""
    best_sym = 0
    best_dist = spec.block_len + 1
    for sym, codeword in enumerate(codeword_table(spec)):
        dist = (word ^ codeword).bit_count()
        if dist < best_dist:
            best_sym, best_dist = sym, dist
            if dist == 0:
                break
    return best_sym, best_dist


def inner_decode(word: Sequence[int], spec: InnerCodeSpec) -> tuple[int, int]:
    if len(word) != spec.block_len:
        raise UsageError(f"inner block must have {spec.block_len} bits, got {len(word)}")
    return decode_int(bits_to_int(word), spec)


def inner_decode_all(words: Iterable[Sequence[int]], spec: InnerCodeSpec) -> list[tuple[int, int]]:
    return [inner_decode(word, spec) for word in words]
