"""Noiseless streaming algorithms.

A `StreamingAlgorithm` is an immutable state machine over fixed-width int
states. A `LinearStreamingAlgorithm` computes g_1(x_1) + ... + g_n(x_n) over
the integers mod `modulus`; `lift_linear` turns one into a state machine
tracking (position, partial sum).
"""
from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Any, Sequence

from errors import ConfigurationError, UsageError


def _width(values: int) -> int:
    """Bits needed to hold `values` distinct values."""
    return max(values - 1, 0).bit_length()


class StreamingAlgorithm(ABC):
    name: str = "algorithm"
    state_bits: int = 0
    init_state: int = 0

    @abstractmethod
    def step(self, state: int, bit: int) -> int: ...

    @abstractmethod
    def output(self, state: int) -> Any: ...

    def run_from(self, state: int, bits: Sequence[int]) -> int:
        """A(q, x): fold `step` over bits starting at state q."""
        for bit in bits:
            state = self.step(state, bit)
        return state


@dataclass(frozen=True)
class LinearStreamingAlgorithm:
    name: str
    modulus: int
    g: tuple[tuple[int, int], ...]  # (g_i(0), g_i(1)) for i = 1..n

    def __post_init__(self):
        if self.modulus < 2:
            raise ConfigurationError(f"modulus {self.modulus} must be at least 2")
        for i, pair in enumerate(self.g, start=1):
            if any(not 0 <= v < self.modulus for v in pair):
                raise ConfigurationError(f"g_{i} values {pair} outside Z_{self.modulus}")

    @property
    def n(self) -> int:
        return len(self.g)

    @property
    def zero(self) -> int:
        return 0

    def apply(self, i: int, bit: int) -> int:
        """g_i(bit), i 1-based."""
        return self.g[i - 1][bit]

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.modulus

    def total(self, values: Sequence[int]) -> int:
        return sum(values) % self.modulus

    def evaluate(self, x: Sequence[int]) -> int:
        return self.total(self.apply(i, bit) for i, bit in enumerate(x, start=1))


class LiftedLinear(StreamingAlgorithm):
    """(position mod n, partial sum) packed as position << sum_bits | sum."""

    def __init__(self, linear: LinearStreamingAlgorithm):
        self.linear = linear
        self.name = f"lifted-{linear.name}"
        self.pos_bits = _width(linear.n)
        self.sum_bits = _width(linear.modulus)
        self.state_bits = self.pos_bits + self.sum_bits
        self.init_state = 0

    def step(self, state: int, bit: int) -> int:
        pos = state >> self.sum_bits
        partial = state & ((1 << self.sum_bits) - 1)
        partial = self.linear.add(partial, self.linear.apply(pos + 1, bit))
        return ((pos + 1) % self.linear.n) << self.sum_bits | partial

    def output(self, state: int) -> int:
        return state & ((1 << self.sum_bits) - 1)


def lift_linear(linear: LinearStreamingAlgorithm) -> StreamingAlgorithm:
    return LiftedLinear(linear)


class Parity(StreamingAlgorithm):
    name = "parity"
    state_bits = 1

    def step(self, state: int, bit: int) -> int:
        return state ^ bit

    def output(self, state: int) -> int:
        return state


class BitCounter(StreamingAlgorithm):
    name = "count"

    def __init__(self, n: int):
        self.n = n
        self.state_bits = _width(n + 1)

    def step(self, state: int, bit: int) -> int:
        return state + bit

    def output(self, state: int) -> int:
        return state


class PairParityDfa(StreamingAlgorithm):
    """Four-state automaton accepting streams with an odd number of adjacent 11 pairs.

    State bit 0 is the previous input bit, bit 1 the running pair parity.
    """

    name = "dfa"
    state_bits = 2

    def step(self, state: int, bit: int) -> int:
        last = state & 1
        parity = (state >> 1) ^ (last & bit)
        return parity << 1 | bit

    def output(self, state: int) -> int:
        return state >> 1


class IndexAlgorithm(StreamingAlgorithm):
    """Index problem over a stream of (i, y_i) pairs, i written MSB-first in index_bits.

    State packs (phase, index accumulator, answer); the answer is the value of
    the last pair whose index equals the target, 0 if there is none.
    """

    name = "index"

    def __init__(self, index_bits: int, target: int):
        if not 0 <= target < 1 << index_bits:
            raise ConfigurationError(f"target {target} does not fit in {index_bits} index bits")
        self.index_bits = index_bits
        self.target = target
        self.phase_bits = _width(index_bits + 1)
        self.state_bits = self.phase_bits + index_bits + 1

    def _unpack(self, state: int) -> tuple[int, int, int]:
        answer = state & 1
        index = (state >> 1) & ((1 << self.index_bits) - 1)
        phase = state >> (1 + self.index_bits)
        return phase, index, answer

    def _pack(self, phase: int, index: int, answer: int) -> int:
        return phase << (1 + self.index_bits) | index << 1 | answer

    def step(self, state: int, bit: int) -> int:
        phase, index, answer = self._unpack(state)
        if phase < self.index_bits:
            return self._pack(phase + 1, index << 1 | bit, answer)
        if index == self.target:
            answer = bit
        return self._pack(0, 0, answer)

    def output(self, state: int) -> int:
        return state & 1


def index_stream(y: Sequence[int], index_bits: int) -> list[int]:
    """Binarize the pairs (i, y_i) for i = 0..len(y)-1."""
    bits = []
    for i, value in enumerate(y):
        bits.extend((i >> shift) & 1 for shift in range(index_bits - 1, -1, -1))
        bits.append(value)
    return bits


def index_layout(n: int) -> tuple[int, int]:
    """(index_bits, pairs) with pairs * (index_bits + 1) = n and every index representable."""
    for index_bits in range(1, n):
        if n % (index_bits + 1) == 0 and (1 << index_bits) >= n // (index_bits + 1):
            return index_bits, n // (index_bits + 1)
    raise ConfigurationError(f"stream length {n} admits no index-problem layout")


def linear_parity(n: int) -> LinearStreamingAlgorithm:
    return LinearStreamingAlgorithm("parity", 2, ((0, 1),) * n)


def dot_product(y: Sequence[int]) -> LinearStreamingAlgorithm:
    return LinearStreamingAlgorithm("dot", 2, tuple((0, yi & 1) for yi in y))


def weighted_sum(weights: Sequence[int], modulus: int) -> LinearStreamingAlgorithm:
    return LinearStreamingAlgorithm("sum", modulus, tuple((0, w % modulus) for w in weights))


def run_noiseless(algorithm: StreamingAlgorithm | LinearStreamingAlgorithm, x: Sequence[int]) -> Any:
    if isinstance(algorithm, LinearStreamingAlgorithm):
        return algorithm.evaluate(x)
    return algorithm.output(algorithm.run_from(algorithm.init_state, x))


def partial_sum(linear: LinearStreamingAlgorithm, i: int, j: int, x: Sequence[int]) -> int:
    """A_{i,j}(x) = g_{i+1}(x_{i+1}) + ... + g_j(x_j)."""
    if not 0 <= i <= j <= linear.n:
        raise UsageError(f"need 0 <= i <= j <= {linear.n}, got i={i} j={j}")
    return linear.total(linear.apply(t, x[t - 1]) for t in range(i + 1, j + 1))


ALGORITHM_IDS = ("parity", "dot", "index", "dfa", "sum", "count")
LINEAR_IDS = ("parity", "dot", "sum")


def build_algorithm(
    algorithm_id: str,
    n: int,
    *,
    y: Sequence[int] | None = None,
    target: int | None = None,
    modulus: int = 2,
    linear: bool = True,
) -> StreamingAlgorithm | LinearStreamingAlgorithm:
    """Resolve a CLI algorithm id. Linear ids return the linear form unless linear=False."""
    if algorithm_id == "parity":
        return linear_parity(n) if linear else Parity()
    if algorithm_id == "dot":
        if y is None or len(y) != n:
            raise ConfigurationError(f"dot algorithm needs y with {n} bits")
        built = dot_product(y)
        return built if linear else lift_linear(built)
    if algorithm_id == "sum":
        weights = list(y) if y is not None else [1] * n
        if len(weights) != n:
            raise ConfigurationError(f"sum algorithm needs {n} weights, got {len(weights)}")
        built = weighted_sum(weights, modulus)
        return built if linear else lift_linear(built)
    if algorithm_id == "index":
        index_bits, _ = index_layout(n)
        return IndexAlgorithm(index_bits, target or 0)
    if algorithm_id == "dfa":
        return PairParityDfa()
    if algorithm_id == "count":
        return BitCounter(n)
    raise ConfigurationError(f"unknown algorithm {algorithm_id!r}; expected one of {ALGORITHM_IDS}")
