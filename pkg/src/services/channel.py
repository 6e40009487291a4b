"""Oblivious corruption of an encoded stream.

Patterns are fixed from their own seed before any decoder randomness is
drawn. A budget-checked pattern never flips more than
floor((1/4 - eps_budget) * m_len) bits.
"""
import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

import numpy as np

from codes.rm_ldc import grid_point_of, outer_index
from errors import BudgetError, UsageError
from services.encoder import StreamParams
from settings import DEFAULT_EPS_BUDGET


logger = logging.getLogger(__name__)

PATTERN_KINDS = ("random", "prefix_burst", "copy_targeted", "symbol_targeted", "periodic")
# Kinds whose flip count is set by rho; the targeted kinds flip a whole target set.
RATE_KINDS = ("random", "prefix_burst", "periodic")


@dataclass(frozen=True, eq=False)
class CorruptionPattern:
    length: int
    flips: np.ndarray
    kind: str
    seed: int
    rho: Fraction
    copies: Optional[tuple[int, ...]] = None
    target_index: Optional[int] = None
    copy_len: Optional[int] = None
    block_len: Optional[int] = None
    symbol: Optional[int] = None
    budget_check: bool = True
    eps_budget: Fraction = DEFAULT_EPS_BUDGET

    @property
    def weight(self) -> int:
        return len(self.flips)


def pattern_budget(m_len: int, eps_budget: Fraction) -> int:
    return math.floor((Fraction(1, 4) - Fraction(eps_budget)) * m_len)


def _bernoulli_positions(rho: Fraction, m_len: int, rng: np.random.Generator) -> np.ndarray:
    """Each position independently with probability rho, drawn as geometric gaps."""
    if rho == 0 or m_len == 0:
        return np.empty(0, dtype=np.int64)
    if rho >= 1:
        return np.arange(m_len, dtype=np.int64)
    p = float(rho)
    batch = int(p * m_len) + 64
    chunks = []
    cursor = -1
    while True:
        positions = cursor + np.cumsum(rng.geometric(p, size=batch))
        chunks.append(positions[positions < m_len])
        if positions[-1] >= m_len:
            break
        cursor = int(positions[-1])
    return np.concatenate(chunks).astype(np.int64)


def _blocks(starts: Iterable[int], width: int) -> np.ndarray:
    starts = np.asarray(list(starts), dtype=np.int64)
    if starts.size == 0:
        return np.empty(0, dtype=np.int64)
    return (starts[:, None] + np.arange(width, dtype=np.int64)[None, :]).ravel()


def build_pattern(
    kind: str,
    rho: Fraction,
    m_len: int,
    seed: int,
    *,
    copies: Optional[Sequence[int]] = None,
    target_index: Optional[int] = None,
    copy_len: Optional[int] = None,
    block_len: Optional[int] = None,
    symbol: Optional[int] = None,
    budget_check: bool = True,
    eps_budget: Fraction = DEFAULT_EPS_BUDGET,
) -> CorruptionPattern:
    """Generate a pattern from a fully resolved descriptor (stream layout included)."""
    if kind not in PATTERN_KINDS:
        raise UsageError(f"unknown channel {kind!r}; expected one of {PATTERN_KINDS}")
    rho = Fraction(rho)
    if not 0 <= rho <= 1:
        raise UsageError(f"rho={rho} outside [0, 1]")
    eps_budget = Fraction(eps_budget)
    budget = pattern_budget(m_len, eps_budget)
    limit = Fraction(1, 4) - eps_budget
    if budget_check and kind in RATE_KINDS and rho > limit:
        raise BudgetError(f"rho={rho} exceeds the corruption budget 1/4 - eps = {limit}")

    rng = np.random.default_rng(seed)
    if kind == "random":
        flips = _bernoulli_positions(rho, m_len, rng)
    elif kind == "prefix_burst":
        flips = np.arange(math.floor(rho * m_len), dtype=np.int64)
    elif kind == "periodic":
        if rho == 0:
            flips = np.empty(0, dtype=np.int64)
        else:
            period = math.floor(1 / rho)
            flips = np.arange(period - 1, m_len, period, dtype=np.int64)
    else:
        if copy_len is None:
            raise UsageError(f"{kind} channel needs the stream layout (copy length)")
        total_copies = m_len // copy_len
        if kind == "copy_targeted":
            if copies is None:
                count = math.floor(rho * total_copies)
                copies = sorted(rng.choice(total_copies, size=count, replace=False).tolist())
            copies = tuple(sorted(set(copies)))
            if any(not 0 <= c < total_copies for c in copies):
                raise UsageError(f"copies {copies} outside [0, {total_copies})")
            flips = _blocks((c * copy_len for c in copies), copy_len)
        else:
            if symbol is None or block_len is None:
                raise UsageError("symbol_targeted channel needs a target symbol and block length")
            flips = _blocks((c * copy_len + symbol * block_len for c in range(total_copies)), block_len)

    if budget_check and len(flips) > budget:
        if kind in ("random", "periodic"):
            if kind == "random":
                keep = np.sort(rng.choice(len(flips), size=budget, replace=False))
                flips = flips[keep]
            else:
                flips = flips[:budget]
        else:
            raise BudgetError(
                f"{kind} pattern flips {len(flips)} bits, over the budget of {budget} "
                f"(1/4 - eps = {limit} of {m_len})"
            )

    pattern = CorruptionPattern(
        length=m_len,
        flips=np.sort(flips),
        kind=kind,
        seed=seed,
        rho=rho,
        copies=tuple(copies) if copies is not None else None,
        target_index=target_index,
        copy_len=copy_len,
        block_len=block_len,
        symbol=symbol,
        budget_check=budget_check,
        eps_budget=eps_budget,
    )
    logger.debug("%s pattern seed=%d rho=%s: %d of %d bits", kind, seed, rho, pattern.weight, m_len)
    return pattern


def make_pattern(
    kind: str,
    rho: Fraction,
    m_len: int,
    seed: int,
    *,
    sp: Optional[StreamParams] = None,
    copies: Optional[Sequence[int]] = None,
    target_index: Optional[int] = None,
    budget_check: bool = True,
    eps_budget: Optional[Fraction] = None,
) -> CorruptionPattern:
    """Pattern of the given kind; targeted kinds read the copy layout from `sp`."""
    if eps_budget is None:
        eps_budget = sp.eps_budget if sp is not None else DEFAULT_EPS_BUDGET
    copy_len = block_len = symbol = None
    if sp is not None:
        copy_len, block_len = sp.copy_len, sp.ldc.n_inner
    if kind == "symbol_targeted":
        if sp is None:
            raise UsageError("symbol_targeted channel needs stream parameters")
        target_index = target_index or 1
        symbol = outer_index(grid_point_of(target_index, sp.ldc), sp.ldc)
    return build_pattern(
        kind,
        rho,
        m_len,
        seed,
        copies=copies,
        target_index=target_index,
        copy_len=copy_len,
        block_len=block_len,
        symbol=symbol,
        budget_check=budget_check,
        eps_budget=eps_budget,
    )


def apply_pattern(z: np.ndarray, p: CorruptionPattern) -> np.ndarray:
    z = np.asarray(z, dtype=np.uint8)
    if len(z) != p.length:
        raise UsageError(f"stream has {len(z)} bits but the pattern covers {p.length}")
    out = z.copy()
    out[p.flips] ^= 1
    return out


def pattern_weight_fraction(p: CorruptionPattern) -> Fraction:
    if p.length == 0:
        return Fraction(0)
    return Fraction(p.weight, p.length)
