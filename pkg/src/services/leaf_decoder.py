import logging
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Sequence

from codes.rm_ldc import Curve, DecodeVerdict, LdcParams, local_decode_with_confidence, plan_queries
from errors import UsageError
from services.encoder import StreamParams, log_base
from services.guess import UNSET, GuessConf, weighted_update
from services.instrumentation import (
    CONF_REGISTERS,
    FRAME_REGISTERS,
    PERMUTATION_REGISTERS,
    VALUE_REGISTERS,
    ConfidenceAudit,
    SpaceProbe,
    guess_registers,
)
from streaming.bitstream import BitStream


logger = logging.getLogger(__name__)


def plan_registers(sp: StreamParams) -> int:
    """Registers holding a query plan: the sampled v1, v2 of every curve."""
    return sp.ldc.k * 2 * sp.ldc.nvars


def leaf_registers(sp: StreamParams) -> int:
    """alpha: everything a leaf holds besides the collected bits."""
    return plan_registers(sp) + FRAME_REGISTERS + VALUE_REGISTERS + CONF_REGISTERS


def curve_plan_registers(curves: Sequence[Curve], params: LdcParams) -> int:
    """Coordinates of the sampled curves; degree-1 curves keep no v2."""
    per_curve = params.nvars * (2 if params.curve_degree == 2 else 1)
    return len(curves) * per_curve


def decode_leaf(
    index: int, bs: BitStream, sp: StreamParams, rng: random.Random, probe: SpaceProbe
) -> DecodeVerdict:
    """Read the next LDC copy, keeping only the planned positions, and decode x[index]."""
    params = sp.ldc
    with probe.holding("leaf") as held:
        held.set(FRAME_REGISTERS)
        curves, positions = plan_queries(index, params, rng)
        held.set(FRAME_REGISTERS + curve_plan_registers(curves, params))
        bits = bs.read_selected(params.codeword_len, positions)
        probe.collect(len(positions))
        try:
            collected = dict(zip(positions, bits.tolist()))
            verdict = local_decode_with_confidence(index, collected, curves, params)
        finally:
            probe.drop(len(positions))
        held.set(FRAME_REGISTERS + VALUE_REGISTERS + CONF_REGISTERS)
        return verdict


@dataclass(frozen=True)
class DecodeOutcome:
    value: Any
    conf: Fraction
    bits_read: int
    peak_registers: int
    peak_collected_bits: int
    leaves: int


class RecursiveDecoder:
    """Shared plumbing of the chunked recursive decoders.

    Subclasses implement `estimate`; `run` performs the T-fold amplification.
    """

    mode = "linear"

    def __init__(
        self,
        bs: BitStream,
        sp: StreamParams,
        rng: random.Random,
        probe: SpaceProbe | None = None,
        audit: ConfidenceAudit | None = None,
    ):
        self.bs = bs
        self.sp = sp
        self.rng = rng
        self.probe = probe if probe is not None else SpaceProbe()
        self.audit = audit
        self.leaves = 0

    def level_of(self, i: int, j: int) -> int:
        depth = log_base(j - i, self.sp.r) if j > i else None
        if depth is None:
            raise UsageError(f"interval ({i}, {j}] does not have a power-of-{self.sp.r} length")
        return depth

    def bounds(self, i: int, j: int) -> list[int]:
        """i_0 = i, i_a = i + a * (j - i) / r, ..., i_r = j."""
        width = (j - i) // self.sp.r
        return [i + a * width for a in range(self.sp.r + 1)]

    def permutation(self) -> list[int]:
        """Uniform permutation of 1..r (random.shuffle is Fisher-Yates)."""
        order = list(range(1, self.sp.r + 1))
        self.rng.shuffle(order)
        return order

    def level_registers(
        self, slots: Sequence[GuessConf], order: Sequence[int] = (), snapshots: Sequence[GuessConf] = ()
    ) -> int:
        """What a level frame holds now: its endpoints, the live permutation, every set guess."""
        guesses = sum(guess_registers(g) for g in slots) + sum(guess_registers(g) for g in snapshots)
        return FRAME_REGISTERS + PERMUTATION_REGISTERS * len(order) + guesses

    def read_leaf(self, index: int) -> DecodeVerdict:
        self.leaves += 1
        return decode_leaf(index, self.bs, self.sp, self.rng, self.probe)

    def record(self, level: int, conf: Fraction) -> None:
        if self.audit is not None:
            self.audit.record(level, conf)

    def amplify(self, initial: Any) -> GuessConf:
        """T top-level estimates folded into one guess with weighted_update."""
        self.level_of(0, self.sp.n)
        best = UNSET
        with self.probe.holding("amplifier") as held:
            for t in range(self.sp.T):
                q_hat, c_hat = self.top_estimate(initial)
                best = weighted_update(best, q_hat, c_hat)
                held.set(guess_registers(best))
                logger.debug("amplification round %d: guess %s conf %s", t + 1, q_hat, c_hat)
        return best

    def top_estimate(self, initial: Any) -> tuple[Any, Fraction]:
        raise NotImplementedError

    def outcome(self, value: Any, conf: Fraction) -> DecodeOutcome:
        result = DecodeOutcome(
            value=value,
            conf=conf,
            bits_read=self.bs.bits_read,
            peak_registers=self.probe.peak,
            peak_collected_bits=self.probe.peak_collected_bits,
            leaves=self.leaves,
        )
        logger.info(
            "%s decode finished: value=%s conf=%s bits_read=%d peak_registers=%d leaves=%d",
            self.mode, value, conf, result.bits_read, result.peak_registers, result.leaves,
        )
        return result
