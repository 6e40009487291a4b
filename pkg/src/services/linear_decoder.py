"""Decoder for linear streaming algorithms.

estimate(i, j) guesses A_{i,j}(x) = g_{i+1}(x_{i+1}) + ... + g_j(x_j). Each
level splits (i, j] into r sections and runs ell chunks; in every chunk a
secret permutation decides which section is estimated from which stretch of
the stream, so an adversary cannot aim at one section's copies.
"""
import logging
import random
from fractions import Fraction

from services.encoder import StreamParams
from services.guess import UNSET, weighted_update
from services.instrumentation import ConfidenceAudit, SpaceProbe
from services.leaf_decoder import DecodeOutcome, RecursiveDecoder
from streaming.algorithms import LinearStreamingAlgorithm
from streaming.bitstream import BitStream


logger = logging.getLogger(__name__)


class LinearDecoder(RecursiveDecoder):
    mode = "linear"

    def __init__(
        self,
        linear: LinearStreamingAlgorithm,
        bs: BitStream,
        sp: StreamParams,
        rng: random.Random,
        probe: SpaceProbe | None = None,
        audit: ConfidenceAudit | None = None,
    ):
        super().__init__(bs, sp, rng, probe=probe, audit=audit)
        self.linear = linear

    def estimate(self, i: int, j: int) -> tuple[int, Fraction]:
        level = self.level_of(i, j)
        if level == 0:
            verdict = self.read_leaf(j)
            value, conf = self.linear.apply(j, verdict.bit), verdict.conf
        else:
            value, conf = self._aggregate(i, j)
        self.record(level, conf)
        return value, conf

    def _aggregate(self, i: int, j: int) -> tuple[int, Fraction]:
        r, ell = self.sp.r, self.sp.ell
        bounds = self.bounds(i, j)
        slots = [UNSET] * r
        with self.probe.holding("level") as held:
            for _ in range(ell):
                order = self.permutation()
                for target in order:
                    held.set(self.level_registers(slots, order))
                    q_hat, c_hat = self.estimate(bounds[target - 1], bounds[target])
                    slots[target - 1] = weighted_update(slots[target - 1], q_hat, c_hat)
        value = self.linear.total(slot.value for slot in slots if not slot.unset)
        conf = min(slot.conf for slot in slots) / ell
        logger.debug("estimate (%d, %d]: value %d conf %s", i, j, value, conf)
        return value, conf

    def top_estimate(self, initial: int) -> tuple[int, Fraction]:
        return self.estimate(0, self.sp.n)

    def run(self) -> DecodeOutcome:
        best = self.amplify(self.linear.zero)
        value = self.linear.zero if best.unset else best.value
        return self.outcome(value, best.conf)


def est_a_linear(
    i: int,
    j: int,
    bs: BitStream,
    linear: LinearStreamingAlgorithm,
    sp: StreamParams,
    rng: random.Random,
) -> tuple[int, Fraction]:
    return LinearDecoder(linear, bs, sp, rng).estimate(i, j)


def run_linear(
    linear: LinearStreamingAlgorithm,
    bs: BitStream,
    sp: StreamParams,
    rng: random.Random,
    probe: SpaceProbe | None = None,
    audit: ConfidenceAudit | None = None,
) -> DecodeOutcome:
    return LinearDecoder(linear, bs, sp, rng, probe=probe, audit=audit).run()
