"""Decoder for general sequential streaming algorithms.

estimate(i, j, q) guesses the state A reaches from state q after reading
x(i:j]. Section a of a level is started from the chunk-start snapshot of
slot a - 1, so a slot that changes during a chunk invalidates every slot
after it.
"""
import logging
import random
from fractions import Fraction

from services.encoder import StreamParams
from services.guess import UNSET, GuessConf, snapshot_update
from services.instrumentation import ConfidenceAudit, Holding, SpaceProbe
from services.leaf_decoder import DecodeOutcome, RecursiveDecoder
from streaming.algorithms import StreamingAlgorithm
from streaming.bitstream import BitStream


logger = logging.getLogger(__name__)


def _changed(live: GuessConf, snapshot: GuessConf) -> bool:
    """A slot changed when its state (or whether it is set) differs from the snapshot."""
    if live.unset or snapshot.unset:
        return live.unset != snapshot.unset
    return live.value != snapshot.value


def reset_after_change(slots: list[GuessConf], snapshots: list[GuessConf]) -> list[GuessConf]:
    """Clear every slot above the smallest index whose state changed this chunk."""
    for a, (live, snapshot) in enumerate(zip(slots, snapshots)):
        if _changed(live, snapshot):
            return slots[: a + 1] + [UNSET] * (len(slots) - a - 1)
    return slots


class GeneralDecoder(RecursiveDecoder):
    mode = "general"

    def __init__(
        self,
        algorithm: StreamingAlgorithm,
        bs: BitStream,
        sp: StreamParams,
        rng: random.Random,
        probe: SpaceProbe | None = None,
        audit: ConfidenceAudit | None = None,
    ):
        super().__init__(bs, sp, rng, probe=probe, audit=audit)
        self.algorithm = algorithm

    def estimate(self, i: int, j: int, q_start: int) -> tuple[int, Fraction]:
        level = self.level_of(i, j)
        if level == 0:
            verdict = self.read_leaf(j)
            state, conf = self.algorithm.step(q_start, verdict.bit), verdict.conf
        else:
            state, conf = self._aggregate(i, j, q_start)
        self.record(level, conf)
        return state, conf

    def process_chunk(
        self, i: int, j: int, q_start: int, slots: list[GuessConf], held: Holding | None = None
    ) -> list[GuessConf]:
        """One chunk: snapshot, r permuted sections updated from the snapshot, then resets."""
        bounds = self.bounds(i, j)
        snapshots = list(slots)
        live = list(slots)
        order = self.permutation()
        for target in order:
            if held is not None:
                held.set(self.level_registers(live, order, snapshots))
            if target == 1:
                start = q_start
            else:
                previous = snapshots[target - 2]
                # Doomed sections still run so the stream stays aligned.
                start = self.algorithm.init_state if previous.unset else previous.value
            q_hat, c_hat = self.estimate(bounds[target - 1], bounds[target], start)
            live[target - 1] = snapshot_update(snapshots[target - 1], q_hat, c_hat)
        return reset_after_change(live, snapshots)

    def _aggregate(self, i: int, j: int, q_start: int) -> tuple[int, Fraction]:
        r, ell = self.sp.r, self.sp.ell
        slots = [UNSET] * r
        with self.probe.holding("level") as held:
            for _ in range(ell):
                slots = self.process_chunk(i, j, q_start, slots, held)
        conf = min(slot.conf for slot in slots) / ell
        last = slots[-1]
        if last.unset:
            logger.debug("estimate (%d, %d]: final slot unset", i, j)
            return self.algorithm.init_state, Fraction(0)
        logger.debug("estimate (%d, %d] from %d: state %d conf %s", i, j, q_start, last.value, conf)
        return last.value, conf

    def top_estimate(self, initial: int) -> tuple[int, Fraction]:
        return self.estimate(0, self.sp.n, initial)

    def run(self) -> DecodeOutcome:
        best = self.amplify(self.algorithm.init_state)
        state = self.algorithm.init_state if best.unset else best.value
        return self.outcome(self.algorithm.output(state), best.conf)


def est_a_general(
    i: int,
    j: int,
    q_start: int,
    bs: BitStream,
    algorithm: StreamingAlgorithm,
    sp: StreamParams,
    rng: random.Random,
) -> tuple[int, Fraction]:
    return GeneralDecoder(algorithm, bs, sp, rng).estimate(i, j, q_start)


def run_general(
    algorithm: StreamingAlgorithm,
    bs: BitStream,
    sp: StreamParams,
    rng: random.Random,
    probe: SpaceProbe | None = None,
    audit: ConfidenceAudit | None = None,
) -> DecodeOutcome:
    return GeneralDecoder(algorithm, bs, sp, rng, probe=probe, audit=audit).run()
