"""Space accounting and confidence auditing for decode runs.

Register units: an algorithm value or state is 1 register, an exact
confidence 2 (numerator and denominator), a permutation entry 1 and a
recursion frame 2 (its interval endpoints). Collected query bits are counted
separately, in bits.
The decoders report what each frame actually holds through a Holding;
level_budget and leaf_registers are the ceilings those holdings stay under.
"""
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction


VALUE_REGISTERS = 1
CONF_REGISTERS = 2
PERMUTATION_REGISTERS = 1
FRAME_REGISTERS = 2


def slot_registers(mode: str) -> int:
    """Registers per aggregation slot; general mode also keeps a chunk-start snapshot."""
    single = VALUE_REGISTERS + CONF_REGISTERS
    return 2 * single if mode == "general" else single


def level_budget(r: int, mode: str) -> int:
    """Registers one recursion level adds: r * (s_regs + c_log) + frame."""
    return r * (slot_registers(mode) + PERMUTATION_REGISTERS) + FRAME_REGISTERS


def guess_registers(guess) -> int:
    """A set guess holds a value and a confidence; an unset slot holds nothing yet."""
    return 0 if guess.unset else VALUE_REGISTERS + CONF_REGISTERS


class Holding:
    """Registers one frame holds, resized as its contents change."""

    def __init__(self, probe: "SpaceProbe", kind: str):
        self.probe = probe
        self.kind = kind
        self.registers = 0

    def set(self, registers: int) -> None:
        delta = registers - self.registers
        self.registers = registers
        if delta > 0:
            self.probe.acquire(self.kind, delta)
        elif delta < 0:
            self.probe.release(self.kind, -delta)

    def __enter__(self) -> "Holding":
        return self

    def __exit__(self, *exc) -> None:
        self.set(0)


class SpaceProbe:
    def __init__(self):
        self.current = 0
        self.peak = 0
        self.held: Counter = Counter()
        self.collected_bits = 0
        self.peak_collected_bits = 0

    def acquire(self, kind: str, registers: int) -> None:
        self.current += registers
        self.held[kind] += registers
        if self.current > self.peak:
            self.peak = self.current

    def release(self, kind: str, registers: int) -> None:
        self.current -= registers
        self.held[kind] -= registers

    def collect(self, bits: int) -> None:
        self.collected_bits += bits
        if self.collected_bits > self.peak_collected_bits:
            self.peak_collected_bits = self.collected_bits

    def holding(self, kind: str) -> Holding:
        return Holding(self, kind)

    def drop(self, bits: int) -> None:
        self.collected_bits -= bits


def space_probe() -> SpaceProbe:
    return SpaceProbe()


@dataclass
class ConfidenceAudit:
    """Every (level, confidence) an estimate returned; level t covers r^t message bits."""

    records: list[tuple[int, Fraction]] = field(default_factory=list)

    def record(self, level: int, conf: Fraction) -> None:
        self.records.append((level, conf))

    def violations(self, ell: int, base_denominator: int) -> list[tuple[int, Fraction]]:
        return [
            (level, conf)
            for level, conf in self.records
            if (ell**level * base_denominator) % conf.denominator
        ]
