from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from errors import UsageError


@dataclass(frozen=True)
class GuessConf:
    """A best guess and its accumulated confidence; unset is the (empty, 0) start."""

    value: Any = None
    conf: Fraction = Fraction(0)
    unset: bool = True

    @classmethod
    def of(cls, value: Any, conf: Fraction) -> "GuessConf":
        return cls(value=value, conf=conf, unset=False)


UNSET = GuessConf()

# General-mode slots hold algorithm states; same shape.
StateGuess = GuessConf


def _check_confidence(c_hat: Fraction) -> None:
    if c_hat < 0 or c_hat > 1:
        raise UsageError(f"confidence {c_hat} outside [0, 1]")


def weighted_update(gc: GuessConf, q_hat: Any, c_hat: Fraction) -> GuessConf:
    """Add on agreement, subtract on disagreement, flip to q_hat when the total goes negative."""
    _check_confidence(c_hat)
    if gc.unset:
        return GuessConf.of(q_hat, c_hat)
    if q_hat == gc.value:
        return GuessConf.of(gc.value, gc.conf + c_hat)
    conf = gc.conf - c_hat
    if conf < 0:
        return GuessConf.of(q_hat, -conf)
    return GuessConf.of(gc.value, conf)


def snapshot_update(snapshot: GuessConf, q_hat: Any, c_hat: Fraction) -> GuessConf:
    """General-mode update computed from the chunk-start snapshot.

    An unset snapshot never matches q_hat, so it flips to (q_hat, c_hat) unless
    c_hat is zero, in which case the slot stays unset.
    """
    _check_confidence(c_hat)
    if not snapshot.unset and q_hat == snapshot.value:
        return GuessConf.of(snapshot.value, snapshot.conf + c_hat)
    conf = snapshot.conf - c_hat
    if conf < 0:
        return GuessConf.of(q_hat, -conf)
    return snapshot
