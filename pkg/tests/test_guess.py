"""Confidence-weighted guess updates."""

from fractions import Fraction

import pytest


def test_first_evidence_sets_the_guess():
    """(unset, 0) updated with (A, 1/4) is (A, 1/4)."""
    from services.guess import UNSET, GuessConf, weighted_update

    assert weighted_update(UNSET, "A", Fraction(1, 4)) == GuessConf.of("A", Fraction(1, 4))


def test_disagreement_flips_when_negative():
    """(A, 1/3) updated with (B, 1/2) is (B, 1/6)."""
    from services.guess import GuessConf, weighted_update

    updated = weighted_update(GuessConf.of("A", Fraction(1, 3)), "B", Fraction(1, 2))
    assert updated == GuessConf.of("B", Fraction(1, 6))


def test_tie_keeps_the_incumbent():
    """(A, 1/4) updated with (B, 1/4) is (A, 0)."""
    from services.guess import GuessConf, weighted_update

    updated = weighted_update(GuessConf.of("A", Fraction(1, 4)), "B", Fraction(1, 4))
    assert updated == GuessConf.of("A", Fraction(0))


def test_agreement_adds():
    """Agreeing evidence accumulates."""
    from services.guess import GuessConf, weighted_update

    updated = weighted_update(GuessConf.of(3, Fraction(1, 4)), 3, Fraction(1, 8))
    assert updated == GuessConf.of(3, Fraction(3, 8))


@pytest.mark.parametrize("c_hat", [Fraction(-1, 4), Fraction(5, 4)])
def test_confidence_outside_unit_interval(c_hat):
    """Confidences must lie in [0, 1]."""
    from errors import UsageError
    from services.guess import UNSET, snapshot_update, weighted_update

    with pytest.raises(UsageError):
        weighted_update(UNSET, 1, c_hat)
    with pytest.raises(UsageError):
        snapshot_update(UNSET, 1, c_hat)


def test_snapshot_update_from_unset():
    """An unset snapshot never matches: positive evidence sets it, zero evidence leaves it unset."""
    from services.guess import UNSET, GuessConf, snapshot_update

    assert snapshot_update(UNSET, 5, Fraction(1, 4)) == GuessConf.of(5, Fraction(1, 4))
    assert snapshot_update(UNSET, 5, Fraction(0)).unset


def test_majority_is_order_invariant_with_distinct_totals():
    """Any order of the same evidence ends on the value with the largest total."""
    import itertools

    from services.guess import UNSET, weighted_update

    evidence = [("A", Fraction(1, 4)), ("B", Fraction(1, 8)), ("A", Fraction(1, 16)), ("B", Fraction(1, 8))]
    for order in itertools.permutations(evidence):
        gc = UNSET
        for value, conf in order:
            gc = weighted_update(gc, value, conf)
        assert gc.value == "A"
        assert gc.conf == Fraction(1, 16)
