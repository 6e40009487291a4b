"""Monte Carlo acceptance at the desk LDC (q=16, d=4, nvars=3).

The recursion is kept shallow so a run takes minutes, not days; rho = 0.15
needs eps_budget <= 1/10 to stay inside the corruption budget. Full desk
runs live in experiments/*.json.
"""

import random
from fractions import Fraction

import pytest


DESK_LDC = dict(k=32, q=16, d=4, nvars=3, eps_budget="1/10")
CHANNELS = ("random", "prefix_burst", "periodic", "symbol_targeted", "copy_targeted")


def _experiment(codec, algorithm, kinds, rhos, trials):
    from models.experiment import AlgorithmSpec, ChannelSpec, ExperimentConfig
    from models.params import CodecParams
    from services.harness import run_experiment

    cfg = ExperimentConfig(
        codec=CodecParams(**{**DESK_LDC, **codec}),
        algorithm=AlgorithmSpec(**algorithm),
        channels=[ChannelSpec(kind=kind) for kind in kinds],
        rhos=rhos,
        trials=trials,
    )
    return run_experiment(cfg)


def _assert_holds(result, min_successes):
    for row in result.aggregates:
        assert row.audit_failures == 0, row
        assert row.successes >= min_successes, row


@pytest.mark.slow
def test_ldc_survives_ten_percent_noise():
    """A single desk codeword with 10% of its bits flipped decodes right in >= 99% of 300 tries."""
    import numpy as np

    from codes.rm_ldc import ldc_encode, ldc_setup, local_decode_with_confidence, plan_queries

    params = ldc_setup(16, Fraction(1, 2), d=4, nvars=3, q=16, k=32)
    rng = random.Random(2024)
    noise = np.random.default_rng(2024)
    correct = 0
    for _ in range(300):
        x = [rng.randrange(2) for _ in range(16)]
        word = ldc_encode(x, params) ^ (noise.random(params.codeword_len) < 0.1).astype(np.uint8)
        i = rng.randrange(1, 17)
        curves, positions = plan_queries(i, params, rng)
        verdict = local_decode_with_confidence(i, {p: int(word[p]) for p in positions}, curves, params)
        correct += verdict.bit == x[i - 1]
    assert correct >= 297


@pytest.mark.slow
def test_linear_pipeline_on_every_channel():
    """Inner product through the linear decoder: exact at rho = 0, robust at rho = 0.15."""
    codec = dict(n=2, r=2, ell=8, T=1)
    algorithm = dict(id="dot", x="10", y="11")
    _assert_holds(_experiment(codec, algorithm, CHANNELS, [0], trials=2), 2)
    _assert_holds(_experiment(codec, algorithm, CHANNELS, [Fraction(3, 20)], trials=10), 9)


@pytest.mark.slow
@pytest.mark.parametrize(
    "algorithm",
    [dict(id="dfa", x="0111"), dict(id="index", x="0110", target=0)],
    ids=["dfa", "index"],
)
def test_general_pipeline_on_every_channel(algorithm):
    """A sequential automaton and the index problem through the general decoder."""
    codec = dict(n=4, r=4, ell=4, T=1, mode="general")
    _assert_holds(_experiment(codec, algorithm, CHANNELS, [0], trials=2), 2)
    _assert_holds(_experiment(codec, algorithm, CHANNELS, [Fraction(3, 20)], trials=10), 9)


@pytest.mark.slow
def test_linear_and_general_pipelines_agree():
    """Paired seeds at rho = 0.10: success counts within 3 of 100."""
    codec = dict(n=2, r=2, ell=2, T=1, k=16)
    algorithm = dict(id="dot", x="11", y="11")
    linear = _experiment(codec, algorithm, ["random"], [Fraction(1, 10)], trials=100)
    general = _experiment({**codec, "mode": "general"}, algorithm, ["random"], [Fraction(1, 10)], trials=100)
    (linear_row,) = linear.aggregates
    (general_row,) = general.aggregates
    assert linear_row.trials == general_row.trials == 100
    assert abs(linear_row.successes - general_row.successes) <= 3
