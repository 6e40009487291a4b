"""Exhaustive small-instance checks run by `main.py selftest`."""
import itertools
import logging
import random
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

import numpy as np

from codes.field import FieldSpec, clmul_reduce, get_field
from codes.inner_code import InnerCodeSpec, codeword_table
from codes.rm_ldc import ldc_encode, ldc_setup, local_decode_with_confidence, plan_queries
from codes.rs_decoding import EvalPoint, Poly, berlekamp_welch, poly_eval
from services.encoder import StreamParams
from services.instrumentation import ConfidenceAudit
from services.linear_decoder import run_linear
from streaming.algorithms import linear_parity
from streaming.bitstream import BitStream


logger = logging.getLogger(__name__)

FIELD_WIDTHS = range(2, 9)
INNER_WIDTHS = (3, 4, 5, 6)
BW_TRIALS = 200


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str
    seconds: float


def check_field_arithmetic(rng: random.Random) -> str:
    for w in FIELD_WIDTHS:
        spec = FieldSpec.default(w)
        field = get_field(spec)
        elements = field.gf(np.arange(field.q))
        oracle = (elements[:, None] * elements[None, :]).view(np.ndarray)
        for a, b in itertools.product(range(field.q), repeat=2):
            expected = clmul_reduce(a, b, spec.reduction_poly, w)
            got = field.mul(a, b)
            if got != expected or got != int(oracle[a, b]):
                raise AssertionError(f"GF(2^{w}): {a}*{b} = {got}, expected {expected}")
        for a in range(1, field.q):
            if field.mul(a, field.inv(a)) != 1:
                raise AssertionError(f"GF(2^{w}): inverse of {a} is wrong")
        for _ in range(200):
            a, b, c = (rng.randrange(field.q) for _ in range(3))
            if field.mul(a, b ^ c) != field.mul(a, b) ^ field.mul(a, c):
                raise AssertionError(f"GF(2^{w}): distributivity fails at {a},{b},{c}")
    return f"widths {FIELD_WIDTHS.start}..{FIELD_WIDTHS.stop - 1} match carry-less reference"


def check_inner_distance(rng: random.Random) -> str:
    for w in INNER_WIDTHS:
        spec = InnerCodeSpec(msg_bits=w)
        words = codeword_table(spec)
        distance = min((a ^ b).bit_count() for a, b in itertools.combinations(words, 2))
        if distance != spec.block_len // 2:
            raise AssertionError(f"w={w}: minimum distance {distance}, expected {spec.block_len // 2}")
    return f"minimum distance N_inner/2 for w in {INNER_WIDTHS}"


def check_berlekamp_welch(rng: random.Random) -> str:
    field = get_field(FieldSpec.default(4))
    deg_bound, alphas = 6, list(range(1, 16))
    radius = (len(alphas) - deg_bound - 1) // 2
    for _ in range(BW_TRIALS):
        poly = Poly.from_coeffs([rng.randrange(16) for _ in range(deg_bound + 1)], field)
        values = [poly_eval(poly, alpha) for alpha in alphas]
        for position in rng.sample(range(len(alphas)), radius):
            values[position] ^= rng.randrange(1, 16)
        found = berlekamp_welch(field, [EvalPoint(a, v) for a, v in zip(alphas, values)], deg_bound)
        if found is None or found.coeffs != poly.coeffs:
            raise AssertionError(f"planted {radius} errors were not corrected")
    return f"{BW_TRIALS} planted trials at radius {radius}"


def _tiny_stream_params() -> StreamParams:
    ldc = ldc_setup(4, Fraction(1, 2), d=2, nvars=3, q=8, k=4)
    return StreamParams(n=4, r=2, ell=2, T=1, D=2, ldc=ldc, mode="linear", eps_budget=Fraction(1, 8))


def check_local_decoding(rng: random.Random) -> str:
    sp = _tiny_stream_params()
    for x in itertools.product((0, 1), repeat=sp.n):
        codeword = ldc_encode(x, sp.ldc)
        for i in range(1, sp.n + 1):
            curves, positions = plan_queries(i, sp.ldc, rng)
            verdict = local_decode_with_confidence(
                i, {p: int(codeword[p]) for p in positions}, curves, sp.ldc
            )
            if verdict.bit != x[i - 1] or verdict.conf != Fraction(1, 4):
                raise AssertionError(f"x={x} i={i}: got ({verdict.bit}, {verdict.conf})")
    return "every 4-bit message decodes with confidence 1/4"


def check_confidence_denominators(rng: random.Random) -> str:
    sp = _tiny_stream_params()
    x = [1, 0, 1, 1]
    stream = ldc_encode(x, sp.ldc)
    bits = [int(b) for b in stream] * sp.total_copies
    for position in rng.sample(range(len(bits)), len(bits) // 20):
        bits[position] ^= 1
    audit = ConfidenceAudit()
    run_linear(linear_parity(sp.n), BitStream(bits), sp, rng, audit=audit)
    bad = audit.violations(sp.ell, sp.ldc.conf_denominator)
    if bad:
        raise AssertionError(f"confidences with unexpected denominators: {bad[:3]}")
    return f"{len(audit.records)} confidences audited"


CHECKS: tuple[tuple[str, Callable[[random.Random], str]], ...] = (
    ("field arithmetic", check_field_arithmetic),
    ("inner code distance", check_inner_distance),
    ("berlekamp-welch radius", check_berlekamp_welch),
    ("local decoding", check_local_decoding),
    ("confidence denominators", check_confidence_denominators),
)


def run_selftest(seed: int) -> list[CheckResult]:
    results = []
    for name, check in CHECKS:
        started = time.perf_counter()
        try:
            detail, passed = check(random.Random(seed)), True
        except AssertionError as e:
            detail, passed = str(e), False
        elapsed = time.perf_counter() - started
        logger.info("selftest %s: %s (%.2fs)", name, "ok" if passed else "FAILED", elapsed)
        results.append(CheckResult(name=name, passed=passed, detail=detail, seconds=elapsed))
    return results
