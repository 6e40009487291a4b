"""Monte Carlo experiments: encode once, corrupt, decode with fresh seeds, aggregate."""
import csv
import io
import logging
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from fractions import Fraction
from functools import lru_cache
from pathlib import Path
from typing import Any, Optional, Sequence

import numpy as np

from errors import ConfigurationError, InfrastructureError
from models.experiment import AlgorithmSpec, ExperimentConfig
from parsers.param_file import parse_bits
from services.channel import apply_pattern, make_pattern
from services.encoder import StreamParams, build_stream_params, encode_stream
from services.general_decoder import run_general
from services.instrumentation import ConfidenceAudit, SpaceProbe, space_probe
from services.linear_decoder import run_linear
from streaming.algorithms import LINEAR_IDS, build_algorithm, run_noiseless
from streaming.bitstream import BitStream


logger = logging.getLogger(__name__)

CSV_COLUMNS = (
    "channel",
    "rho_num",
    "rho_den",
    "trials",
    "successes",
    "mean_conf_num",
    "mean_conf_den",
    "peak_registers_max",
    "bits_read",
)

TRIAL_COLUMNS = (
    "channel",
    "rho",
    "trial",
    "success",
    "conf",
    "signed_conf",
    "peak_registers",
    "peak_collected_bits",
    "bits_read",
    "wall_time",
    "one_pass",
    "denominator_violations",
    "error",
)


@dataclass(frozen=True)
class TrialRecord:
    channel: str
    rho: Fraction
    trial: int
    success: bool
    conf: Fraction
    signed_conf: Fraction
    peak_registers: int
    peak_collected_bits: int
    bits_read: int
    wall_time: float
    one_pass: bool = True
    denominator_violations: int = 0
    error: Optional[str] = None

    @property
    def audit_failed(self) -> bool:
        return not self.one_pass or self.denominator_violations > 0


@dataclass(frozen=True)
class AggregateRow:
    channel: str
    rho: Fraction
    trials: int
    successes: int
    mean_conf: Fraction
    peak_registers_max: int
    bits_read: int
    audit_failures: int = 0

    @property
    def success_rate(self) -> float:
        return self.successes / self.trials if self.trials else 0.0

    def as_csv_row(self) -> dict[str, Any]:
        return {
            "channel": self.channel,
            "rho_num": self.rho.numerator,
            "rho_den": self.rho.denominator,
            "trials": self.trials,
            "successes": self.successes,
            "mean_conf_num": self.mean_conf.numerator,
            "mean_conf_den": self.mean_conf.denominator,
            "peak_registers_max": self.peak_registers_max,
            "bits_read": self.bits_read,
        }


@dataclass(frozen=True)
class ExperimentResult:
    records: list[TrialRecord]
    aggregates: list[AggregateRow]


@dataclass(frozen=True)
class TrialJob:
    config_json: str
    channel_index: int
    rho: Fraction
    trial: int


def signed_confidence(value: Any, truth: Any, conf: Fraction) -> Fraction:
    return conf if value == truth else -conf


def resolve_algorithm(spec: AlgorithmSpec, n: int, mode: str):
    if mode == "linear" and spec.id not in LINEAR_IDS:
        raise ConfigurationError(f"algorithm {spec.id!r} is not linear; use mode=general")
    y = parse_bits(spec.y, n) if spec.y is not None else None
    return build_algorithm(
        spec.id, n, y=y, target=spec.target, modulus=spec.modulus, linear=mode == "linear"
    )


def decode(
    algorithm,
    bits: np.ndarray,
    sp: StreamParams,
    seed: int,
    probe: SpaceProbe | None = None,
    audit: ConfidenceAudit | None = None,
    instrumented: bool = False,
):
    """Decode one stream with a fresh decoder rng; returns (outcome, stream)."""
    bs = BitStream(bits, instrumented=instrumented)
    rng = random.Random(seed)
    runner = run_linear if sp.mode == "linear" else run_general
    outcome = runner(algorithm, bs, sp, rng, probe=probe, audit=audit)
    return outcome, bs


@dataclass(frozen=True)
class _Prepared:
    cfg: ExperimentConfig
    sp: StreamParams
    algorithm: Any
    stream: np.ndarray
    truth: Any


@lru_cache(maxsize=4)
def _prepare(config_json: str) -> _Prepared:
    """Encode once per configuration (and once per worker process)."""
    cfg = ExperimentConfig.model_validate_json(config_json)
    sp = build_stream_params(cfg.codec)
    if cfg.algorithm.x is None:
        raise ConfigurationError("experiment algorithm needs the message x")
    x = parse_bits(cfg.algorithm.x, sp.n)
    algorithm = resolve_algorithm(cfg.algorithm, sp.n, sp.mode)
    stream = encode_stream(x, sp)
    truth = run_noiseless(algorithm, x)
    return _Prepared(cfg=cfg, sp=sp, algorithm=algorithm, stream=stream, truth=truth)


def run_trial(job: TrialJob) -> TrialRecord:
    prepared = _prepare(job.config_json)
    cfg, sp = prepared.cfg, prepared.sp
    channel = cfg.channels[job.channel_index]
    started = time.perf_counter()
    try:
        pattern = make_pattern(
            channel.kind,
            job.rho,
            sp.m_len,
            cfg.channel_seed + job.trial * cfg.channel_stride,
            sp=sp,
            copies=channel.copies,
            target_index=channel.target_index,
            budget_check=channel.budget_check and not cfg.allow_over_budget,
        )
        corrupted = apply_pattern(prepared.stream, pattern)
        probe = space_probe()
        audit = ConfidenceAudit()
        outcome, bs = decode(
            prepared.algorithm,
            corrupted,
            sp,
            cfg.decoder_seed + job.trial * cfg.decoder_stride,
            probe=probe,
            audit=audit,
            instrumented=True,
        )
        if outcome.bits_read != sp.m_len:
            raise InfrastructureError(f"decoder read {outcome.bits_read} of {sp.m_len} bits")
    except InfrastructureError as e:
        logger.warning("trial %d (%s, rho=%s) aborted: %s", job.trial, channel.kind, job.rho, e.detail)
        return TrialRecord(
            channel=channel.kind,
            rho=job.rho,
            trial=job.trial,
            success=False,
            conf=Fraction(0),
            signed_conf=Fraction(0),
            peak_registers=0,
            peak_collected_bits=0,
            bits_read=0,
            wall_time=time.perf_counter() - started,
            error=e.detail,
        )
    one_pass = bs.is_one_pass()
    violations = audit.violations(sp.ell, sp.ldc.conf_denominator)
    if not one_pass or violations:
        logger.error(
            "trial %d (%s, rho=%s) failed its audit: one_pass=%s, %d confidences off the denominator bound",
            job.trial, channel.kind, job.rho, one_pass, len(violations),
        )
    success = outcome.value == prepared.truth
    return TrialRecord(
        channel=channel.kind,
        rho=job.rho,
        trial=job.trial,
        success=success,
        conf=outcome.conf,
        signed_conf=signed_confidence(outcome.value, prepared.truth, outcome.conf),
        peak_registers=outcome.peak_registers,
        peak_collected_bits=outcome.peak_collected_bits,
        bits_read=outcome.bits_read,
        wall_time=time.perf_counter() - started,
        one_pass=one_pass,
        denominator_violations=len(violations),
    )


def aggregate(records: Sequence[TrialRecord]) -> list[AggregateRow]:
    """One row per (channel, rho) in first-seen order; aborted trials are left out."""
    groups: dict[tuple[str, Fraction], list[TrialRecord]] = {}
    for record in records:
        groups.setdefault((record.channel, record.rho), []).append(record)
    rows = []
    for (channel, rho), group in groups.items():
        done = [r for r in group if r.error is None]
        mean_conf = sum((r.conf for r in done), Fraction(0)) / len(done) if done else Fraction(0)
        rows.append(
            AggregateRow(
                channel=channel,
                rho=rho,
                trials=len(done),
                successes=sum(r.success for r in done),
                mean_conf=mean_conf,
                peak_registers_max=max((r.peak_registers for r in done), default=0),
                bits_read=max((r.bits_read for r in done), default=0),
                audit_failures=sum(r.audit_failed for r in done),
            )
        )
    return rows


def run_experiment(cfg: ExperimentConfig) -> ExperimentResult:
    config_json = cfg.model_dump_json()
    jobs = [
        TrialJob(config_json, c, rho, trial)
        for c in range(len(cfg.channels))
        for rho in cfg.rhos
        for trial in range(cfg.trials)
    ]
    logger.info("running %d trials with %d worker(s)", len(jobs), cfg.jobs)
    if cfg.jobs > 1:
        with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
            records = list(pool.map(run_trial, jobs))
    else:
        records = [run_trial(job) for job in jobs]
    aborted = sum(r.error is not None for r in records)
    if aborted:
        logger.warning("%d of %d trials aborted on infrastructure errors", aborted, len(records))
    audit_failures = sum(r.error is None and r.audit_failed for r in records)
    if audit_failures:
        logger.error("%d of %d trials broke the one-pass or denominator audit", audit_failures, len(records))
    return ExperimentResult(records=records, aggregates=aggregate(records))


def _write_rows(columns: Sequence[str], rows: Sequence[dict], out: str | Path | None) -> str:
    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=list(columns), lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    text = buffer.getvalue()
    if out is not None:
        try:
            Path(out).write_text(text)
        except OSError as e:
            raise InfrastructureError(f"cannot write {out}: {e}") from e
    return text


def write_csv(rows: Sequence[AggregateRow], out: str | Path | None = None) -> str:
    return _write_rows(CSV_COLUMNS, [row.as_csv_row() for row in rows], out)


def write_trials_csv(records: Sequence[TrialRecord], out: str | Path | None = None) -> str:
    rows = []
    for record in records:
        row = asdict(record)
        row["rho"] = str(record.rho)
        row["conf"] = str(record.conf)
        row["signed_conf"] = str(record.signed_conf)
        row["error"] = record.error or ""
        rows.append(row)
    return _write_rows(TRIAL_COLUMNS, rows, out)
