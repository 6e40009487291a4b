import argparse
import logging
from pathlib import Path

from pydantic import ValidationError

from errors import ConfigurationError
from models.experiment import ExperimentConfig
from services.encoder import build_stream_params
from services.harness import run_experiment, write_csv, write_trials_csv
from views.options import CommandRouter, echo_params


logger = logging.getLogger(__name__)


def configure(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("config", help="experiment configuration (JSON)")
    parser.add_argument("--out", help="aggregate CSV path (default: stdout)")
    parser.add_argument("--jobs", type=int, help="worker processes for trials")


def load_experiment(path: str, jobs: int | None = None) -> ExperimentConfig:
    try:
        text = Path(path).read_text()
    except OSError as e:
        raise ConfigurationError(f"cannot read experiment config {path}: {e}") from e
    try:
        cfg = ExperimentConfig.model_validate_json(text)
        if jobs is not None:
            cfg = cfg.model_copy(update={"jobs": jobs})
    except ValidationError as e:
        raise ConfigurationError(f"invalid experiment config {path}: {e}") from e
    return cfg


def cmd_experiment(args: argparse.Namespace) -> int:
    cfg = load_experiment(args.config, args.jobs)
    logger.info(
        "experiment %s: %d channels x %d rhos x %d trials, %d jobs",
        args.config, len(cfg.channels), len(cfg.rhos), cfg.trials, cfg.jobs,
    )
    echo_params(build_stream_params(cfg.codec))
    print(f"decoder_seed={cfg.decoder_seed}")
    print(f"channel_seed={cfg.channel_seed}")
    result = run_experiment(cfg)
    text = write_csv(result.aggregates, args.out)
    if args.out is not None:
        logger.info("wrote %d aggregate rows to %s", len(result.aggregates), args.out)
    if cfg.per_trial_csv:
        write_trials_csv(result.records, cfg.per_trial_csv)
        logger.info("wrote %d trial rows to %s", len(result.records), cfg.per_trial_csv)
    if args.out is None:
        print(text, end="")
    return 0


router = CommandRouter("experiment", "run a Monte Carlo experiment and write CSV", configure, cmd_experiment)
