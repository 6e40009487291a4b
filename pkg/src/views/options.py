"""Shared flags and parameter resolution for the subcommands."""
import argparse
from dataclasses import dataclass
from typing import Callable

from pydantic import ValidationError

from errors import ConfigurationError
from models.params import CliConfig, CodecParams
from parsers.param_file import parse_param_file
from services.encoder import StreamParams
from settings import DEFAULT_JOBS, DEFAULT_SEED


CODEC_FLAGS = (
    "n", "r", "ell", "T", "k", "mode", "eps_ldc", "eps_budget", "q", "d", "nvars",
    "reduction_poly", "curve_degree", "waive_field_range",
)


@dataclass(frozen=True)
class CommandRouter:
    """One subcommand: its flags and the handler returning the exit code."""

    name: str
    help: str
    configure: Callable[[argparse.ArgumentParser], None]
    handler: Callable[[argparse.Namespace], int]

    def include(self, subparsers) -> None:
        parser = subparsers.add_parser(self.name, help=self.help)
        self.configure(parser)
        parser.set_defaults(handler=self.handler)


def add_codec_arguments(parser: argparse.ArgumentParser) -> None:
    group = parser.add_argument_group("code parameters")
    group.add_argument("--config", help="parameter file of key=value lines")
    group.add_argument("--n", type=int)
    group.add_argument("--r", type=int)
    group.add_argument("--ell", type=int)
    group.add_argument("--T", dest="T", type=int)
    group.add_argument("--k", type=int, help="curves per local decode")
    group.add_argument("--eps", dest="eps_budget", help="corruption budget slack, e.g. 1/8")
    group.add_argument("--eps-ldc", dest="eps_ldc")
    group.add_argument("--mode", choices=("linear", "general"))
    group.add_argument("--q", type=int)
    group.add_argument("--d", type=int)
    group.add_argument("--nvars", type=int)
    group.add_argument("--reduction-poly", dest="reduction_poly", type=lambda s: int(s, 0))
    group.add_argument("--curve-degree", dest="curve_degree", type=int, choices=(1, 2))
    group.add_argument(
        "--waive-field-range", dest="waive_field_range", action="store_const", const=True
    )


def add_seed_argument(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--seed", type=int, help=f"decoder/channel seed (default {DEFAULT_SEED})")


def add_algorithm_arguments(parser: argparse.ArgumentParser) -> None:
    group = parser.add_argument_group("algorithm")
    group.add_argument(
        "--algorithm", choices=("parity", "dot", "index", "dfa", "sum", "count"), default="parity"
    )
    group.add_argument("--y", help="second input for dot/sum, hex or bit string")
    group.add_argument("--target", type=int, help="index-problem target")
    group.add_argument("--modulus", type=int, default=2, help="output field size for sum")


def resolve_config(args: argparse.Namespace) -> CliConfig:
    """Parameter file values, overridden by any flag given on the command line."""
    values = parse_param_file(args.config) if getattr(args, "config", None) else {}
    if "eps" in values:
        values.setdefault("eps_budget", values.pop("eps"))
    for key in CODEC_FLAGS + ("seed", "jobs", "out"):
        flag = getattr(args, key, None)
        if flag is not None:
            values[key] = flag

    seed = values.pop("seed", None)
    jobs = values.pop("jobs", DEFAULT_JOBS)
    out = values.pop("out", None)
    unknown = set(values) - set(CODEC_FLAGS)
    if unknown:
        raise ConfigurationError(f"unknown parameters: {', '.join(sorted(unknown))}")
    try:
        return CliConfig(
            command=args.command,
            codec=CodecParams(**values),
            seed=seed if seed is not None else DEFAULT_SEED,
            seed_was_default=seed is None,
            jobs=jobs,
            out=out,
        )
    except ValidationError as e:
        raise ConfigurationError(f"invalid parameters: {e}") from e


def echo_params(sp: StreamParams, seed: int | None = None, seed_was_default: bool = False) -> None:
    """Print the resolved parameters as key=value lines (reusable as a parameter file)."""
    print("# resolved parameters")
    for key, value in sp.describe().items():
        print(f"{key}={value}")
    if seed is not None:
        print(f"seed={seed}" + ("  # default" if seed_was_default else ""))
