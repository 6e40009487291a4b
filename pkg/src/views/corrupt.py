import argparse
import logging

from models.params import parse_fraction
from parsers.pattern_file import write_pattern_file
from parsers.stream_container import read_stream_file, write_stream_file
from services.channel import PATTERN_KINDS, apply_pattern, make_pattern, pattern_weight_fraction
from settings import DEFAULT_SEED
from views.options import CommandRouter, add_seed_argument, echo_params


logger = logging.getLogger(__name__)


def configure(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--input", required=True, help="stream container to corrupt")
    parser.add_argument("--out", required=True, help="corrupted stream container to write")
    parser.add_argument("--pattern-out", help="pattern file (default: <out>.pattern.json)")
    parser.add_argument("--channel", choices=PATTERN_KINDS, default="random")
    parser.add_argument("--rho", default="0", help="corruption rate, e.g. 3/20 or 0.15")
    parser.add_argument("--copies", help="comma-separated copy indices for copy_targeted")
    parser.add_argument("--symbol-index", type=int, help="message index attacked by symbol_targeted")
    parser.add_argument("--no-budget-check", action="store_true")
    add_seed_argument(parser)


def cmd_corrupt(args: argparse.Namespace) -> int:
    sp, stream = read_stream_file(args.input)
    seed = args.seed if args.seed is not None else DEFAULT_SEED
    echo_params(sp, seed, args.seed is None)
    copies = [int(c) for c in args.copies.split(",")] if args.copies else None
    if args.no_budget_check:
        logger.warning("budget check disabled for %s at rho=%s", args.channel, args.rho)
    pattern = make_pattern(
        args.channel,
        parse_fraction(args.rho),
        sp.m_len,
        seed,
        sp=sp,
        copies=copies,
        target_index=args.symbol_index,
        budget_check=not args.no_budget_check,
    )
    corrupted = apply_pattern(stream, pattern)
    pattern_path = args.pattern_out or f"{args.out}.pattern.json"
    write_stream_file(args.out, corrupted, sp)
    write_pattern_file(pattern_path, pattern)
    fraction = pattern_weight_fraction(pattern)
    logger.info(
        "%s channel flipped %d bits (%s); wrote %s and %s",
        args.channel, pattern.weight, fraction, args.out, pattern_path,
    )
    print(f"flips={pattern.weight}")
    print(f"fraction={fraction}")
    return 0


router = CommandRouter("corrupt", "flip bits of a stream container", configure, cmd_corrupt)
