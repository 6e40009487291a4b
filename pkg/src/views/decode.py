import argparse
import logging

from models.experiment import AlgorithmSpec
from parsers.stream_container import read_stream_file
from services.harness import decode, resolve_algorithm
from settings import DEFAULT_SEED
from views.options import CommandRouter, add_algorithm_arguments, add_seed_argument, echo_params


logger = logging.getLogger(__name__)


def configure(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--input", required=True, help="stream container to decode")
    add_algorithm_arguments(parser)
    add_seed_argument(parser)


def cmd_decode(args: argparse.Namespace) -> int:
    """Decode and report; the decoder cannot tell whether its answer is right, so this exits 0."""
    sp, stream = read_stream_file(args.input)
    seed = args.seed if args.seed is not None else DEFAULT_SEED
    echo_params(sp, seed, args.seed is None)
    spec = AlgorithmSpec(id=args.algorithm, y=args.y, target=args.target, modulus=args.modulus)
    algorithm = resolve_algorithm(spec, sp.n, sp.mode)
    logger.info("decoding %s in %s mode with seed %d", spec.model_dump_json(exclude_none=True), sp.mode, seed)
    outcome, _ = decode(algorithm, stream, sp, seed)
    if outcome.conf == 0:
        logger.warning("decoder returned zero confidence; the answer is a placeholder")
    print(f"result={outcome.value}")
    print(f"confidence={outcome.conf}")
    print("# metrics")
    print(f"bits_read={outcome.bits_read}")
    print(f"m_len={sp.m_len}")
    print(f"peak_registers={outcome.peak_registers}")
    print(f"peak_collected_bits={outcome.peak_collected_bits}")
    print(f"leaves={outcome.leaves}")
    return 0


router = CommandRouter("decode", "decode a stream container with an algorithm", configure, cmd_decode)
