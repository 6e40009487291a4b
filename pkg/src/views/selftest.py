import argparse
import logging

from errors import InfrastructureError
from services.selftest import run_selftest
from settings import DEFAULT_SEED
from views.options import CommandRouter, add_seed_argument


logger = logging.getLogger(__name__)


def configure(parser: argparse.ArgumentParser) -> None:
    add_seed_argument(parser)


def cmd_selftest(args: argparse.Namespace) -> int:
    seed = args.seed if args.seed is not None else DEFAULT_SEED
    logger.info("selftest with seed %d", seed)
    print(f"seed={seed}" + ("  # default" if args.seed is None else ""))
    results = run_selftest(seed)
    for result in results:
        status = "ok" if result.passed else "FAIL"
        print(f"{status:4} {result.name}: {result.detail} ({result.seconds:.2f}s)")
    failed = [r.name for r in results if not r.passed]
    if failed:
        logger.error("%d of %d selftest checks failed", len(failed), len(results))
        raise InfrastructureError(f"selftest failed: {', '.join(failed)}")
    return 0


router = CommandRouter("selftest", "run the exhaustive small-instance checks", configure, cmd_selftest)
