import argparse
import logging
import sys

from pydantic import ValidationError

from errors import ConfigurationError, StreamCodingError
from settings import LOG_LEVEL
from views import ROUTERS


logger = logging.getLogger(__name__)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="noise-resilient-streaming",
        description="Encode, corrupt and decode noise-resilient streams.",
    )
    parser.add_argument("--log-level", default=LOG_LEVEL)
    subparsers = parser.add_subparsers(dest="command", required=True)
    for router in ROUTERS:
        router.include(subparsers)
    return parser


def fail(error: StreamCodingError) -> int:
    print(f"error: {error.detail}", file=sys.stderr)
    return error.exit_code


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=args.log_level.upper(),
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )
    try:
        return args.handler(args)
    except ValidationError as e:
        return fail(ConfigurationError(str(e)))
    except StreamCodingError as e:
        logger.debug("command %s failed", args.command, exc_info=True)
        return fail(e)


if __name__ == "__main__":
    sys.exit(main())
