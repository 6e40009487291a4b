import argparse
import hashlib
import logging
from pathlib import Path

from errors import InfrastructureError
from parsers.param_file import parse_bits
from parsers.stream_container import write_stream_file
from services.encoder import build_stream_params, encode_stream
from views.options import CommandRouter, add_codec_arguments, echo_params, resolve_config


logger = logging.getLogger(__name__)


def configure(parser: argparse.ArgumentParser) -> None:
    add_codec_arguments(parser)
    source = parser.add_mutually_exclusive_group(required=True)
    source.add_argument("--x", help="message as a 0x hex literal or bit string")
    source.add_argument("--input", help="file holding the message as hex or bits")
    parser.add_argument("--out", required=True, help="stream container to write")


def read_message(args: argparse.Namespace, n: int) -> list[int]:
    if args.x is not None:
        return parse_bits(args.x, n)
    try:
        text = Path(args.input).read_text()
    except OSError as e:
        raise InfrastructureError(f"cannot read message file {args.input}: {e}") from e
    return parse_bits("".join(text.split()), n)


def cmd_encode(args: argparse.Namespace) -> int:
    cfg = resolve_config(args)
    sp = build_stream_params(cfg.codec)
    logger.info("encoding with %s", cfg.codec.model_dump_json())
    echo_params(sp)
    x = read_message(args, sp.n)
    stream = encode_stream(x, sp)
    write_stream_file(args.out, stream, sp)
    digest = hashlib.sha256(Path(args.out).read_bytes()).hexdigest()
    logger.info("wrote %d stream bits to %s", len(stream), args.out)
    print(f"bits={len(stream)}")
    print(f"sha256={digest}")
    return 0


router = CommandRouter("encode", "encode a message into a stream container", configure, cmd_encode)
