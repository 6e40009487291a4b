import argparse
import logging

from services.encoder import build_stream_params
from views.options import CommandRouter, add_codec_arguments, echo_params, resolve_config


logger = logging.getLogger(__name__)


def configure(parser: argparse.ArgumentParser) -> None:
    add_codec_arguments(parser)


def cmd_params(args: argparse.Namespace) -> int:
    cfg = resolve_config(args)
    sp = build_stream_params(cfg.codec)
    logger.info("resolved %s", cfg.codec.model_dump_json())
    echo_params(sp)
    return 0


router = CommandRouter("params", "resolve and print stream and LDC parameters", configure, cmd_params)
