from models.experiment import AlgorithmSpec, ChannelSpec, ExperimentConfig
from models.params import CliConfig, CodecParams, Rational, parse_fraction

__all__ = [
    "AlgorithmSpec",
    "ChannelSpec",
    "CliConfig",
    "CodecParams",
    "ExperimentConfig",
    "Rational",
    "parse_fraction",
]
