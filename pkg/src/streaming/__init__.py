from streaming.algorithms import (
    LinearStreamingAlgorithm,
    StreamingAlgorithm,
    build_algorithm,
    lift_linear,
    partial_sum,
    run_noiseless,
)
from streaming.bitstream import BitStream, stream_read, stream_read_selected

__all__ = [
    "BitStream",
    "LinearStreamingAlgorithm",
    "StreamingAlgorithm",
    "build_algorithm",
    "lift_linear",
    "partial_sum",
    "run_noiseless",
    "stream_read",
    "stream_read_selected",
]
