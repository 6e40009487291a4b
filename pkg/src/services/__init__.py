from services.channel import CorruptionPattern, apply_pattern, make_pattern, pattern_weight_fraction
from services.encoder import StreamParams, build_stream_params, encode_stream
from services.general_decoder import GeneralDecoder, est_a_general, run_general
from services.guess import GuessConf, weighted_update
from services.harness import TrialRecord, run_experiment, signed_confidence, write_csv
from services.instrumentation import ConfidenceAudit, SpaceProbe, space_probe
from services.leaf_decoder import DecodeOutcome
from services.linear_decoder import LinearDecoder, est_a_linear, run_linear

__all__ = [
    "ConfidenceAudit",
    "CorruptionPattern",
    "DecodeOutcome",
    "GeneralDecoder",
    "GuessConf",
    "LinearDecoder",
    "SpaceProbe",
    "StreamParams",
    "TrialRecord",
    "apply_pattern",
    "build_stream_params",
    "encode_stream",
    "est_a_general",
    "est_a_linear",
    "make_pattern",
    "pattern_weight_fraction",
    "run_experiment",
    "run_general",
    "run_linear",
    "signed_confidence",
    "space_probe",
    "weighted_update",
]
