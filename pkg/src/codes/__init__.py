from codes.field import FieldElem, FieldSpec, GaloisField, enumerate_field, get_field
from codes.inner_code import InnerCodeSpec, inner_decode, inner_decode_all, inner_encode
from codes.rm_ldc import (
    DecodeVerdict,
    LdcParams,
    ldc_encode,
    ldc_setup,
    local_decode_with_confidence,
    plan_queries,
)
from codes.rs_decoding import EvalPoint, Poly, berlekamp_welch, gmd_decode

__all__ = [
    "DecodeVerdict",
    "EvalPoint",
    "FieldElem",
    "FieldSpec",
    "GaloisField",
    "InnerCodeSpec",
    "LdcParams",
    "Poly",
    "berlekamp_welch",
    "enumerate_field",
    "get_field",
    "gmd_decode",
    "inner_decode",
    "inner_decode_all",
    "inner_encode",
    "ldc_encode",
    "ldc_setup",
    "local_decode_with_confidence",
    "plan_queries",
]
