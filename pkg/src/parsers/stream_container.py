"""Binary container for encoded streams.

Layout (little endian): a fixed header, a CRC-32 over header and payload, then
the bits packed eight to a byte, least significant bit first.
"""
import logging
import struct
import zlib
from fractions import Fraction
from pathlib import Path

import numpy as np
from pydantic import ValidationError

from errors import ConfigurationError, FormatError, InfrastructureError
from models.params import CodecParams
from services.encoder import StreamParams, build_stream_params


logger = logging.getLogger(__name__)

MAGIC = b"NRST"
FORMAT_VERSION = 1
MODES = ("linear", "general")

# magic, version, mode, curve_degree, waive_field_range,
# n, r, ell, T, q, d, nvars, w, reduction_poly, k,
# eps_ldc num/den, eps_budget num/den, payload bit count
HEADER = struct.Struct("<4sBBBB IIIIIIII I I IIII Q")
CHECKSUM = struct.Struct("<I")


def _pack_header(sp: StreamParams, bit_count: int) -> bytes:
    ldc = sp.ldc
    return HEADER.pack(
        MAGIC,
        FORMAT_VERSION,
        MODES.index(sp.mode),
        ldc.curve_degree,
        int(ldc.waive_field_range),
        sp.n,
        sp.r,
        sp.ell,
        sp.T,
        ldc.q,
        ldc.d,
        ldc.nvars,
        ldc.w,
        ldc.field_spec.reduction_poly,
        ldc.k,
        ldc.eps_ldc.numerator,
        ldc.eps_ldc.denominator,
        sp.eps_budget.numerator,
        sp.eps_budget.denominator,
        bit_count,
    )


def write_stream_file(path: str | Path, bits: np.ndarray, sp: StreamParams) -> None:
    bits = np.asarray(bits, dtype=np.uint8)
    header = _pack_header(sp, len(bits))
    payload = np.packbits(bits, bitorder="little").tobytes()
    checksum = zlib.crc32(header + payload)
    try:
        with open(path, "wb") as fh:
            fh.write(header)
            fh.write(CHECKSUM.pack(checksum))
            fh.write(payload)
    except OSError as e:
        raise InfrastructureError(f"cannot write stream file {path}: {e}") from e
    logger.info("wrote %d bits to %s", len(bits), path)


def read_stream_file(path: str | Path) -> tuple[StreamParams, np.ndarray]:
    try:
        data = Path(path).read_bytes()
    except OSError as e:
        raise InfrastructureError(f"cannot read stream file {path}: {e}") from e

    prefix = HEADER.size + CHECKSUM.size
    if len(data) < prefix:
        raise FormatError(f"{path}: truncated header ({len(data)} of {prefix} bytes)")
    fields = HEADER.unpack_from(data)
    if fields[0] != MAGIC:
        raise FormatError(f"{path}: bad magic {fields[0]!r}, expected {MAGIC!r}")
    (
        _, version, mode, curve_degree, waive,
        n, r, ell, T, q, d, nvars, w, reduction_poly, k,
        eps_num, eps_den, budget_num, budget_den, bit_count,
    ) = fields
    if version != FORMAT_VERSION:
        raise FormatError(f"{path}: unsupported format version {version}")
    if mode >= len(MODES):
        raise FormatError(f"{path}: unknown decoder mode {mode}")

    payload = data[prefix:]
    expected_bytes = (bit_count + 7) // 8
    if len(payload) < expected_bytes:
        raise FormatError(
            f"{path}: truncated payload, expected {bit_count} bits, found {8 * len(payload)}"
        )
    (checksum,) = CHECKSUM.unpack_from(data, HEADER.size)
    if zlib.crc32(data[: HEADER.size] + payload[:expected_bytes]) != checksum:
        raise FormatError(f"{path}: checksum mismatch")
    if eps_den == 0 or budget_den == 0:
        raise FormatError(f"{path}: zero denominator in header")

    try:
        codec = CodecParams(
            n=n,
            r=r,
            ell=ell,
            T=T,
            k=k,
            mode=MODES[mode],
            eps_ldc=Fraction(eps_num, eps_den),
            eps_budget=Fraction(budget_num, budget_den),
            q=q,
            d=d,
            nvars=nvars,
            reduction_poly=reduction_poly,
            curve_degree=curve_degree,
            waive_field_range=bool(waive),
        )
        sp = build_stream_params(codec)
    except (ValidationError, ConfigurationError) as e:
        raise FormatError(f"{path}: header parameters are invalid: {e}") from e
    if sp.ldc.w != w:
        raise FormatError(f"{path}: header width w={w} disagrees with q={q}")
    if sp.m_len != bit_count:
        raise FormatError(f"{path}: header promises {bit_count} bits but parameters give {sp.m_len}")
    bits = np.unpackbits(
        np.frombuffer(payload, dtype=np.uint8, count=expected_bytes),
        count=bit_count,
        bitorder="little",
    )
    logger.debug("read %d bits from %s", bit_count, path)
    return sp, bits
