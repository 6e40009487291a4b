"""Sender side: enc(x) is T * (r * ell)^D back-to-back copies of LDC(x).

The encoder is deterministic; all randomness belongs to the decoder.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from codes.rm_ldc import LdcParams, ldc_encode, ldc_setup
from errors import ConfigurationError, UsageError
from models.params import CodecParams


logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class StreamParams:
    n: int
    r: int
    ell: int
    T: int
    D: int
    ldc: LdcParams
    mode: str
    eps_budget: Fraction

    @property
    def copies_per_pass(self) -> int:
        """M = (r * ell)^D copies consumed by one full-interval estimate."""
        return (self.r * self.ell) ** self.D

    @property
    def total_copies(self) -> int:
        return self.T * self.copies_per_pass

    @property
    def copy_len(self) -> int:
        return self.ldc.codeword_len

    @property
    def m_len(self) -> int:
        return self.total_copies * self.copy_len

    def describe(self) -> dict:
        return {
            "n": self.n,
            "r": self.r,
            "ell": self.ell,
            "T": self.T,
            "D": self.D,
            "mode": self.mode,
            "eps_budget": str(self.eps_budget),
            "q": self.ldc.q,
            "d": self.ldc.d,
            "nvars": self.ldc.nvars,
            "w": self.ldc.w,
            "reduction_poly": hex(self.ldc.field_spec.reduction_poly),
            "k": self.ldc.k,
            "eps_ldc": str(self.ldc.eps_ldc),
            "curve_degree": self.ldc.curve_degree,
            "N_inner": self.ldc.n_inner,
            "N": self.copy_len,
            "M": self.copies_per_pass,
            "m_len": self.m_len,
            "D_cap": self.ldc.d_cap,
        }


def log_base(n: int, r: int) -> int | None:
    """D with r^D = n, or None."""
    depth, power = 0, 1
    while power < n:
        power *= r
        depth += 1
    return depth if power == n else None


def build_stream_params(codec: CodecParams) -> StreamParams:
    depth = log_base(codec.n, codec.r)
    if depth is None:
        raise ConfigurationError(f"n={codec.n} must equal r^D for some integer D (r={codec.r})")
    ldc = ldc_setup(
        codec.n,
        codec.eps_ldc,
        d=codec.d,
        nvars=codec.nvars,
        q=codec.q,
        reduction_poly=codec.reduction_poly,
        k=codec.k,
        curve_degree=codec.curve_degree,
        waive_field_range=codec.waive_field_range,
    )
    sp = StreamParams(
        n=codec.n,
        r=codec.r,
        ell=codec.resolved_ell,
        T=codec.T,
        D=depth,
        ldc=ldc,
        mode=codec.mode,
        eps_budget=codec.eps_budget,
    )
    logger.debug("stream params resolved: %s", sp.describe())
    return sp


def copies_consumed(i: int, j: int, sp: StreamParams) -> int:
    """(r * ell)^{log_r(j - i)} LDC copies are read by the estimate over (i, j]."""
    depth = log_base(j - i, sp.r) if j > i else None
    if depth is None:
        raise UsageError(f"interval length j-i={j - i} is not a power of r={sp.r}")
    return (sp.r * sp.ell) ** depth


def m_len(sp: StreamParams) -> int:
    return sp.m_len


def encode_stream(x: Sequence[int], sp: StreamParams) -> np.ndarray:
    if len(x) != sp.n:
        raise UsageError(f"message must have {sp.n} bits, got {len(x)}")
    copy = ldc_encode(x, sp.ldc)
    stream = np.tile(copy, sp.total_copies)
    logger.info(
        "encoded %d bits into %d copies of %d bits (%d total)",
        sp.n, sp.total_copies, sp.copy_len, len(stream),
    )
    return stream


def copy_of(stream: np.ndarray, c: int, sp: StreamParams) -> np.ndarray:
    if not 0 <= c < sp.total_copies:
        raise UsageError(f"copy {c} outside [0, {sp.total_copies})")
    return stream[c * sp.copy_len : (c + 1) * sp.copy_len]
