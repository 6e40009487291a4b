"""Locally decodable code: systematic Reed-Muller outer code concatenated with RM(1, w-1).

Codeword bits are indexed (v, t): outer symbol index major, inner bit minor.
Outer symbols are ordered lexicographically over F^nvars with the first
coordinate most significant, each coordinate in `enumerate_field` order.
"""
import itertools
import logging
import random
import dataclasses
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Mapping, Sequence

import numpy as np

from codes.field import FieldSpec, GaloisField, get_field
from codes.inner_code import InnerCodeSpec, codeword_bits
from codes.rs_decoding import Poly, gmd_decode_ints, poly_add, poly_mul
from errors import ConfigurationError, UsageError
from settings import MAX_FIELD_WIDTH


logger = logging.getLogger(__name__)

MAX_DEGREE = 64
MAX_NVARS = 16
DEFAULT_K = 32


@dataclass(eq=False)
class LdcParams:
    n: int
    nvars: int
    d: int
    field_spec: FieldSpec
    k: int
    eps_ldc: Fraction
    curve_degree: int = 2
    waive_field_range: bool = False

    field: GaloisField = dataclasses.field(init=False, repr=False)
    inner: InnerCodeSpec = dataclasses.field(init=False)
    grid: list[tuple[int, ...]] = dataclasses.field(init=False, repr=False)
    _generator: object = dataclasses.field(init=False, default=None, repr=False)
    _interpolator: object = dataclasses.field(init=False, default=None, repr=False)

    def __post_init__(self):
        self.field = get_field(self.field_spec)
        self.inner = InnerCodeSpec(msg_bits=self.field_spec.w)
        self.grid = simplex_grid(self.d, self.nvars)

    @property
    def q(self) -> int:
        return self.field.q

    @property
    def w(self) -> int:
        return self.field.w

    @property
    def n_outer(self) -> int:
        return self.q**self.nvars

    @property
    def n_inner(self) -> int:
        return self.inner.block_len

    @property
    def codeword_len(self) -> int:
        """N, the length in bits of one LDC copy."""
        return self.n_outer * self.n_inner

    @property
    def capacity(self) -> int:
        return comb(self.nvars + self.d - 1, self.nvars)

    @property
    def deg_bound(self) -> int:
        """Degree of the message polynomial restricted to a query curve."""
        return self.curve_degree * (self.d - 1)

    @property
    def d_cap(self) -> int:
        """Largest accepted bit distance of a curve decode."""
        return (self.q - 1 - self.deg_bound) * self.n_inner // 4

    @property
    def queries(self) -> int:
        """Q = k * (q - 1) outer-symbol queries per local decode."""
        return self.k * (self.q - 1)

    @property
    def conf_denominator(self) -> int:
        return 4 * self.k * (self.q - 1) * self.n_inner

    def interpolator(self):
        """Inverse of the grid Vandermonde matrix over GF(q), monomials in grid order."""
        if self._interpolator is None:
            gf = self.field.gf
            vander = gf(
                [[_monomial(point, exps, self.field) for exps in self.grid] for point in self.grid]
            )
            self._interpolator = np.linalg.inv(vander)
        return self._interpolator

    def generator(self):
        """Systematic generator: (q^nvars, n) matrix mapping message bits to outer symbols."""
        if self._generator is None:
            gf = self.field.gf
            points = gf(np.array(list(itertools.product(range(self.q), repeat=self.nvars))))
            evaluation = gf.Zeros((self.n_outer, len(self.grid)))
            for col, exps in enumerate(self.grid):
                column = gf.Ones(self.n_outer)
                for j, e in enumerate(exps):
                    if e:
                        column = column * points[:, j] ** e
                evaluation[:, col] = column
            self._generator = evaluation @ self.interpolator()[:, : self.n]
            logger.debug(
                "LDC generator built: n=%d d=%d nvars=%d q=%d N=%d",
                self.n, self.d, self.nvars, self.q, self.codeword_len,
            )
        return self._generator


@dataclass(frozen=True)
class Curve:
    v0: tuple[int, ...]
    v1: tuple[int, ...]
    v2: tuple[int, ...]

    def at(self, lam: int, gf: GaloisField) -> tuple[int, ...]:
        lam2 = gf.mul(lam, lam)
        return tuple(
            a ^ gf.mul(b, lam) ^ gf.mul(c, lam2) for a, b, c in zip(self.v0, self.v1, self.v2)
        )


@dataclass(frozen=True)
class CurveDiagnostics:
    delta: int
    delta_h: int
    bw_found: bool
    h0: int


@dataclass(frozen=True)
class DecodeVerdict:
    bit: int
    conf: Fraction
    diagnostics: tuple[CurveDiagnostics, ...]


def simplex_grid(d: int, nvars: int) -> list[tuple[int, ...]]:
    """Exponent/coordinate tuples with entries in [0, d) summing to at most d - 1."""
    return [t for t in itertools.product(range(d), repeat=nvars) if sum(t) <= d - 1]


def _monomial(point: Sequence[int], exps: Sequence[int], gf: GaloisField) -> int:
    value = 1
    for coord, e in zip(point, exps):
        value = gf.mul(value, gf.pow(coord, e))
    return value


def _field_range_reason(d: int, q: int, eps_ldc: Fraction) -> str | None:
    low, high = 2 * d / eps_ldc, 4 * d / eps_ldc
    if not low <= q <= high:
        return f"q={q} outside [2d/eps, 4d/eps] = [{low}, {high}] for d={d}, eps={eps_ldc}"
    return None


def _invalid_reason(
    n: int, d: int, nvars: int, w: int, eps_ldc: Fraction, waive: bool, curve_degree: int
) -> str | None:
    if d < 2:
        return f"degree parameter d={d} is degenerate; d >= 2 required"
    if nvars < 1:
        return f"nvars={nvars} must be positive"
    if not 2 <= w <= MAX_FIELD_WIDTH:
        return f"field width w={w} outside [2, {MAX_FIELD_WIDTH}]"
    q = 1 << w
    capacity = comb(nvars + d - 1, nvars)
    if capacity < n:
        return f"grid capacity C({nvars + d - 1},{nvars})={capacity} < n={n}"
    if q - 1 <= curve_degree * (d - 1) + 2:
        return f"q-1={q - 1} leaves no decoding slack over curve degree {curve_degree * (d - 1)}"
    if not waive:
        return _field_range_reason(d, q, eps_ldc)
    return None


def _smallest_nvars(n: int, d: int) -> int | None:
    for nvars in range(1, MAX_NVARS + 1):
        if comb(nvars + d - 1, nvars) >= n:
            return nvars
    return None


def ldc_setup(
    n: int,
    eps_ldc: Fraction,
    *,
    d: int | None = None,
    nvars: int | None = None,
    q: int | None = None,
    reduction_poly: int | None = None,
    k: int = DEFAULT_K,
    curve_degree: int = 2,
    waive_field_range: bool = False,
) -> LdcParams:
    """Pick the shortest valid (d, nvars, q) for n message bits, honouring overrides.

    Shortest means the fewest codeword bits q^nvars * q/2, so without overrides
    small messages favour one variable and a high degree: n=16 at eps_ldc=1/2
    resolves to d=16, nvars=1, q=64 (N=2048). The desk code d=4, nvars=3, q=16
    (N=32768) is never chosen automatically; the experiment configs pin it.
    """
    if n < 1:
        raise ConfigurationError(f"message length n={n} must be positive")
    if k < 1:
        raise ConfigurationError(f"curve count k={k} must be positive")
    if curve_degree not in (1, 2):
        raise ConfigurationError(f"curve degree {curve_degree} not in (1, 2)")
    eps_ldc = Fraction(eps_ldc)
    if not 0 < eps_ldc <= 1:
        raise ConfigurationError(f"eps_ldc={eps_ldc} outside (0, 1]")
    if q is not None and (q < 4 or q & (q - 1)):
        raise ConfigurationError(f"q={q} is not a power of two >= 4")

    best = None
    last_reason = None
    for cand_d in [d] if d is not None else range(2, MAX_DEGREE + 1):
        cand_nvars = nvars if nvars is not None else _smallest_nvars(n, cand_d)
        if cand_nvars is None:
            last_reason = f"no nvars <= {MAX_NVARS} gives grid capacity >= n={n} at d={cand_d}"
            continue
        widths = [q.bit_length() - 1] if q is not None else range(2, MAX_FIELD_WIDTH + 1)
        for w in widths:
            reason = _invalid_reason(
                n, cand_d, cand_nvars, w, eps_ldc, waive_field_range, curve_degree
            )
            if reason:
                last_reason = reason
                continue
            # first valid width is the shortest code for this (d, nvars)
            key = ((1 << w) ** cand_nvars * (1 << (w - 1)), cand_d, cand_nvars)
            if best is None or key < best[0]:
                best = (key, cand_d, cand_nvars, w)
            break

    if best is None:
        raise ConfigurationError(f"no valid LDC parameterization for n={n}: {last_reason}")

    _, d_final, nvars_final, w_final = best
    if reduction_poly is not None:
        spec = FieldSpec(w=w_final, reduction_poly=reduction_poly)
    else:
        spec = FieldSpec.default(w_final)
    params = LdcParams(
        n=n,
        nvars=nvars_final,
        d=d_final,
        field_spec=spec,
        k=k,
        eps_ldc=eps_ldc,
        curve_degree=curve_degree,
        waive_field_range=waive_field_range,
    )
    logger.debug(
        "ldc_setup n=%d -> d=%d nvars=%d q=%d N=%d k=%d",
        n, params.d, params.nvars, params.q, params.codeword_len, params.k,
    )
    return params


def _check_message(x: Sequence[int], params: LdcParams) -> np.ndarray:
    bits = np.asarray(x, dtype=np.int64)
    if bits.shape != (params.n,):
        raise UsageError(f"message must have {params.n} bits, got shape {bits.shape}")
    if np.any((bits != 0) & (bits != 1)):
        raise UsageError("message entries must be bits")
    return bits


def message_coefficients(x: Sequence[int], params: LdcParams) -> list[int]:
    """Monomial coefficients (grid order) of the message polynomial g."""
    bits = _check_message(x, params)
    gf = params.field.gf
    values = gf.Zeros(len(params.grid))
    values[: params.n] = gf(bits)
    return [int(c) for c in params.interpolator() @ values]


def rm_encode(x: Sequence[int], params: LdcParams) -> np.ndarray:
    bits = _check_message(x, params)
    symbols = params.generator() @ params.field.gf(bits)
    return np.asarray(symbols, dtype=np.int64)


def ldc_encode(x: Sequence[int], params: LdcParams) -> np.ndarray:
    symbols = rm_encode(x, params)
    return codeword_bits(params.inner)[symbols].reshape(-1).copy()


def grid_point_of(i: int, params: LdcParams) -> tuple[int, ...]:
    """Outer point holding message bit i (1-based)."""
    if not 1 <= i <= params.n:
        raise UsageError(f"index {i} outside [1, {params.n}]")
    return params.grid[i - 1]


def outer_index(point: Sequence[int], params: LdcParams) -> int:
    index = 0
    for coord in point:
        index = index * params.q + coord
    return index


def curve_symbols(curve: Curve, params: LdcParams) -> list[int]:
    """Outer symbol indices of p(lambda) for lambda = 1..q-1."""
    gf = params.field
    return [outer_index(curve.at(lam, gf), params) for lam in range(1, params.q)]


def plan_queries(i: int, params: LdcParams, rng: random.Random) -> tuple[list[Curve], list[int]]:
    v0 = grid_point_of(i, params)
    zero = (0,) * params.nvars
    curves = []
    wanted: set[int] = set()
    for _ in range(params.k):
        v1 = tuple(rng.randrange(params.q) for _ in range(params.nvars))
        if params.curve_degree == 2:
            v2 = tuple(rng.randrange(params.q) for _ in range(params.nvars))
        else:
            v2 = zero
        curve = Curve(v0, v1, v2)
        curves.append(curve)
        for symbol in curve_symbols(curve, params):
            base = symbol * params.n_inner
            wanted.update(range(base, base + params.n_inner))
    return curves, sorted(wanted)


def _curve_words(curve: Curve, collected: Mapping[int, int], params: LdcParams) -> list[int]:
    words = []
    for symbol in curve_symbols(curve, params):
        base = symbol * params.n_inner
        word = 0
        for t in range(params.n_inner):
            bit = collected.get(base + t)
            if bit is None:
                raise UsageError(f"position {base + t} was planned but not collected")
            if bit:
                word |= 1 << t
        words.append(word)
    return words


def local_decode_with_confidence(
    i: int, collected: Mapping[int, int], curves: Sequence[Curve], params: LdcParams
) -> DecodeVerdict:
    gf = params.field
    alphas = list(range(1, params.q))
    cap = params.d_cap

    decodes = []
    for curve in curves:
        words = _curve_words(curve, collected, params)
        h, dist = gmd_decode_ints(gf, words, alphas, params.deg_bound, params.inner, cap=cap)
        if h is None or dist > cap:
            decodes.append((False, 0, cap))
        else:
            h0 = h.coeffs[0] if h.coeffs else 0
            decodes.append((True, h0, dist))

    ones = sum(1 for found, h0, _ in decodes if found and h0 == 1)
    bit = 1 if 2 * ones > len(decodes) else 0

    diagnostics = []
    for found, h0, dist in decodes:
        vote = 1 if found and h0 == 1 else 0
        if not found:
            delta = cap
        elif vote == bit:
            delta = dist
        else:
            delta = cap - dist
        diagnostics.append(CurveDiagnostics(delta=delta, delta_h=dist, bw_found=found, h0=h0))

    spent = Fraction(sum(c.delta for c in diagnostics), len(curves) * (params.q - 1) * params.n_inner)
    conf = min(max(Fraction(1, 4) - spent, Fraction(0)), Fraction(1))
    return DecodeVerdict(bit=bit, conf=conf, diagnostics=tuple(diagnostics))


def restrict_to_curve(coefficients: Sequence[int], curve: Curve, params: LdcParams) -> Poly:
    """Compose the message polynomial (monomial coefficients in grid order) with a curve."""
    gf = params.field
    coords = [
        Poly.from_coeffs([a, b, c], gf) for a, b, c in zip(curve.v0, curve.v1, curve.v2)
    ]
    total = Poly((), gf)
    for coef, exps in zip(coefficients, params.grid):
        if coef == 0:
            continue
        term = Poly.from_coeffs([coef], gf)
        for coord, e in zip(coords, exps):
            for _ in range(e):
                term = poly_mul(term, coord)
        total = poly_add(total, term)
    return total


def outer_distance_bound(params: LdcParams) -> int:
    """Schwartz-Zippel bound on the outer code's minimum distance."""
    return (params.q - params.d + 1) * params.q ** (params.nvars - 1)


@dataclass(frozen=True)
class DistanceBound:
    relative: Fraction
    outer: int
    d_cap: int


def ldc_distance_bound(params: LdcParams) -> DistanceBound:
    """Designed relative distance 1/2 - eps_ldc, the outer bound and the curve acceptance cap."""
    return DistanceBound(
        relative=Fraction(1, 2) - params.eps_ldc,
        outer=outer_distance_bound(params),
        d_cap=params.d_cap,
    )
