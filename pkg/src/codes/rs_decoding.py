"""Univariate polynomials over GF(2^w) and Reed-Solomon style decoding.

Polynomials are coefficient tuples, lowest degree first, with no trailing zero
(the zero polynomial is the empty tuple). A decoder that finds no codeword
returns None; that is an expected outcome, not an error.
"""
import logging
from dataclasses import dataclass
from typing import NamedTuple, Sequence

from codes.field import GaloisField
from codes.inner_code import InnerCodeSpec, bits_to_int, codeword_table, decode_int
from errors import UsageError


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Poly:
    coeffs: tuple[int, ...]
    field: GaloisField

    @classmethod
    def from_coeffs(cls, coeffs: Sequence[int], field: GaloisField) -> "Poly":
        trimmed = list(coeffs)
        while trimmed and trimmed[-1] == 0:
            trimmed.pop()
        return cls(tuple(trimmed), field)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __call__(self, alpha: int) -> int:
        return poly_eval(self, alpha)


class EvalPoint(NamedTuple):
    alpha: int
    value: int = 0
    erased: bool = False


def _horner(field: GaloisField, coeffs: Sequence[int], alpha: int) -> int:
    acc = 0
    for c in reversed(coeffs):
        acc = field.mul(acc, alpha) ^ c
    return acc


def poly_eval(p: Poly, alpha: int) -> int:
    return _horner(p.field, p.coeffs, alpha)


def poly_add(a: Poly, b: Poly) -> Poly:
    size = max(len(a.coeffs), len(b.coeffs))
    ca = a.coeffs + (0,) * (size - len(a.coeffs))
    cb = b.coeffs + (0,) * (size - len(b.coeffs))
    return Poly.from_coeffs([x ^ y for x, y in zip(ca, cb)], a.field)


def poly_mul(a: Poly, b: Poly) -> Poly:
    if a.is_zero() or b.is_zero():
        return Poly((), a.field)
    field = a.field
    out = [0] * (len(a.coeffs) + len(b.coeffs) - 1)
    for i, x in enumerate(a.coeffs):
        if x == 0:
            continue
        for j, y in enumerate(b.coeffs):
            out[i + j] ^= field.mul(x, y)
    return Poly.from_coeffs(out, field)


def poly_divmod(a: Poly, b: Poly) -> tuple[Poly, Poly]:
    if b.is_zero():
        raise UsageError("polynomial division by zero")
    field = a.field
    rem = list(a.coeffs)
    quot = [0] * max(len(rem) - len(b.coeffs) + 1, 0)
    lead_inv = field.inv(b.coeffs[-1])
    for shift in range(len(quot) - 1, -1, -1):
        coef = field.mul(rem[shift + len(b.coeffs) - 1], lead_inv)
        quot[shift] = coef
        if coef:
            for j, y in enumerate(b.coeffs):
                rem[shift + j] ^= field.mul(coef, y)
    return Poly.from_coeffs(quot, field), Poly.from_coeffs(rem, field)


def _check_distinct(points: Sequence[EvalPoint]) -> None:
    alphas = [p.alpha for p in points]
    if len(set(alphas)) != len(alphas):
        raise UsageError("evaluation points must have distinct alphas")


def interpolate(field: GaloisField, points: Sequence[EvalPoint], target_deg: int) -> Poly:
    """Lagrange interpolation through the first target_deg + 1 non-erased points."""
    _check_distinct(points)
    used = [p for p in points if not p.erased][: target_deg + 1]
    if len(used) < target_deg + 1:
        raise UsageError(
            f"need {target_deg + 1} non-erased points to interpolate degree {target_deg}, "
            f"got {len(used)}"
        )
    result = [0] * len(used)
    for i, pi in enumerate(used):
        if pi.value == 0:
            continue
        # basis polynomial prod_{j != i} (x - a_j) / (a_i - a_j)
        basis = [1]
        denom = 1
        for j, pj in enumerate(used):
            if j == i:
                continue
            basis = [0] + basis
            for t in range(len(basis) - 1):
                basis[t] ^= field.mul(basis[t + 1], pj.alpha)
            denom = field.mul(denom, pi.alpha ^ pj.alpha)
        scale = field.div(pi.value, denom)
        for t, c in enumerate(basis):
            result[t] ^= field.mul(c, scale)
    return Poly.from_coeffs(result, field)


def _solve(field: GaloisField, rows: list[list[int]], ncols: int) -> list[int] | None:
    """Gaussian elimination on an augmented matrix; free variables set to zero."""
    pivots = []
    r = 0
    for col in range(ncols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][col]), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = field.inv(rows[r][col])
        rows[r] = [field.mul(v, inv) for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col]:
                f = rows[i][col]
                pivot_row = rows[r]
                rows[i] = [v ^ field.mul(f, pv) for v, pv in zip(rows[i], pivot_row)]
        pivots.append(col)
        r += 1
        if r == len(rows):
            break
    if any(row[ncols] for row in rows[r:]):
        return None
    solution = [0] * ncols
    for i, col in enumerate(pivots):
        solution[col] = rows[i][ncols]
    return solution


def _disagreements(p: Poly, points: Sequence[EvalPoint]) -> int:
    return sum(1 for pt in points if poly_eval(p, pt.alpha) != pt.value)


def berlekamp_welch(field: GaloisField, points: Sequence[EvalPoint], deg_bound: int) -> Poly | None:
    """Unique g with deg g <= deg_bound within (n - deg_bound)/2 of the points, else None."""
    if any(p.erased for p in points):
        raise UsageError("berlekamp_welch takes no erased points")
    _check_distinct(points)
    n = len(points)
    e = (n - deg_bound - 1) // 2
    if e < 0:
        return None
    if e == 0:
        g = interpolate(field, points, deg_bound)
        return g if _disagreements(g, points) == 0 else None

    # unknowns: N_0..N_{e+deg_bound}, then E_0..E_{e-1} (E monic of degree e)
    n_unknowns = e + deg_bound + 1
    ncols = n_unknowns + e
    rows = []
    for pt in points:
        row = [0] * (ncols + 1)
        power = 1
        for t in range(n_unknowns):
            row[t] = power
            if t < e:
                row[n_unknowns + t] = field.mul(pt.value, power)
            power = field.mul(power, pt.alpha)
        # power == alpha^{n_unknowns}; the E_e = 1 term goes to the right-hand side
        row[ncols] = field.mul(pt.value, field.pow(pt.alpha, e))
        rows.append(row)
    solution = _solve(field, rows, ncols)
    if solution is None:
        return None
    numerator = Poly.from_coeffs(solution[:n_unknowns], field)
    locator = Poly.from_coeffs(solution[n_unknowns:] + [1], field)
    g, rem = poly_divmod(numerator, locator)
    if not rem.is_zero() or g.degree > deg_bound:
        return None
    if 2 * _disagreements(g, points) >= n - deg_bound:
        return None
    return g


def errors_and_erasures_decode(
    field: GaloisField, points: Sequence[EvalPoint], deg_bound: int
) -> Poly | None:
    """Decode when 2 * errors + erasures < n - deg_bound; erased points are dropped."""
    _check_distinct(points)
    kept = [p for p in points if not p.erased]
    if len(kept) <= deg_bound:
        return None
    return berlekamp_welch(field, kept, deg_bound)


def _total_distance(g: Poly, words: Sequence[int], alphas: Sequence[int], table: Sequence[int]) -> int:
    return sum(
        (word ^ table[poly_eval(g, alpha)]).bit_count() for word, alpha in zip(words, alphas)
    )


def gmd_decode_ints(
    field: GaloisField,
    words: Sequence[int],
    alphas: Sequence[int],
    deg_bound: int,
    inner: InnerCodeSpec,
    cap: int | None = None,
) -> tuple[Poly | None, int]:
    """GMD on int-packed inner blocks (bit t of a word = block position t)."""
    table = codeword_table(inner)
    decoded = [decode_int(word, inner) for word in words]
    floor = sum(dist for _, dist in decoded)
    n = len(words)

    # Erase least reliable first: sort by distance, then by position.
    order = sorted(range(n), key=lambda idx: (decoded[idx][1], idx))
    best: Poly | None = None
    best_dist = None
    seen: set[tuple[int, ...]] = set()
    for erased_count in range(0, max(n - deg_bound, 0)):
        erased = set(order[n - erased_count:]) if erased_count else set()
        points = [
            EvalPoint(alphas[idx], decoded[idx][0], idx in erased) for idx in range(n)
        ]
        candidate = errors_and_erasures_decode(field, points, deg_bound)
        if candidate is None or candidate.coeffs in seen:
            continue
        seen.add(candidate.coeffs)
        dist = _total_distance(candidate, words, alphas, table)
        if best_dist is None or dist < best_dist:
            best, best_dist = candidate, dist
        if best_dist == floor:
            # every block already at its nearest codeword: nothing can be closer
            break
    if best is None:
        return None, cap if cap is not None else n * inner.block_len
    return best, best_dist


def gmd_decode(
    field: GaloisField,
    blocks: Sequence[Sequence[int]],
    alphas: Sequence[int],
    deg_bound: int,
    inner: InnerCodeSpec,
    cap: int | None = None,
) -> tuple[Poly | None, int]:
    """Forney GMD: inner ML decode, then errors-and-erasures at every reliability threshold.

    Returns the candidate polynomial closest to the received blocks in total bit
    distance. With no candidate the distance is reported as `cap` (the caller's
    D_cap) or, without one, the total number of received bits.
    """
    if len(blocks) != len(alphas):
        raise UsageError(f"{len(blocks)} blocks but {len(alphas)} alphas")
    for block in blocks:
        if len(block) != inner.block_len:
            raise UsageError(f"inner block must have {inner.block_len} bits, got {len(block)}")
    return gmd_decode_ints(field, [bits_to_int(b) for b in blocks], alphas, deg_bound, inner, cap)
