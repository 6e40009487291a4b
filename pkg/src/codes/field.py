"""Arithmetic in GF(2^w).

Elements are plain ints in [0, q). `GaloisField` holds log/antilog tables built
from the `galois` package's primitive element, so the hot paths of the
decoders are table lookups on ints. `FieldElem` and the `gf_*` functions are
the checked, value-typed surface on top of it.
"""
import functools
import logging
from dataclasses import dataclass

import galois
import numpy as np

from errors import ConfigurationError, DomainError, UsageError
from settings import MAX_FIELD_WIDTH


logger = logging.getLogger(__name__)


def default_reduction_poly(w: int) -> int:
    """Lexicographically smallest irreducible polynomial of degree w over GF(2)."""
    return int(galois.irreducible_poly(2, w, method="min"))


def clmul_reduce(a: int, b: int, poly: int, w: int) -> int:
    """Carry-less product of a and b reduced modulo poly (reference, no tables)."""
    product = 0
    while b:
        if b & 1:
            product ^= a
        a <<= 1
        b >>= 1
    for shift in range(product.bit_length() - 1, w - 1, -1):
        if product >> shift & 1:
            product ^= poly << (shift - w)
    return product


@dataclass(frozen=True)
class FieldSpec:
    w: int
    reduction_poly: int

    def __post_init__(self):
        if not 2 <= self.w <= MAX_FIELD_WIDTH:
            raise ConfigurationError(
                f"field width w={self.w} outside supported range [2, {MAX_FIELD_WIDTH}]"
            )
        poly = galois.Poly.Int(self.reduction_poly)
        if poly.degree != self.w or not poly.is_irreducible():
            raise ConfigurationError(
                f"reduction polynomial {self.reduction_poly:#x} is not an irreducible "
                f"polynomial of degree {self.w}"
            )

    @classmethod
    def default(cls, w: int) -> "FieldSpec":
        if not 2 <= w <= MAX_FIELD_WIDTH:
            raise ConfigurationError(
                f"field width w={w} outside supported range [2, {MAX_FIELD_WIDTH}]"
            )
        return cls(w=w, reduction_poly=default_reduction_poly(w))

    @property
    def q(self) -> int:
        return 1 << self.w


class GaloisField:
    def __init__(self, spec: FieldSpec):
        self.spec = spec
        self.w = spec.w
        self.q = spec.q

        # Vectorised arithmetic (Reed-Muller encoding, matrix inversion) goes
        # through the galois class; scalar arithmetic through the tables.
        self.gf = galois.GF(self.q, irreducible_poly=galois.Poly.Int(spec.reduction_poly))
        self.generator = int(self.gf.primitive_element)

        order = self.q - 1
        powers = self.gf(self.generator) ** np.arange(order)
        self._exp = [int(v) for v in powers] * 2
        self._log = [0] * self.q
        for i in range(order):
            self._log[self._exp[i]] = i

        logger.debug(
            "GF(2^%d) ready: poly=%#x generator=%d", self.w, spec.reduction_poly, self.generator
        )

    def __repr__(self) -> str:
        return f"GaloisField(w={self.w}, poly={self.spec.reduction_poly:#x})"

    def __eq__(self, other) -> bool:
        return isinstance(other, GaloisField) and other.spec == self.spec

    def __hash__(self) -> int:
        return hash(self.spec)

    def add(self, a: int, b: int) -> int:
        return a ^ b

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self._exp[self._log[a] + self._log[b]]

    def inv(self, a: int) -> int:
        if a == 0:
            raise DomainError("zero has no multiplicative inverse")
        return self._exp[(self.q - 1) - self._log[a]]

    def div(self, a: int, b: int) -> int:
        if b == 0:
            raise DomainError("division by zero")
        if a == 0:
            return 0
        return self._exp[self._log[a] + (self.q - 1) - self._log[b]]

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            raise UsageError(f"negative exponent {e}")
        result = 1
        base = a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def elements(self) -> list[int]:
        return list(range(self.q))


@functools.lru_cache(maxsize=None)
def get_field(spec: FieldSpec) -> GaloisField:
    return GaloisField(spec)


def field_of_width(w: int) -> GaloisField:
    return get_field(FieldSpec.default(w))


@dataclass(frozen=True)
class FieldElem:
    value: int
    field: GaloisField

    def __post_init__(self):
        if not 0 <= self.value < self.field.q:
            raise UsageError(f"value {self.value} outside GF({self.field.q})")

    def __int__(self) -> int:
        return self.value

    def __add__(self, other: "FieldElem") -> "FieldElem":
        return gf_add(self, other)

    def __mul__(self, other: "FieldElem") -> "FieldElem":
        return gf_mul(self, other)

    def __pow__(self, e: int) -> "FieldElem":
        return gf_pow(self, e)


def _same_field(a: FieldElem, b: FieldElem) -> GaloisField:
    if a.field != b.field:
        raise UsageError(f"mismatched fields: {a.field!r} vs {b.field!r}")
    return a.field


def gf_add(a: FieldElem, b: FieldElem) -> FieldElem:
    field = _same_field(a, b)
    return FieldElem(field.add(a.value, b.value), field)


def gf_mul(a: FieldElem, b: FieldElem) -> FieldElem:
    field = _same_field(a, b)
    return FieldElem(field.mul(a.value, b.value), field)


def gf_div(a: FieldElem, b: FieldElem) -> FieldElem:
    field = _same_field(a, b)
    return FieldElem(field.div(a.value, b.value), field)


def gf_inv(a: FieldElem) -> FieldElem:
    return FieldElem(a.field.inv(a.value), a.field)


def gf_pow(a: FieldElem, e: int) -> FieldElem:
    return FieldElem(a.field.pow(a.value, e), a.field)


def enumerate_field(field: GaloisField) -> list[FieldElem]:
    """All q elements in canonical order 0, 1, ..., q-1."""
    return [FieldElem(v, field) for v in field.elements()]
