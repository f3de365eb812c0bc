"""
GF(q) arithmetic with a canonical representation per q = p^m
정규 표현을 갖는 유한체 GF(q) 연산

Elements are integer codes in [0, q): the residue itself for m = 1, the
base-p digits of the polynomial-basis coordinates for m > 1 (the same
integer representation galois uses). The modulus is the lexicographically
smallest monic irreducible polynomial (coefficients compared low degree
first) and alpha is the smallest primitive integer code.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass, field
from typing import List, Tuple, Type

import galois
import numpy as np
import structlog

from ..errors import DivisionByZero, FieldMismatch, FieldTooLarge, NotPrime

logger = structlog.get_logger(__name__)

MAX_FIELD_ORDER = 2 ** 16


@dataclass(frozen=True)
class FieldSpec:
    """GF(p^m) description; use field_new() to build the canonical one"""

    p: int
    m: int
    modulus: Tuple[int, ...]  # low degree first, monic, length m + 1
    alpha: int

    @property
    def q(self) -> int:
        return self.p ** self.m

    @functools.cached_property
    def GF(self) -> Type[galois.FieldArray]:
        """galois field class bound to this modulus and primitive element"""
        if self.m == 1:
            return galois.GF(self.p, primitive_element=self.alpha)
        poly = galois.Poly(list(reversed(self.modulus)), field=galois.GF(self.p))
        return galois.GF(self.p ** self.m, irreducible_poly=poly, primitive_element=self.alpha)

    def element(self, code: int) -> "Element":
        return Element(self, int(code))

    def array(self, codes) -> galois.FieldArray:
        """Vector/matrix of integer codes as a FieldArray"""
        return self.GF(np.asarray(codes, dtype=np.int64))

    def to_dict(self) -> dict:
        return {"p": self.p, "m": self.m, "modulus": list(self.modulus), "alpha": self.alpha}

    def __repr__(self) -> str:
        return f"<FieldSpec GF({self.p}^{self.m})>"


@dataclass(frozen=True)
class Element:
    """One field element as its integer code"""

    spec: FieldSpec = field(repr=False)
    code: int

    def __post_init__(self):
        if not 0 <= self.code < self.spec.q:
            raise ValueError(f"element code {self.code} outside [0, {self.spec.q})")

    def __add__(self, other: "Element") -> "Element":
        return add(self, other)

    def __sub__(self, other: "Element") -> "Element":
        return add(self, neg(other))

    def __mul__(self, other: "Element") -> "Element":
        return mul(self, other)

    def __neg__(self) -> "Element":
        return neg(self)

    def __pow__(self, e: int) -> "Element":
        return pow(self, e)

    def __int__(self) -> int:
        return self.code

    def __str__(self) -> str:
        return str(self.code)


def _monic_candidates(p: int, m: int):
    """Monic degree-m polynomials, low-degree-first lexicographic order"""
    for low in itertools.product(range(p), repeat=m):
        yield tuple(low) + (1,)


@functools.lru_cache(maxsize=None)
def field_new(p: int, m: int = 1) -> FieldSpec:
    """Canonical FieldSpec for GF(p^m)"""
    if m < 1:
        raise ValueError(f"extension degree must be >= 1, got {m}")
    if p < 2 or not galois.is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if p ** m > MAX_FIELD_ORDER:
        raise FieldTooLarge(f"GF({p}^{m}) has {p ** m} elements, limit is {MAX_FIELD_ORDER}")

    if m == 1:
        modulus: Tuple[int, ...] = (0, 1)
        alpha = int(galois.primitive_root(p, method="min")) if p > 2 else 1
    else:
        prime_field = galois.GF(p)
        for coeffs in _monic_candidates(p, m):
            poly = galois.Poly(list(reversed(coeffs)), field=prime_field)
            if poly.is_irreducible():
                modulus = coeffs
                break
        alpha = int(galois.primitive_element(poly, method="min"))

    spec = FieldSpec(p=p, m=m, modulus=modulus, alpha=alpha)
    logger.debug("field created", p=p, m=m, modulus=list(modulus), alpha=alpha)
    return spec


def _check_same(a: Element, b: Element) -> None:
    if a.spec != b.spec:
        raise FieldMismatch(f"operands from {a.spec!r} and {b.spec!r}")


def add(a: Element, b: Element) -> Element:
    _check_same(a, b)
    GF = a.spec.GF
    return Element(a.spec, int(GF(a.code) + GF(b.code)))


def mul(a: Element, b: Element) -> Element:
    _check_same(a, b)
    GF = a.spec.GF
    return Element(a.spec, int(GF(a.code) * GF(b.code)))


def neg(a: Element) -> Element:
    return Element(a.spec, int(-a.spec.GF(a.code)))


def inv(a: Element) -> Element:
    if a.code == 0:
        raise DivisionByZero("zero has no multiplicative inverse")
    return Element(a.spec, int(a.spec.GF(a.code) ** -1))


def pow(a: Element, e: int) -> Element:
    if a.code == 0 and e < 0:
        raise DivisionByZero("negative power of zero")
    return Element(a.spec, int(a.spec.GF(a.code) ** int(e)))


def element_codes(spec: FieldSpec) -> List[int]:
    """β enumeration as integer codes: 0, then alpha^0 .. alpha^(q-2)"""
    return [int(c) for c in beta_array(spec)]


def elements(spec: FieldSpec) -> List[Element]:
    """All q elements in canonical β order"""
    return [Element(spec, code) for code in element_codes(spec)]


def beta_array(spec: FieldSpec) -> galois.FieldArray:
    """β enumeration as a FieldArray (index k holds β_k)"""
    GF = spec.GF
    powers = GF(spec.alpha) ** np.arange(spec.q - 1)
    return GF(np.concatenate([[0], powers.view(np.ndarray)]))


def field_for_order(q: int) -> FieldSpec:
    """Canonical field of order q (q must be a prime power)"""
    if q < 2 or not galois.is_prime_power(q):
        raise NotPrime(f"{q} is not a prime power")
    primes, exponents = galois.factors(q)
    return field_new(int(primes[0]), int(exponents[0]))
