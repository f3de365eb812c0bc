"""
n-dimensional evaluation encoder
n차원 평가 인코더

A message holds the coefficients a_{i_1...i_n} in canonical region order; the
codeword lists f(β_{k_1}, ..., β_{k_n}) at coordinate sum_j k_j q^(j-1)
(k_1 fastest). encode() runs nested Horner evaluation vectorised over all
q^n points; generator_matrix() gives the same map as a K x N matrix.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple

import galois
import numpy as np
import structlog

from ..errors import ArityMismatch, LengthMismatch, SymbolOutOfRange
from ..field import Element, FieldSpec, beta_array
from .params import CodeSpec, DegreeRegion, MultiIndex

logger = structlog.get_logger(__name__)


def check_codes(codes, q: int, what: str) -> None:
    for position, code in enumerate(codes):
        if code is not None and not 0 <= code < q:
            raise SymbolOutOfRange(f"{what} {code} at position {position} outside [0, {q})")


@dataclass(frozen=True)
class Message:
    region: DegreeRegion
    coeffs: Tuple[int, ...]

    def __post_init__(self):
        if len(self.coeffs) != self.region.K:
            raise LengthMismatch(f"message has {len(self.coeffs)} symbols, region needs K={self.region.K}")
        check_codes(self.coeffs, self.region.spec.q, "coefficient")

    @classmethod
    def from_codes(cls, region: DegreeRegion, codes: Sequence[int]) -> "Message":
        return cls(region, tuple(int(c) for c in codes))

    @classmethod
    def basis(cls, region: DegreeRegion, r: int) -> "Message":
        """Unit message selecting the r-th monomial"""
        coeffs = [0] * region.K
        coeffs[r] = 1
        return cls(region, tuple(coeffs))

    def array(self) -> galois.FieldArray:
        return self.region.spec.field.array(self.coeffs)


@dataclass(frozen=True)
class Codeword:
    spec: CodeSpec
    symbols: Tuple[int, ...]

    def __post_init__(self):
        if len(self.symbols) != self.spec.N:
            raise LengthMismatch(f"codeword has {len(self.symbols)} symbols, expected N={self.spec.N}")
        check_codes(self.symbols, self.spec.q, "symbol")

    @property
    def weight(self) -> int:
        return sum(1 for s in self.symbols if s != 0)

    def array(self) -> galois.FieldArray:
        return self.spec.field.array(self.symbols)


@dataclass(frozen=True)
class GeneratorMatrix:
    """K x N matrix; row r evaluates the r-th region monomial at every point"""

    region: DegreeRegion
    matrix: galois.FieldArray

    @property
    def rows(self) -> int:
        return self.matrix.shape[0]

    @property
    def cols(self) -> int:
        return self.matrix.shape[1]

    @property
    def spec(self) -> CodeSpec:
        return self.region.spec

    def rank(self) -> int:
        return int(np.linalg.matrix_rank(self.matrix))

    def entry(self, r: int, c: int) -> int:
        return int(self.matrix[r, c])


def point_indices(spec: CodeSpec) -> np.ndarray:
    """N x n array: row c holds (k_1, ..., k_n) with k_1 fastest"""
    c = np.arange(spec.N, dtype=np.int64)
    return np.stack([(c // spec.q ** j) % spec.q for j in range(spec.n)], axis=1)


def point_tuple(spec: CodeSpec, c: int) -> Tuple[int, ...]:
    """β-indices (k_1, ..., k_n) of coordinate c"""
    return tuple((c // spec.q ** j) % spec.q for j in range(spec.n))


def point_axes(spec: CodeSpec) -> List[galois.FieldArray]:
    """Per-variable coordinate vectors: axes[j][c] = β_{k_{j+1}} of point c"""
    betas = beta_array(spec.field)
    indices = point_indices(spec)
    return [betas[indices[:, j]] for j in range(spec.n)]


def _group(terms: Dict[MultiIndex, object], axis: int) -> Dict[int, Dict[MultiIndex, object]]:
    groups: Dict[int, Dict[MultiIndex, object]] = {}
    for member, value in terms.items():
        groups.setdefault(member[axis], {})[member] = value
    return groups


def _horner(terms: Dict[MultiIndex, object], axes: Sequence, axis: int, zero):
    """Nested Horner in x_{axis+1}, recursing into lower variables"""
    if axis < 0:
        # exactly one member left once every exponent is fixed
        return next(iter(terms.values()))
    groups = _group(terms, axis)
    acc = zero
    for e in range(max(groups), -1, -1):
        inner = _horner(groups[e], axes, axis - 1, zero) if e in groups else zero
        acc = acc * axes[axis] + inner
    return acc


def encode(msg: Message) -> Codeword:
    region = msg.region
    spec = region.spec
    GF = spec.field.GF
    coeffs = msg.array()
    terms = {member: coeffs[r] for r, member in enumerate(region.members)}
    values = _horner(terms, point_axes(spec), spec.n - 1, GF.Zeros(spec.N))
    return Codeword(spec, tuple(int(s) for s in values.view(np.ndarray)))


def evaluate_poly(region: DegreeRegion, coeffs: Sequence[int], point: Sequence[int]) -> Element:
    """f at one point given as n element codes"""
    spec = region.spec
    if len(point) != spec.n:
        raise ArityMismatch(f"point has {len(point)} coordinates, expected n={spec.n}")
    if len(coeffs) != region.K:
        raise LengthMismatch(f"{len(coeffs)} coefficients for K={region.K}")
    GF = spec.field.GF
    terms = {member: GF(int(c)) for member, c in zip(region.members, coeffs)}
    axes = [GF(int(x)) for x in point]
    value = _horner(terms, axes, spec.n - 1, GF(0))
    return spec.field.element(int(value))


@functools.lru_cache(maxsize=64)
def _power_table(field: FieldSpec) -> galois.FieldArray:
    """q x q table: [i, k] = β_k ** i"""
    betas = beta_array(field)
    table = field.GF.Ones((field.q, field.q))
    for i in range(1, field.q):
        table[i] = table[i - 1] * betas
    return table


def generator_matrix(region: DegreeRegion) -> GeneratorMatrix:
    spec = region.spec
    GF = spec.field.GF
    powers = _power_table(spec.field)
    indices = point_indices(spec)
    exponents = np.asarray(region.members, dtype=np.int64).reshape(region.K, spec.n)
    matrix = GF.Ones((region.K, spec.N))
    for j in range(spec.n):
        matrix = matrix * powers[exponents[:, j][:, np.newaxis], indices[:, j][np.newaxis, :]]
    logger.debug("generator built", K=region.K, N=spec.N)
    return GeneratorMatrix(region=region, matrix=matrix)


def encode_batch(G: galois.FieldArray, messages: galois.FieldArray) -> galois.FieldArray:
    """Rows of `messages` times G"""
    return messages @ G
