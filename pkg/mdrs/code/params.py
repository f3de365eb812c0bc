"""
Code parameters: the staircase degree region, K, N-K and designed distance
부호 파라미터: 계단형 차수 영역, K, N-K, 설계 거리

A multi-index (i_1, ..., i_n) is admitted iff
    i_1 <= q - ceil(d / prod_{j>=2} (q - i_j))
which encodes every nested limit L, L_{i_3...i_n} at once: a prefix whose
bound is negative admits no i_1. All arithmetic is exact integer/rational.
"""

from __future__ import annotations

import functools
import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterator, List, Optional, Tuple

import structlog

from ..errors import EmptyRegion, UnsupportedDimension
from ..field import FieldSpec

logger = structlog.get_logger(__name__)

MultiIndex = Tuple[int, ...]


def ceil_div(a: int, b: int) -> int:
    return (a + b - 1) // b


@dataclass(frozen=True)
class CodeSpec:
    """(q, n, d_min) naming one code"""

    field: FieldSpec
    n: int
    d: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"number of variables must be >= 1, got {self.n}")
        if self.d < 1:
            raise ValueError(f"design distance must be >= 1, got {self.d}")

    @property
    def q(self) -> int:
        return self.field.q

    @property
    def N(self) -> int:
        return self.q ** self.n

    def to_dict(self) -> dict:
        return {"q": self.q, "n": self.n, "d": self.d, "N": self.N}


@dataclass(frozen=True)
class RegionLimits:
    """L and the nested L_{i_{j+1}...i_n} (keys are suffixes (i_{j+1}, ..., i_n))"""

    L: Optional[int]
    nested: Dict[MultiIndex, int] = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "L": self.L,
            "nested": [list(suffix) + [value] for suffix, value in sorted(self.nested.items())],
        }


@dataclass(frozen=True)
class DegreeRegion:
    """Admitted coefficient multi-indices in canonical order (i_n slowest, i_1 fastest)"""

    spec: CodeSpec
    members: Tuple[MultiIndex, ...]

    @property
    def K(self) -> int:
        return len(self.members)

    @functools.cached_property
    def position(self) -> Dict[MultiIndex, int]:
        return {member: r for r, member in enumerate(self.members)}

    @functools.cached_property
    def profile(self) -> Dict[MultiIndex, int]:
        """prefix (i_2, ..., i_n) -> K_{i_2...i_n}, the largest admitted i_1"""
        result: Dict[MultiIndex, int] = {}
        for member in self.members:
            prefix = member[1:]
            result[prefix] = max(result.get(prefix, 0), member[0])
        return result

    def __contains__(self, member: MultiIndex) -> bool:
        return tuple(member) in self.position


def _check(spec: CodeSpec) -> None:
    if spec.d > spec.N:
        raise EmptyRegion(f"d={spec.d} exceeds N=q^n={spec.N}; no coefficient is admitted")


def prefix_bound(q: int, d: int, prefix: MultiIndex) -> int:
    """K_{i_2...i_n} = q - ceil(d / prod(q - i_j)); negative means empty slice"""
    denominator = math.prod(q - i for i in prefix)
    return q - ceil_div(d, denominator)


def _prefixes(q: int, n: int) -> Iterator[MultiIndex]:
    """(i_2, ..., i_n) ascending with i_n outermost"""
    for reversed_prefix in itertools.product(range(q), repeat=n - 1):
        yield reversed_prefix[::-1]


def _admitted(spec: CodeSpec) -> Iterator[Tuple[MultiIndex, int]]:
    for prefix in _prefixes(spec.q, spec.n):
        bound = prefix_bound(spec.q, spec.d, prefix)
        if bound >= 0:
            yield prefix, bound


def build_region(spec: CodeSpec) -> DegreeRegion:
    _check(spec)
    members: List[MultiIndex] = []
    for prefix, bound in _admitted(spec):
        members.extend((i_1,) + prefix for i_1 in range(bound + 1))
    logger.debug("region built", q=spec.q, n=spec.n, d=spec.d, K=len(members))
    return DegreeRegion(spec=spec, members=tuple(members))


def k_profile(spec: CodeSpec) -> Dict[MultiIndex, int]:
    _check(spec)
    return dict(_admitted(spec))


def info_count(spec: CodeSpec) -> int:
    """K = number of admitted multi-indices"""
    _check(spec)
    return sum(bound + 1 for _, bound in _admitted(spec))


def check_count(spec: CodeSpec) -> int:
    return spec.N - info_count(spec)


def check_count_closed_form(spec: CodeSpec) -> int:
    """N-K summed per admitted prefix: sum(ceil(d/prod) - 1) + q^n - q * #prefixes"""
    _check(spec)
    q = spec.q
    total = 0
    prefixes = 0
    for prefix, _ in _admitted(spec):
        total += ceil_div(spec.d, math.prod(q - i for i in prefix)) - 1
        prefixes += 1
    return total + spec.N - q * prefixes


def check_count_small_d(d: int, n: int) -> int:
    """N-K for d <= q, which does not depend on q"""
    if n == 1:
        return d - 1

    def walk(depth: int, product: int) -> int:
        if depth == 0:
            return ceil_div(d, product) - 1
        total = 0
        for i in range(1, d):
            if product * i >= d:
                # every deeper term is ceil(d / >=d) - 1 = 0
                break
            total += walk(depth - 1, product * i)
        return total

    return walk(n - 1, 1)


def limits(spec: CodeSpec) -> RegionLimits:
    """L = largest i_n with a nonempty slice, nested maxima for the inner indices"""
    admitted = [prefix for prefix, _ in _admitted(spec)]
    if spec.n == 1 or not admitted:
        return RegionLimits(L=None)
    L = max(prefix[-1] for prefix in admitted)
    nested: Dict[MultiIndex, int] = {}
    # prefix = (i_2, ..., i_n); the limit of i_j is keyed by (i_{j+1}, ..., i_n)
    for prefix in admitted:
        for j in range(len(prefix) - 1):
            suffix = prefix[j + 1:]
            nested[suffix] = max(nested.get(suffix, 0), prefix[j])
    return RegionLimits(L=L, nested=nested)


def guaranteed_distance(region: DegreeRegion) -> int:
    """min over prefixes of (q - K_prefix) * prod(q - i_j); never below d"""
    q = region.spec.q
    return min(
        (q - bound) * math.prod(q - i for i in prefix)
        for prefix, bound in region.profile.items()
    )


def rate_lower_bound(spec: CodeSpec) -> Fraction:
    """2-D lower bound on K/N: 1 - d/N - (d/N) * sum_{m=0}^{floor(q - d/q)} 1/(q-m)"""
    if spec.n != 2:
        raise UnsupportedDimension(f"the rate bound is derived for n=2 only, got n={spec.n}")
    q, d, N = spec.q, spec.d, spec.N
    top = (q * q - d) // q
    harmonic = sum((Fraction(1, q - m) for m in range(top + 1)), Fraction(0))
    ratio = Fraction(d, N)
    return 1 - ratio - ratio * harmonic


def params_dict(region: DegreeRegion) -> dict:
    """`params` payload"""
    spec = region.spec
    return {
        "q": spec.q,
        "n": spec.n,
        "d": spec.d,
        "N": spec.N,
        "K": region.K,
        "checkSymbols": spec.N - region.K,
        "guaranteedDistance": guaranteed_distance(region),
        "limits": limits(spec).to_dict(),
        "field": spec.field.to_dict(),
        "region": [list(member) for member in region.members],
    }
