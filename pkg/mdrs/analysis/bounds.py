"""
Gilbert-Varshamov dimension and the shortened-code comparison
GV 차원 계산 및 단축 부호 비교
"""

from dataclasses import dataclass
from math import comb
from typing import Iterable, List, Optional

import structlog

from ..code.params import CodeSpec, info_count
from ..field import field_for_order

logger = structlog.get_logger(__name__)

GV_FORMULA = "largest k with sum_{i=0}^{d-2} C(N-1,i)(q-1)^i < q^(N-k)"


def gv_dimension(N: int, d: int, q: int) -> int:
    """Varshamov linear-code existence bound, exact integers"""
    if not 1 <= d <= N:
        raise ValueError(f"d must lie in [1, N={N}], got {d}")
    ball = sum(comb(N - 1, i) * (q - 1) ** i for i in range(d - 1))
    k = N
    while k > 0 and ball >= q ** (N - k):
        k -= 1
    return k


@dataclass(frozen=True)
class GVComparison:
    d: int
    length: int
    K_shortened: int
    k_gv: int

    @property
    def relation(self) -> str:
        if self.K_shortened > self.k_gv:
            return "above"
        if self.K_shortened == self.k_gv:
            return "equal"
        return "below"

    def to_dict(self) -> dict:
        return {
            "d": self.d,
            "N": self.length,
            "K_shortened": self.K_shortened,
            "k_gv": self.k_gv,
            "relation": self.relation,
        }


def shortened_dimension(spec: CodeSpec, length: int) -> int:
    """K - s for the base code shortened to `length`; <= 0 when not shortenable"""
    return info_count(spec) - (spec.N - length)


def gv_relation(q: int, length: int, d_values: Optional[Iterable[int]] = None) -> List[GVComparison]:
    """Shortened 2-D code of the given length against k_GV, per design distance"""
    field = field_for_order(q)
    if d_values is None:
        d_values = range(3, length + 1)
    rows = []
    for d in d_values:
        spec = CodeSpec(field=field, n=2, d=d)
        if d > spec.N:
            break
        K_short = shortened_dimension(spec, length)
        if K_short < 1:
            break
        rows.append(GVComparison(d=d, length=length, K_shortened=K_short, k_gv=gv_dimension(length, d, q)))
    logger.debug("gv comparison", q=q, length=length, points=len(rows))
    return rows
