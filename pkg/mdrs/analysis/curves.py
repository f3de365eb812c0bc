"""
Rate curves: d/N against K/N per series
부호율 곡선 생성기 레지스트리 및 CSV 출력
Series builders are registered per CurveKind and looked up by the CLI.
"""

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from pathlib import Path
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple, Union

import pandas as pd
import structlog

from ..code.params import CodeSpec, info_count, rate_lower_bound
from ..errors import EmptyRegion, ParameterError
from ..field import field_for_order
from .bounds import GV_FORMULA, GVComparison, gv_relation
from .product import product_code_checks

logger = structlog.get_logger(__name__)

CSV_COLUMNS = ["series", "d", "N", "K", "d_num", "d_den", "k_num", "k_den", "d_over_N", "k_over_N"]


class CurveKind(Enum):
    DIM2 = "dim2"
    DIM_SWEEP = "dim-sweep"
    PRODUCT_COMPARE = "product-compare"
    GV_COMPARE = "gv-compare"


DEFAULT_Q = {
    CurveKind.DIM2: 16,
    CurveKind.DIM_SWEEP: 4,
    CurveKind.PRODUCT_COMPARE: 8,
    CurveKind.GV_COMPARE: 16,
}
DEFAULT_DIMS = (2, 3, 4)
DEFAULT_LENGTHS = (32, 64, 128)


@dataclass(frozen=True)
class RateCurvePoint:
    label: str
    d: int
    N: int
    K: Optional[int]  # None for bound series
    d_over_N: Fraction
    K_over_N: Fraction

    def __post_init__(self):
        if not (0 <= self.d_over_N <= 1 and 0 <= self.K_over_N <= 1):
            raise ValueError(f"ratios out of [0, 1] in {self.label} at d={self.d}")


CurveBuilder = Callable[[int, Sequence[int], Sequence[int]], List[RateCurvePoint]]


class CurveRegistry:
    """CurveKind -> series builder"""

    def __init__(self):
        self._builders: Dict[CurveKind, CurveBuilder] = {}

    def register(self, kind: CurveKind) -> Callable[[CurveBuilder], CurveBuilder]:
        def decorator(builder: CurveBuilder) -> CurveBuilder:
            self._builders[kind] = builder
            logger.debug("curve builder registered", kind=kind.value, builder=builder.__name__)
            return builder
        return decorator

    def get_builder(self, kind: CurveKind) -> CurveBuilder:
        if kind not in self._builders:
            raise ParameterError(f"no curve builder registered for {kind.value}")
        return self._builders[kind]

    def available_kinds(self) -> List[CurveKind]:
        return [kind for kind in CurveKind if kind in self._builders]


_registry = CurveRegistry()


def get_curve_registry() -> CurveRegistry:
    return _registry


def _exact_series(label: str, q: int, n: int) -> List[RateCurvePoint]:
    """d = 3 .. q^n; every d <= N leaves a nonempty region"""
    field = field_for_order(q)
    N = q ** n
    points = []
    for d in range(3, N + 1):
        K = info_count(CodeSpec(field=field, n=n, d=d))
        points.append(RateCurvePoint(label, d, N, K, Fraction(d, N), Fraction(K, N)))
    return points


@_registry.register(CurveKind.DIM2)
def dim2_curves(q: int, dims: Sequence[int], lengths: Sequence[int]) -> List[RateCurvePoint]:
    points = _exact_series(f"2D q={q}", q, 2)
    field = field_for_order(q)
    label = f"bound q={q}"
    for d in range(3, q * q + 1):
        bound = rate_lower_bound(CodeSpec(field=field, n=2, d=d))
        if bound < 0:
            continue
        points.append(RateCurvePoint(label, d, q * q, None, Fraction(d, q * q), bound))
    return points


@_registry.register(CurveKind.DIM_SWEEP)
def dim_sweep_curves(q: int, dims: Sequence[int], lengths: Sequence[int]) -> List[RateCurvePoint]:
    points: List[RateCurvePoint] = []
    for n in dims:
        points.extend(_exact_series(f"{n}D q={q}", q, n))
    return points


@_registry.register(CurveKind.PRODUCT_COMPARE)
def product_compare_curves(q: int, dims: Sequence[int], lengths: Sequence[int]) -> List[RateCurvePoint]:
    points = _exact_series(f"2D q={q}", q, 2)
    label = f"product q={q}"
    for d_component in range(2, q + 1):
        product = product_code_checks(q, d_component)
        points.append(RateCurvePoint(
            label, product.d_min, product.N, product.K,
            Fraction(product.d_min, product.N), Fraction(product.K, product.N),
        ))
    return points


@_registry.register(CurveKind.GV_COMPARE)
def gv_compare_curves(q: int, dims: Sequence[int], lengths: Sequence[int]) -> List[RateCurvePoint]:
    points: List[RateCurvePoint] = []
    for length in lengths:
        rows = gv_relation(q, length)
        short_label, gv_label = f"shortened N={length}", f"GV N={length}"
        points.extend(
            RateCurvePoint(short_label, r.d, length, r.K_shortened, Fraction(r.d, length), Fraction(r.K_shortened, length))
            for r in rows
        )
        points.extend(
            RateCurvePoint(gv_label, r.d, length, r.k_gv, Fraction(r.d, length), Fraction(r.k_gv, length))
            for r in rows
        )
    return points


def emit_curves(
    kind: Union[CurveKind, str],
    q: Optional[int] = None,
    dims: Optional[Sequence[int]] = None,
    lengths: Optional[Sequence[int]] = None,
) -> List[RateCurvePoint]:
    kind = CurveKind(kind)
    q = q if q is not None else DEFAULT_Q[kind]
    dims = tuple(dims) if dims else DEFAULT_DIMS
    lengths = tuple(lengths) if lengths else DEFAULT_LENGTHS
    if kind is CurveKind.GV_COMPARE and any(length > q * q for length in lengths):
        raise EmptyRegion(f"lengths {list(lengths)} exceed the 2-D code length q^2={q * q}")

    points = _registry.get_builder(kind)(q, dims, lengths)
    logger.info("curves emitted", kind=kind.value, q=q, points=len(points))
    return points


def series_labels(points: Iterable[RateCurvePoint]) -> List[str]:
    """labels in first-seen order"""
    return list(dict.fromkeys(p.label for p in points))


def shared_points(
    points: Sequence[RateCurvePoint], first: str, second: str
) -> List[Tuple[RateCurvePoint, RateCurvePoint]]:
    """Pairs of points from two series at equal d/N"""
    by_ratio = {p.d_over_N: p for p in points if p.label == second}
    return [(p, by_ratio[p.d_over_N]) for p in points if p.label == first and p.d_over_N in by_ratio]


def dominates(points: Sequence[RateCurvePoint], first: str, second: str) -> bool:
    """first K/N >= second K/N at every shared d/N"""
    return all(a.K_over_N >= b.K_over_N for a, b in shared_points(points, first, second))


def to_dataframe(points: Sequence[RateCurvePoint]) -> pd.DataFrame:
    df = pd.DataFrame(
        [
            {
                "series": p.label,
                "d": p.d,
                "N": p.N,
                "K": p.K,
                "d_num": p.d_over_N.numerator,
                "d_den": p.d_over_N.denominator,
                "k_num": p.K_over_N.numerator,
                "k_den": p.K_over_N.denominator,
                "d_over_N": float(p.d_over_N),
                "k_over_N": float(p.K_over_N),
            }
            for p in points
        ],
        columns=CSV_COLUMNS,
    )
    df["K"] = df["K"].astype("Int64")
    return df


def write_csv(points: Sequence[RateCurvePoint], path: Union[str, Path]) -> None:
    to_dataframe(points).to_csv(path, index=False, lineterminator="\n", float_format="%.6f", encoding="utf-8")


def curve_summary(kind: Union[CurveKind, str], q: int, points: Sequence[RateCurvePoint]) -> dict:
    """JSON summary printed by `curves` next to the CSV"""
    kind = CurveKind(kind)
    labels = series_labels(points)
    summary: dict = {
        "kind": kind.value,
        "q": q,
        "series": [{"label": label, "points": sum(1 for p in points if p.label == label)} for label in labels],
    }
    if kind is CurveKind.PRODUCT_COMPARE:
        summary["dominates"] = dominates(points, f"2D q={q}", f"product q={q}")
    if kind is CurveKind.GV_COMPARE:
        summary["gv_formula"] = GV_FORMULA
        relations = []
        for label in labels:
            if not label.startswith("shortened"):
                continue
            length = label.split("=", 1)[1]
            for code_point, gv_point in shared_points(points, label, f"GV N={length}"):
                comparison = GVComparison(d=code_point.d, length=code_point.N, K_shortened=code_point.K, k_gv=gv_point.K)
                relations.append(comparison.to_dict())
        summary["gv_relation"] = relations
    return summary
