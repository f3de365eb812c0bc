"""
Information- and check-symbol tables
정보 심볼 / 검사 심볼 표
"""

from typing import Iterable

import pandas as pd

from ..code.params import CodeSpec, check_count_small_d, info_count, k_profile
from ..field import field_for_order

INFO_Q = 5
INFO_D_RANGE = range(3, 11)
CHECK_D_RANGE = range(2, 17)
CHECK_N_RANGE = range(2, 6)


def info_table(q: int = INFO_Q, d_values: Iterable[int] = INFO_D_RANGE) -> pd.DataFrame:
    """Long form: one row per (d_min, m) with K_m and the code's K"""
    field = field_for_order(q)
    rows = []
    for d in d_values:
        spec = CodeSpec(field=field, n=2, d=d)
        K = info_count(spec)
        for (m,), K_m in sorted(k_profile(spec).items()):
            rows.append({"d_min": d, "m": m, "K_m": K_m, "K": K})
    return pd.DataFrame(rows, columns=["d_min", "m", "K_m", "K"])


def info_totals(table: pd.DataFrame) -> pd.Series:
    """d_min -> K"""
    return table.groupby("d_min")["K"].first()


def check_table(d_values: Iterable[int] = CHECK_D_RANGE, n_values: Iterable[int] = CHECK_N_RANGE) -> pd.DataFrame:
    """N - K for d <= q, indexed by d_min with one column per n"""
    d_values, n_values = list(d_values), list(n_values)
    data = {
        f"n={n}": [check_count_small_d(d, n) for d in d_values]
        for n in n_values
    }
    return pd.DataFrame(data, index=pd.Index(d_values, name="d_min"))
