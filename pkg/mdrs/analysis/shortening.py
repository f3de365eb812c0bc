"""
Information-set shortening
정보 집합 기반 부호 단축

The reduced row echelon form of G is systematic on the first K linearly
independent columns (the information set). Keeping the first K - s rows
selects the subcode that vanishes on the last s information positions;
those s coordinates are then deleted.
"""

from dataclasses import dataclass
from typing import Tuple

import galois
import numpy as np
import structlog

from ..code.manager import get_code_manager
from ..code.params import CodeSpec
from ..errors import InvalidShortening

logger = structlog.get_logger(__name__)


@dataclass(frozen=True)
class ShortenedCode:
    base: CodeSpec
    s: int
    N: int
    K: int
    d: int  # lower bound, inherited from the base code
    generator: galois.FieldArray
    information_set: Tuple[int, ...]
    deleted: Tuple[int, ...]

    def to_dict(self) -> dict:
        return {
            "q": self.base.q,
            "n": self.base.n,
            "base_d": self.base.d,
            "s": self.s,
            "N": self.N,
            "K": self.K,
            "d_lower_bound": self.d,
            "deleted": list(self.deleted),
        }


def information_set(G: galois.FieldArray) -> Tuple[galois.FieldArray, Tuple[int, ...]]:
    """(RREF of G, pivot columns); G must have full row rank"""
    reduced = G.row_reduce()
    nonzero = reduced.view(np.ndarray) != 0
    pivots = tuple(int(np.argmax(row)) for row in nonzero if row.any())
    return reduced, pivots


def shorten(spec: CodeSpec, s: int) -> ShortenedCode:
    G = get_code_manager().generator(spec)
    K, N = G.rows, G.cols
    if not 0 <= s < K:
        raise InvalidShortening(f"s={s} must lie in [0, K={K})")

    reduced, pivots = information_set(G.matrix)
    deleted = pivots[K - s:]
    removed = set(deleted)
    kept_columns = [c for c in range(N) if c not in removed]
    generator = reduced[: K - s][:, kept_columns]

    logger.info("code shortened", q=spec.q, n=spec.n, d=spec.d, s=s, N=N - s, K=K - s)
    return ShortenedCode(
        base=spec,
        s=s,
        N=N - s,
        K=K - s,
        d=spec.d,
        generator=generator,
        information_set=pivots,
        deleted=deleted,
    )
