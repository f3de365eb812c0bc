"""
Code Manager
부호 사양 / 차수 영역 / 생성 행렬 캐시 관리자
Process-wide cache of code specs, degree regions and generator matrices
"""

import threading
from datetime import datetime
from typing import Any, Dict, List, Tuple

import structlog

from ..field import field_new
from .encoder import GeneratorMatrix, generator_matrix
from .params import CodeSpec, DegreeRegion, build_region

logger = structlog.get_logger(__name__)

HISTORY_LIMIT = 1000


class CodeManager:
    """Builds each region / generator once per (p, m, n, d)"""

    def __init__(self):
        self._specs: Dict[Tuple[int, int, int, int], CodeSpec] = {}
        self._regions: Dict[CodeSpec, DegreeRegion] = {}
        self._generators: Dict[CodeSpec, GeneratorMatrix] = {}
        self._history: List[Dict[str, Any]] = []
        self._hits = 0
        self._misses = 0
        self._lock = threading.RLock()

    def spec(self, p: int, m: int, n: int, d: int) -> CodeSpec:
        key = (p, m, n, d)
        with self._lock:
            if key not in self._specs:
                self._specs[key] = CodeSpec(field=field_new(p, m), n=n, d=d)
            return self._specs[key]

    def region(self, spec: CodeSpec) -> DegreeRegion:
        with self._lock:
            region = self._regions.get(spec)
            if region is not None:
                self._hits += 1
                return region
            self._misses += 1
            region = build_region(spec)
            self._regions[spec] = region
            self._add_to_history("region", spec)
            return region

    def generator(self, spec: CodeSpec) -> GeneratorMatrix:
        with self._lock:
            G = self._generators.get(spec)
            if G is not None:
                self._hits += 1
                return G
            self._misses += 1
            G = generator_matrix(self.region(spec))
            self._generators[spec] = G
            self._add_to_history("generator", spec)
            logger.info("generator cached", q=spec.q, n=spec.n, d=spec.d, K=G.rows, N=G.cols)
            return G

    def stats(self) -> Dict[str, Any]:
        with self._lock:
            return {
                "specs": len(self._specs),
                "regions": len(self._regions),
                "generators": len(self._generators),
                "hits": self._hits,
                "misses": self._misses,
                "history_count": len(self._history),
            }

    def history(self, limit: int = 50) -> List[Dict[str, Any]]:
        with self._lock:
            return list(self._history[-limit:])

    def clear(self) -> None:
        with self._lock:
            self._specs.clear()
            self._regions.clear()
            self._generators.clear()
            self._history.clear()
            self._hits = 0
            self._misses = 0

    def _add_to_history(self, action: str, spec: CodeSpec) -> None:
        self._history.append({
            "timestamp": datetime.now().isoformat(),
            "action": action,
            "q": spec.q,
            "n": spec.n,
            "d": spec.d,
        })
        if len(self._history) > HISTORY_LIMIT:
            self._history = self._history[-HISTORY_LIMIT:]


_code_manager = CodeManager()


def get_code_manager() -> CodeManager:
    return _code_manager
