"""
Erasure decoding against the generator matrix
생성 행렬 기반 소거 복호기

The unerased coordinates give the linear system m · G_S = r_S. It is solved
by row reduction over GF(q) (pivot = first nonzero entry in the column, as
galois' row_reduce does). A unique solution exists whenever at most d - 1
coordinates are erased, since two codewords agree on at most N - d places.
"""

from __future__ import annotations

import asyncio
import time
from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np
import structlog

from ..config import get_settings
from ..errors import Inconsistent, LengthMismatch, RankDeficient
from .encoder import Codeword, GeneratorMatrix, Message, check_codes
from .manager import get_code_manager
from .params import CodeSpec
from .verifier import PRNG_NAME, fresh_seed

logger = structlog.get_logger(__name__)

ERASED = None


@dataclass(frozen=True)
class ErasurePattern:
    erased: Tuple[int, ...]
    N: int

    def __post_init__(self):
        if list(self.erased) != sorted(set(self.erased)):
            raise ValueError("erased indices must be sorted and distinct")
        if self.erased and not (0 <= self.erased[0] and self.erased[-1] < self.N):
            raise ValueError(f"erased index outside [0, {self.N})")

    @classmethod
    def from_indices(cls, indices: Iterable[int], N: int) -> "ErasurePattern":
        indices = [int(i) for i in indices]
        if len(set(indices)) != len(indices):
            raise ValueError("erased indices must be distinct")
        return cls(tuple(sorted(indices)), N)

    def __len__(self) -> int:
        return len(self.erased)


@dataclass(frozen=True)
class ReceivedWord:
    """N slots, each an element code or ERASED (None)"""

    spec: CodeSpec
    symbols: Tuple[Optional[int], ...]

    def __post_init__(self):
        if len(self.symbols) != self.spec.N:
            raise LengthMismatch(f"received word has {len(self.symbols)} slots, expected N={self.spec.N}")
        check_codes(self.symbols, self.spec.q, "symbol")

    @property
    def pattern(self) -> ErasurePattern:
        return ErasurePattern(tuple(c for c, s in enumerate(self.symbols) if s is ERASED), self.spec.N)


@dataclass(frozen=True)
class ChannelReport:
    spec: CodeSpec
    epsilon: float
    trials: int
    recovered: int
    rank_deficient: int
    miscorrected: int
    seed: int
    prng: str = PRNG_NAME

    @property
    def failure_rate(self) -> float:
        return (self.trials - self.recovered) / self.trials

    def to_dict(self) -> dict:
        return {
            "q": self.spec.q,
            "n": self.spec.n,
            "d": self.spec.d,
            "epsilon": self.epsilon,
            "trials": self.trials,
            "recovered": self.recovered,
            "rank_deficient": self.rank_deficient,
            "miscorrected": self.miscorrected,
            "failure_rate": self.failure_rate,
            "seed": self.seed,
            "prng": self.prng,
        }


def erase(codeword: Codeword, pattern: ErasurePattern) -> ReceivedWord:
    if pattern.N != codeword.spec.N:
        raise LengthMismatch(f"pattern is for N={pattern.N}, codeword has N={codeword.spec.N}")
    erased = set(pattern.erased)
    symbols = tuple(ERASED if c in erased else s for c, s in enumerate(codeword.symbols))
    return ReceivedWord(codeword.spec, symbols)


def _solve(G: GeneratorMatrix, symbols: Sequence[Optional[int]]) -> List[int]:
    GF = type(G.matrix)
    K = G.rows
    kept = [c for c, s in enumerate(symbols) if s is not ERASED]
    erased = [c for c, s in enumerate(symbols) if s is ERASED]
    if not kept:
        raise RankDeficient(f"all {len(symbols)} coordinates erased", erased=erased, rank=0)

    system = G.matrix[:, kept].T.view(np.ndarray)
    rhs = np.asarray([symbols[c] for c in kept], dtype=system.dtype)[:, np.newaxis]
    reduced = GF(np.hstack((system, rhs))).row_reduce(ncols=K).view(np.ndarray)

    left = reduced[:, :K]
    nonzero_rows = left.any(axis=1)
    if reduced[~nonzero_rows, K].any():
        raise Inconsistent(
            f"unerased symbols are not a codeword restriction ({len(erased)} erasures); errors are out of contract"
        )
    rank = int(nonzero_rows.sum())
    if rank < K:
        raise RankDeficient(
            f"{len(erased)} erasures leave rank {rank} < K={K}; the message is not unique",
            erased=erased,
            rank=rank,
        )
    return [int(v) for v in reduced[:K, K]]


def decode_erasures(rx: ReceivedWord, G: GeneratorMatrix) -> Message:
    if rx.spec != G.spec:
        raise LengthMismatch(f"received word is for {rx.spec.to_dict()}, generator for {G.spec.to_dict()}")
    coeffs = _solve(G, rx.symbols)
    return Message(G.region, tuple(coeffs))


def _run_trials(G: GeneratorMatrix, messages: np.ndarray, codewords: np.ndarray, masks: np.ndarray) -> Tuple[int, int, int]:
    recovered = rank_deficient = miscorrected = 0
    for message, word, mask in zip(messages, codewords, masks):
        symbols = [ERASED if erased else int(s) for s, erased in zip(word, mask)]
        try:
            decoded = _solve(G, symbols)
        except RankDeficient:
            rank_deficient += 1
            continue
        if decoded == [int(c) for c in message]:
            recovered += 1
        else:
            miscorrected += 1
    return recovered, rank_deficient, miscorrected


async def simulate_erasure_channel_async(
    spec: CodeSpec,
    epsilon: float,
    trials: int,
    seed: Optional[int] = None,
    threads: Optional[int] = None,
) -> ChannelReport:
    """Encode random messages, erase each coordinate with probability epsilon, decode"""
    if not 0.0 <= epsilon <= 1.0:
        raise ValueError(f"epsilon must lie in [0, 1], got {epsilon}")
    if trials < 1:
        raise ValueError(f"trials must be >= 1, got {trials}")
    settings = get_settings()
    threads = threads or settings.threads
    seed = fresh_seed() if seed is None else seed

    G = get_code_manager().generator(spec)
    GF = type(G.matrix)

    # every random draw happens here, so the outcome does not depend on threads
    rng = np.random.default_rng(seed)
    messages = rng.integers(0, spec.q, size=(trials, G.rows), dtype=np.int64)
    masks = rng.random((trials, spec.N)) < epsilon
    codewords = (GF(messages) @ G.matrix).view(np.ndarray)

    per_worker = -(-trials // threads)
    semaphore = asyncio.Semaphore(threads)

    async def run(start: int) -> Tuple[int, int, int]:
        stop = start + per_worker
        async with semaphore:
            return await asyncio.to_thread(
                _run_trials, G, messages[start:stop], codewords[start:stop], masks[start:stop]
            )

    started = time.time()
    parts = await asyncio.gather(*(run(start) for start in range(0, trials, per_worker)))
    recovered, rank_deficient, miscorrected = (sum(values) for values in zip(*parts))
    if miscorrected:
        logger.error("erasure decoder returned a wrong message", count=miscorrected)
    logger.info(
        "channel simulation finished",
        q=spec.q, n=spec.n, d=spec.d, epsilon=epsilon, trials=trials,
        recovered=recovered, rank_deficient=rank_deficient, seed=seed,
        elapsed=round(time.time() - started, 3),
    )
    return ChannelReport(
        spec=spec,
        epsilon=epsilon,
        trials=trials,
        recovered=recovered,
        rank_deficient=rank_deficient,
        miscorrected=miscorrected,
        seed=seed,
    )


def simulate_erasure_channel(
    spec: CodeSpec,
    epsilon: float,
    trials: int,
    seed: Optional[int] = None,
    threads: Optional[int] = None,
) -> ChannelReport:
    return asyncio.run(simulate_erasure_channel_async(spec, epsilon, trials, seed, threads))
