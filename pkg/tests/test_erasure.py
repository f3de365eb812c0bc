from itertools import combinations

import numpy as np
import pytest

from mdrs.code import (
    ERASED,
    Codeword,
    ErasurePattern,
    Message,
    ReceivedWord,
    decode_erasures,
    encode,
    erase,
    simulate_erasure_channel,
    simulate_erasure_channel_async,
)
from mdrs.errors import Inconsistent, LengthMismatch, RankDeficient, SymbolOutOfRange


def _random_codewords(manager, spec, count, seed):
    region = manager.region(spec)
    rng = np.random.default_rng(seed)
    for coeffs in rng.integers(0, spec.q, size=(count, region.K)):
        message = Message.from_codes(region, coeffs)
        yield message, encode(message)


def test_all_two_erasure_patterns(make_spec, manager):
    spec = make_spec(3, 2, 3)
    G = manager.generator(spec)
    patterns = [ErasurePattern.from_indices(pair, spec.N) for pair in combinations(range(spec.N), 2)]
    assert len(patterns) == 36
    for message, codeword in _random_codewords(manager, spec, 100, seed=0):
        for pattern in patterns:
            assert decode_erasures(erase(codeword, pattern), G) == message


def test_random_three_erasures_q4(make_spec, manager):
    spec = make_spec(4, 2, 4)
    G = manager.generator(spec)
    rng = np.random.default_rng(1)
    for message, codeword in _random_codewords(manager, spec, 10_000, seed=2):
        size = int(rng.integers(0, 4))
        pattern = ErasurePattern.from_indices(rng.choice(spec.N, size=size, replace=False), spec.N)
        assert decode_erasures(erase(codeword, pattern), G) == message


SMALL_LENGTHS = ((2, 2), (2, 3), (3, 2), (2, 4), (4, 2))


@pytest.mark.parametrize("q,n", SMALL_LENGTHS)
def test_every_correctable_pattern(make_spec, manager, q, n):
    N = q ** n
    for d in range(1, N + 1):
        spec = make_spec(q, n, d)
        G = manager.generator(spec)
        message, codeword = next(_random_codewords(manager, spec, 1, seed=d))
        if N <= 9:
            sizes = range(d)
        else:
            # erasing fewer coordinates keeps a superset of the columns
            sizes = (d - 1,)
        for size in sizes:
            for erased in combinations(range(N), size):
                pattern = ErasurePattern(erased, N)
                assert decode_erasures(erase(codeword, pattern), G) == message, (d, erased)


def test_no_erasures_round_trip(make_spec, manager):
    spec = make_spec(5, 2, 4)
    G = manager.generator(spec)
    for message, codeword in _random_codewords(manager, spec, 5, seed=3):
        assert decode_erasures(ReceivedWord(spec, codeword.symbols), G) == message


def test_too_many_erasures_rank_deficient(make_spec, manager):
    spec = make_spec(3, 2, 3)
    G = manager.generator(spec)
    _, codeword = next(_random_codewords(manager, spec, 1, seed=4))
    # 5 kept coordinates cannot determine K = 6 coefficients
    rx = erase(codeword, ErasurePattern.from_indices([0, 1, 2, 3], spec.N))
    with pytest.raises(RankDeficient) as exc_info:
        decode_erasures(rx, G)
    assert exc_info.value.erased == [0, 1, 2, 3]
    assert exc_info.value.rank < G.rows
    assert exc_info.value.exit_code == 4


def test_everything_erased(make_spec, manager):
    spec = make_spec(3, 2, 3)
    with pytest.raises(RankDeficient):
        decode_erasures(ReceivedWord(spec, (ERASED,) * spec.N), manager.generator(spec))


def test_corrupted_symbol_is_inconsistent(make_spec, manager):
    spec = make_spec(3, 2, 3)
    G = manager.generator(spec)
    _, codeword = next(_random_codewords(manager, spec, 1, seed=5))
    symbols = list(codeword.symbols)
    symbols[4] = (symbols[4] + 1) % spec.q
    with pytest.raises(Inconsistent) as exc_info:
        decode_erasures(ReceivedWord(spec, tuple(symbols)), G)
    assert exc_info.value.exit_code == 5


def test_pattern_validation(make_spec):
    with pytest.raises(ValueError):
        ErasurePattern((2, 1), 9)
    with pytest.raises(ValueError):
        ErasurePattern.from_indices([1, 1], 9)
    with pytest.raises(ValueError):
        ErasurePattern((9,), 9)
    spec = make_spec(3, 2, 3)
    with pytest.raises(LengthMismatch):
        ReceivedWord(spec, (0,) * 8)
    with pytest.raises(LengthMismatch):
        erase(Codeword(spec, (0,) * 9), ErasurePattern((0,), 16))


def test_received_word_pattern(make_spec):
    rx = ReceivedWord(make_spec(3, 2, 3), (0, ERASED, 1, 2, ERASED, 0, 0, 0, 0))
    assert rx.pattern.erased == (1, 4)
    assert len(rx.pattern) == 2


def test_channel_without_erasures(make_spec):
    report = simulate_erasure_channel(make_spec(3, 2, 3), epsilon=0.0, trials=100, seed=1)
    assert report.recovered == 100
    assert report.failure_rate == 0.0
    assert report.to_dict()["prng"] == "PCG64"


def test_channel_all_erased(make_spec):
    report = simulate_erasure_channel(make_spec(3, 2, 3), epsilon=1.0, trials=10, seed=1)
    assert report.rank_deficient == 10
    assert report.failure_rate == 1.0


def test_channel_arguments(make_spec):
    spec = make_spec(3, 2, 3)
    with pytest.raises(ValueError):
        simulate_erasure_channel(spec, epsilon=1.5, trials=10, seed=1)
    with pytest.raises(ValueError):
        simulate_erasure_channel(spec, epsilon=0.1, trials=0, seed=1)


@pytest.mark.asyncio
async def test_channel_independent_of_threads(make_spec):
    spec = make_spec(4, 2, 4)
    single = await simulate_erasure_channel_async(spec, epsilon=0.2, trials=200, seed=9, threads=1)
    many = await simulate_erasure_channel_async(spec, epsilon=0.2, trials=200, seed=9, threads=3)
    assert single == many
    assert single.miscorrected == 0
    assert single.recovered + single.rank_deficient == 200


def test_out_of_range_symbol_rejected(make_spec, manager):
    spec = make_spec(3, 2, 3)
    G = manager.generator(spec)
    with pytest.raises(SymbolOutOfRange):
        ReceivedWord(spec, (7,) + (0,) * 8)
    with pytest.raises(SymbolOutOfRange):
        decode_erasures(ReceivedWord(spec, (ERASED, -1) + (0,) * 7), G)
    # erasure slots are not range checked
    assert ReceivedWord(spec, (ERASED,) * 9).pattern.erased == tuple(range(9))
