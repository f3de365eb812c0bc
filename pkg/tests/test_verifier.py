import pytest

from mdrs.code import (
    min_weight_exhaustive,
    min_weight_exhaustive_async,
    min_weight_of_generator,
    min_weight_sampled,
    scan_min_weight_async,
)
from mdrs.code.verifier import message_digits
from mdrs.errors import BudgetExceeded


def test_q3_d3_exhaustive(make_spec):
    report = min_weight_exhaustive(make_spec(3, 2, 3))
    assert report.observed_min_weight == 3
    assert report.codewords_enumerated == 728
    assert report.exhaustive
    assert report.attained
    assert report.to_dict()["observed"] == 3
    assert "seed" not in report.to_dict()


def test_distance_property_q3(make_spec):
    for d in range(2, 10):
        report = min_weight_exhaustive(make_spec(3, 2, d))
        assert report.observed_min_weight >= d, d
        # the root-counting bound is met exactly on the full grid
        assert report.observed_min_weight == report.guaranteed_d, d


def test_distance_property_binary(make_spec):
    for n in (2, 3):
        for d in range(1, 2 ** n + 1):
            report = min_weight_exhaustive(make_spec(2, n, d))
            assert report.observed_min_weight >= d, (n, d)
            assert report.observed_min_weight == report.guaranteed_d, (n, d)


def test_distance_property_q4_d4(make_spec):
    report = min_weight_exhaustive(make_spec(4, 2, 4), threads=4)
    assert report.codewords_enumerated == 4 ** 11 - 1
    assert report.observed_min_weight >= 4


def test_one_dimensional_codes_are_mds(make_spec):
    for q in (2, 3, 4, 5, 7):
        for d in range(1, q + 1):
            report = min_weight_exhaustive(make_spec(q, 1, d))
            assert report.observed_min_weight == d, (q, d)


def test_budget_exceeded(make_spec):
    with pytest.raises(BudgetExceeded) as exc_info:
        min_weight_exhaustive(make_spec(3, 2, 3), budget=100)
    assert exc_info.value.required == 729
    assert exc_info.value.exit_code == 6


def test_zero_budget_is_not_the_default(make_spec):
    with pytest.raises(BudgetExceeded) as exc_info:
        min_weight_exhaustive(make_spec(2, 1, 2), budget=0)
    assert exc_info.value.budget == 0


def test_budget_from_settings(make_spec, monkeypatch):
    monkeypatch.setenv("MDRS_BUDGET", "50")
    from mdrs.config import reset_settings
    reset_settings()
    with pytest.raises(BudgetExceeded):
        min_weight_exhaustive(make_spec(3, 2, 3))


def test_message_digits_counter():
    digits = message_digits(0, 9, 3, 2)
    assert digits.tolist() == [[0, 0], [1, 0], [2, 0], [0, 1], [1, 1], [2, 1], [0, 2], [1, 2], [2, 2]]


@pytest.mark.asyncio
async def test_scan_independent_of_threads(make_spec, manager):
    G = manager.generator(make_spec(3, 2, 4)).matrix
    single = await scan_min_weight_async(G, threads=1, chunk=16)
    many = await scan_min_weight_async(G, threads=4, chunk=7)
    assert single == many


@pytest.mark.asyncio
async def test_exhaustive_async(make_spec):
    report = await min_weight_exhaustive_async(make_spec(2, 3, 4), threads=2)
    assert report.observed_min_weight >= 4


def test_min_weight_of_generator(make_spec, manager):
    G = manager.generator(make_spec(3, 2, 3)).matrix
    assert min_weight_of_generator(G) == (3, 728)


def test_sampled_report(make_spec):
    spec = make_spec(3, 2, 3)
    first = min_weight_sampled(spec, trials=300, seed=11)
    second = min_weight_sampled(spec, trials=300, seed=11)
    assert first == second
    assert not first.exhaustive
    assert first.observed_min_weight >= 3
    assert first.to_dict()["prng"] == "PCG64"
    assert first.to_dict()["seed"] == 11
    with pytest.raises(ValueError):
        min_weight_sampled(spec, trials=0, seed=1)


def test_strict_excess_over_design(make_spec):
    # q=3, d=5 admits only affine polynomials: every nonzero one vanishes on a line
    report = min_weight_exhaustive(make_spec(3, 2, 5))
    assert report.observed_min_weight == 6
    assert not report.attained


def test_constant_code(make_spec):
    report = min_weight_exhaustive(make_spec(2, 2, 4))
    assert report.observed_min_weight == 4
    assert report.codewords_enumerated == 1
