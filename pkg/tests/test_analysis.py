from fractions import Fraction

import numpy as np
import pytest

from mdrs.analysis import (
    gv_dimension,
    gv_relation,
    product_code_checks,
    product_rate_relation,
    shorten,
)
from mdrs.code import min_weight_of_generator
from mdrs.errors import InvalidComponent, InvalidShortening


def test_product_code_parameters():
    params = product_code_checks(8, 3)
    assert (params.N, params.K, params.check_symbols, params.d_min) == (64, 36, 28, 9)
    assert params.identity_checks == (3 - 1) * (16 - 3 + 1)
    assert product_code_checks(8, 1).check_symbols == 0
    assert product_code_checks(16, 4).check_symbols == 87


def test_product_identity_for_every_component():
    for q in (8, 16):
        for d_component in range(1, q + 1):
            params = product_code_checks(q, d_component)
            assert params.check_symbols == params.identity_checks
            exact = product_rate_relation(q, Fraction(params.d_min, params.N))
            assert exact == 1 - Fraction(params.K, params.N)


def test_product_rate_relation():
    assert product_rate_relation(8, Fraction(9, 64)) == Fraction(7, 16)
    assert product_rate_relation(16, Fraction(1, 256)) == 0
    assert product_rate_relation(8, 9 / 64) == pytest.approx(7 / 16)
    # not a rational square: float fallback
    assert isinstance(product_rate_relation(8, Fraction(1, 2)), float)
    with pytest.raises(ValueError):
        product_rate_relation(8, 0)
    with pytest.raises(ValueError):
        product_rate_relation(8, Fraction(3, 2))


def test_invalid_component():
    with pytest.raises(InvalidComponent):
        product_code_checks(8, 9)
    with pytest.raises(InvalidComponent):
        product_code_checks(8, 0)


def test_gv_dimension():
    assert gv_dimension(32, 3, 16) == 29
    assert gv_dimension(32, 5, 16) == 26
    assert gv_dimension(32, 1, 16) == 32
    values = [gv_dimension(64, d, 16) for d in range(1, 65)]
    assert values == sorted(values, reverse=True)
    with pytest.raises(ValueError):
        gv_dimension(32, 33, 16)


def test_gv_relation_at_length_32():
    rows = gv_relation(16, 32, [3, 5])
    assert rows[0].K_shortened == 29
    assert rows[0].k_gv == 29
    assert rows[0].relation == "equal"
    assert rows[1].to_dict()["k_gv"] == 26
    for row in gv_relation(16, 32):
        assert row.K_shortened >= 1


def test_shorten_q3(make_spec):
    short = shorten(make_spec(3, 2, 3), 2)
    assert (short.N, short.K, short.d) == (7, 4, 3)
    assert short.generator.shape == (4, 7)
    assert int(np.linalg.matrix_rank(short.generator)) == 4
    assert len(short.deleted) == 2
    assert set(short.deleted) <= set(short.information_set)
    observed, enumerated = min_weight_of_generator(short.generator)
    assert observed >= 3
    assert enumerated == 80


def test_shorten_zero_keeps_row_space(make_spec, manager):
    spec = make_spec(3, 2, 4)
    short = shorten(spec, 0)
    G = manager.generator(spec).matrix
    assert (short.N, short.K) == (spec.N, G.shape[0])
    stacked = type(G)(np.vstack([G.view(np.ndarray), short.generator.view(np.ndarray)]))
    assert int(np.linalg.matrix_rank(stacked)) == G.shape[0]


def test_shorten_q16_to_length_32(make_spec):
    short = shorten(make_spec(16, 2, 3), 224)
    assert (short.N, short.K, short.d) == (32, 29, 3)
    assert short.to_dict()["s"] == 224


def test_invalid_shortening(make_spec):
    spec = make_spec(3, 2, 3)
    with pytest.raises(InvalidShortening):
        shorten(spec, 6)
    with pytest.raises(InvalidShortening):
        shorten(spec, -1)
