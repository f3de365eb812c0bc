import pytest

from mdrs.analysis import check_table, info_table, info_totals
from mdrs.code import check_count, check_count_small_d

Q5_INFO_COUNTS = {3: 22, 4: 20, 5: 17, 6: 15, 7: 13, 8: 13, 9: 11, 10: 10}

# q = 5: d_min -> K_m for m = 0, 1, ...
Q5_K_PROFILE = {
    3: [4, 4, 4, 3, 2],
    4: [4, 4, 3, 3, 1],
    5: [4, 3, 3, 2, 0],
    6: [3, 3, 3, 2],
    7: [3, 3, 2, 1],
    8: [3, 3, 2, 1],
    9: [3, 2, 2, 0],
    10: [3, 2, 1, 0],
}

# d_min -> N - K for n = 2, 3, 4, 5 (any q >= d_min)
CHECK_SYMBOLS = {
    2: [1, 1, 1, 1],
    3: [3, 4, 5, 6],
    4: [5, 7, 9, 11],
    5: [8, 13, 19, 26],
    6: [10, 16, 23, 31],
    7: [14, 25, 39, 56],
    8: [16, 28, 43, 61],
    9: [20, 38, 63, 96],
    10: [23, 44, 73, 111],
    11: [27, 53, 89, 136],
    12: [29, 56, 93, 141],
    13: [35, 74, 133, 216],
    14: [37, 77, 137, 221],
    15: [41, 86, 153, 246],
    16: [45, 95, 169, 271],
}


def test_info_table():
    table = info_table()
    assert info_totals(table).to_dict() == Q5_INFO_COUNTS
    assert sorted(table["d_min"].unique()) == sorted(Q5_K_PROFILE)
    # m = 4 has no admitted coefficient from d = 6 on
    assert table[table["d_min"] == 6]["m"].max() == 3


@pytest.mark.parametrize("d", sorted(Q5_K_PROFILE))
def test_info_table_column(d):
    column = info_table()
    column = column[column["d_min"] == d]
    assert column["K_m"].tolist() == Q5_K_PROFILE[d]
    assert column["m"].tolist() == list(range(len(Q5_K_PROFILE[d])))
    assert sum(k + 1 for k in Q5_K_PROFILE[d]) == Q5_INFO_COUNTS[d]


def test_check_table_every_cell():
    table = check_table()
    assert table.shape == (15, 4)
    assert list(table.columns) == ["n=2", "n=3", "n=4", "n=5"]
    assert list(table.index) == sorted(CHECK_SYMBOLS)
    for d, row in CHECK_SYMBOLS.items():
        assert table.loc[d].tolist() == row, d
        for n, expected in zip(range(2, 6), row):
            assert check_count_small_d(d, n) == expected


def test_check_table_matches_q16_regions(make_spec):
    table = check_table(n_values=range(2, 5))
    for d in table.index:
        for n in (2, 3, 4):
            assert table.loc[d, f"n={n}"] == check_count(make_spec(16, n, d))


def test_five_dimensional_column_matches_regions(make_spec):
    # q = 16, n = 5 has N = 2^20; counting the region is still cheap
    for d, row in CHECK_SYMBOLS.items():
        assert check_count(make_spec(16, 5, d)) == row[3]


def test_tables_are_deterministic():
    assert info_table().to_csv() == info_table().to_csv()
    assert check_table().to_csv() == check_table().to_csv()
