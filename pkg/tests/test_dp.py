import random

import pytest

from translocmatch.core import SearchConfig
from translocmatch.counters import WorkCounters
from translocmatch.dp import FactorTable, dp_search, next_factor_column
from translocmatch.oracle import cost_set, oracle_search

from _reference import full_matrix_search
from conftest import rand_instance, rand_string


def _feed(pattern, text):
    table = FactorTable(pattern)
    for ch in text:
        table.advance(ch)
    return table


def test_factor_sets_worked_example():
    table = _feed("cattcatgatcat", "atcat")
    assert table.positions_with_suffix(3) == [3, 7, 13]
    assert table.positions_with_suffix(2) == [3, 7, 10, 13]


def test_factor_sets_nest():
    table = _feed("cattcatgatcat", "atcatgactt")
    for k in range(2, 6):
        assert set(table.positions_with_suffix(k)) <= set(table.positions_with_suffix(k - 1))


def test_first_column_base_case():
    x = "abca"
    col = next_factor_column([0] * (len(x) + 1), x, "a")
    assert col == [0, 1, 0, 0, 1]


def test_factor_values_match_direct_suffix_lengths(rng):
    for _ in range(40):
        x = rand_string(rng, rng.randint(1, 8), 2)
        y = rand_string(rng, rng.randint(1, 12), 2)
        table = _feed(x, y)
        col = table.column()
        for i in range(1, len(x) + 1):
            best = 0
            for k in range(1, min(i, len(y)) + 1):
                if x[i - k : i] == y[len(y) - k :]:
                    best = k
            assert col[i] == best


def test_rolling_window_bounds():
    table = _feed("abc", "aaaaaa")
    table.column(6)
    table.column(3)
    with pytest.raises(ValueError):
        table.column(2)  # older than m columns back
    with pytest.raises(ValueError):
        table.column(7)


def test_worked_pair_positions():
    cfg = SearchConfig(delta=2, variant="c")
    report = dp_search("gtgaccgtccag", "ggatcccagcgt", cfg)
    assert report.positions == (0,)
    report = dp_search("gtgaccgtccag", "ggatcccagcgt", SearchConfig(delta=2, variant="d"))
    assert 0 in report.cost_sets
    assert 2 in report.cost_sets[0]


def test_single_swap_window():
    assert dp_search("ab", "ba", SearchConfig(delta=1, variant="c")).positions == (0,)


def test_rolling_equals_full_matrix(rng):
    for _ in range(150):
        x, y, delta, _ = rand_instance(rng, max_m=8, max_n=32)
        positions, masks, _ = full_matrix_search(x, y, delta)
        got_c = dp_search(x, y, SearchConfig(delta=delta, variant="c"))
        assert list(got_c.positions) == positions
        got_d = dp_search(x, y, SearchConfig(delta=delta, variant="d"))
        want = {
            pos: tuple(t for t in range(delta + 1) if (mask >> t) & 1)
            for pos, mask in masks.items()
        }
        assert got_d.cost_sets == want


def test_block_witnesses_confirmed_by_direct_checks(rng):
    # whenever the reference records cost t at (i, j) through a swapped
    # block (h, k), the two blocks and the remaining prefix check out
    for _ in range(40):
        x, y, delta, _ = rand_instance(rng, max_m=7, max_n=20)
        _, _, witnesses = full_matrix_search(x, y, delta)
        for (i, j, t), (h, k) in witnesses.items():
            assert x[i - h - k : i - k] == y[j - h : j]
            assert x[i - k : i] == y[j - h - k : j - h]
            rest = i - h - k
            if rest:
                prefix_costs = cost_set(x[:rest], y[j - h - k - rest : j - h - k], delta)
            else:
                prefix_costs = {0}
            assert t - 1 in prefix_costs


def test_variant_consistency(rng):
    for _ in range(60):
        x, y, delta, _ = rand_instance(rng, max_m=8, max_n=30)
        rep_b = dp_search(x, y, SearchConfig(delta=delta, variant="b"))
        rep_c = dp_search(x, y, SearchConfig(delta=delta, variant="c"))
        rep_d = dp_search(x, y, SearchConfig(delta=delta, variant="d"))
        rep_a = dp_search(x, y, SearchConfig(delta=delta, variant="a"))
        assert rep_b.count == len(rep_c.positions)
        assert set(rep_c.positions) == set(rep_d.cost_sets)
        assert all(rep_d.cost_sets[p] for p in rep_d.cost_sets)
        assert rep_a.count >= rep_b.count


def test_positions_strictly_increasing(rng):
    for _ in range(40):
        x, y, delta, _ = rand_instance(rng)
        positions = dp_search(x, y, SearchConfig(delta=delta, variant="c")).positions
        assert list(positions) == sorted(set(positions))
        assert all(0 <= p <= len(y) - len(x) for p in positions)


def test_matches_oracle(rng):
    for _ in range(250):
        x, y, delta, _ = rand_instance(rng, max_m=8, max_n=30)
        for variant in "abcd":
            cfg = SearchConfig(delta=delta, variant=variant)
            assert dp_search(x, y, cfg) == oracle_search(x, y, cfg)


def test_guard_counter_is_input_independent():
    c1 = WorkCounters()
    dp_search("abab", "aabbabab", SearchConfig(delta=1), counters=c1)
    c2 = WorkCounters()
    dp_search("aaaa", "aaaaaaaa", SearchConfig(delta=1), counters=c2)
    assert c1.dp_guard_evals == c2.dp_guard_evals > 0
