import random

import pytest

from translocmatch.core import SearchConfig
from translocmatch.counters import WorkCounters
from translocmatch.oracle import cost_set, enumerate_images, oracle_search

from conftest import rand_string


def test_worked_pair_needs_two_translocations():
    s = cost_set("gtgaccgtccag", "ggatcccagcgt", 6)
    assert 2 in s
    assert min(s) == 2


def test_identity_is_zero():
    assert cost_set("abc", "abc", 0) == {0}


def test_single_swap():
    assert cost_set("ab", "ba", 1) == {1}


def test_equal_factors_swap_counts_as_one():
    # swapping two identical adjacent factors is a real (if useless) operation
    assert cost_set("aa", "aa", 1) == {0, 1}


def test_length_mismatch_rejected():
    with pytest.raises(ValueError):
        cost_set("ab", "abc", 1)
    with pytest.raises(ValueError):
        cost_set("ab", "ba", -1)


def test_zero_in_set_iff_equal(rng):
    for _ in range(200):
        m = rng.randint(1, 7)
        x = rand_string(rng, m, 2)
        z = rand_string(rng, m, 2)
        s = cost_set(x, z, 3)
        assert (0 in s) == (x == z)


def test_monotone_in_delta(rng):
    for _ in range(200):
        m = rng.randint(1, 8)
        x = rand_string(rng, m, rng.choice([2, 4]))
        z = rand_string(rng, m, 2)
        d1 = rng.randint(0, 2)
        d2 = rng.randint(d1, 4)
        s1 = cost_set(x, z, d1)
        s2 = cost_set(x, z, d2)
        assert s1 <= s2
        assert s1 == {t for t in s2 if t <= d1}


def test_memoization_does_not_change_results(rng):
    for _ in range(120):
        m = rng.randint(1, 9)
        sigma = rng.choice([2, 4])
        x = rand_string(rng, m, sigma)
        z = rand_string(rng, m, sigma)
        d = rng.randint(0, 3)
        assert cost_set(x, z, d, memo=True) == cost_set(x, z, d, memo=False)


def test_images_single_swap():
    assert enumerate_images("ab", 1) == {"ab", "ba"}


def test_images_need_two_positions():
    assert enumerate_images("a", 1) == {"a"}


def test_images_three_distinct_symbols():
    # enumerated by hand: copy-all plus the four proper factor swaps
    assert enumerate_images("abc", 1) == {"abc", "acb", "bac", "bca", "cab"}
    # a second operation needs two more untouched positions
    assert enumerate_images("abc", 2) == enumerate_images("abc", 1)


def test_images_are_length_and_multiset_preserving(rng):
    for _ in range(40):
        m = rng.randint(1, 6)
        x = rand_string(rng, m, rng.choice([2, 4]))
        for z in enumerate_images(x, rng.randint(0, 3)):
            assert len(z) == len(x)
            assert sorted(z) == sorted(x)


def test_images_agree_with_cost_set(rng):
    for _ in range(30):
        m = rng.randint(1, 6)
        x = rand_string(rng, m, 2)
        d = rng.randint(0, 2)
        images = enumerate_images(x, d)
        for z in images:
            assert cost_set(x, z, d)
        # nothing outside the image set is reachable
        for _ in range(20):
            z = rand_string(rng, m, 2)
            assert bool(cost_set(x, z, d)) == (z in images)


def test_image_counts_for_distinct_symbols():
    # frozen from the enumerator itself; growth stays below 3^(len-1)
    counts = [len(enumerate_images("abcdefghij"[:n], n)) for n in range(1, 7)]
    assert counts == [1, 2, 5, 12, 28, 65]
    for n, count in enumerate(counts, start=1):
        assert count <= 3 ** (n - 1) if n > 1 else count == 1


def test_images_guard_rejects_long_inputs():
    with pytest.raises(ValueError):
        enumerate_images("a" * 13, 1)


def test_search_window_fixtures():
    report = oracle_search("ab", "abba", SearchConfig(delta=1, variant="c"))
    assert report.positions == (0, 2)
    report = oracle_search("ab", "abba", SearchConfig(delta=1, variant="b"))
    assert report.count == 2
    report = oracle_search("ab", "abba", SearchConfig(delta=1, variant="d"))
    assert report.cost_sets == {0: (0,), 2: (1,)}


def test_search_variant_d_counts_match_window_sets(rng):
    for _ in range(30):
        x = rand_string(rng, 6, 4)
        y = rand_string(rng, 24, 4)
        report = oracle_search(x, y, SearchConfig(delta=2, variant="d"))
        for pos, costs in report.cost_sets.items():
            direct = cost_set(x, y[pos : pos + 6], 2)
            assert set(costs) == direct
            assert len(costs) == len(direct)


def test_search_rejects_bad_inputs():
    with pytest.raises(ValueError):
        oracle_search("", "abc", SearchConfig())
    with pytest.raises(ValueError):
        oracle_search("abcd", "abc", SearchConfig())


def test_counters_accumulate():
    counters = WorkCounters()
    oracle_search("abab", "babaab", SearchConfig(delta=1), counters=counters)
    assert counters.oracle_block_checks > 0
