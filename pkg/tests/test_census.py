from math import factorial

import pytest

from magma_forge import caps
from magma_forge.core.arithmetic import count_kset_partitions
from magma_forge.core.census import (
    brute_enumerate_prps,
    brute_enumerate_rps,
    brute_iso_classes_max_arity_cyclic,
    count_iso_classes_max_arity_cyclic,
    count_prps,
    count_regular_rps,
    count_rps,
    count_rps_factor,
    enumerate_regular_tables,
    iter_prps_magmas,
    iter_rps_magmas,
    prps_factors,
    regular_rps_factors,
    rps_factors,
)
from magma_forge.core.groups import cyclic_group
from magma_forge.core.magma import classify
from magma_forge.errors import CapExceeded, NotAdmissible, NotPrime


# 공식
def test_count_prps():
    assert count_prps(3, 2) == 36
    assert count_prps(5, 2) == 13_608_000
    assert prps_factors(5, 2) == [120, 113_400]


def test_prps_factors_are_ordered_kset_partitions():
    for k, factor in enumerate(prps_factors(7, 3), start=1):
        assert factor == factorial(7) * count_kset_partitions(7, k)


@pytest.mark.parametrize("m", [2, 3, 5, 7])
def test_count_prps_arity_one(m):
    assert count_prps(m, 1) == factorial(m)


def test_count_regular_rps():
    assert count_regular_rps(3, 2) == 2
    assert count_regular_rps(5, 2) == 4
    assert count_regular_rps(5, 3) == 36
    assert regular_rps_factors(5, 3) == [1, 4, 9]


def test_count_rps():
    assert count_rps(3, 2) == 2
    assert count_rps(5, 2) == 24
    assert count_rps(7, 2) == 2640
    assert rps_factors(7, 2)[0] == 1


def test_count_rps_factor_singletons():
    assert count_rps_factor(11, 1) == 1


def test_counts_need_admissible():
    with pytest.raises(NotAdmissible):
        count_prps(4, 2)
    with pytest.raises(NotAdmissible):
        count_rps(9, 3)


def test_count_rps_state_space_cap(monkeypatch):
    monkeypatch.setattr(caps, "table", 10)
    with pytest.raises(CapExceeded):
        count_rps_factor(7, 2)


@pytest.mark.parametrize("m, n", [(3, 2), (5, 2), (5, 3), (7, 2), (7, 3)])
def test_count_ordering(m, n):
    assert count_regular_rps(m, n) <= count_rps(m, n) <= count_prps(m, n)


def test_count_iso_classes():
    assert count_iso_classes_max_arity_cyclic(3) == 1
    assert count_iso_classes_max_arity_cyclic(5) == 6
    with pytest.raises(NotPrime):
        count_iso_classes_max_arity_cyclic(9)
    with pytest.raises(NotPrime):
        count_iso_classes_max_arity_cyclic(2)


# 전수 탐색 오라클
def test_brute_prps_matches_formula():
    assert brute_enumerate_prps(3, 2) == count_prps(3, 2) == 36
    assert brute_enumerate_prps(3, 1) == 6


@pytest.mark.parametrize("m, n", [(4, 2), (6, 2), (9, 3), (3, 3)])
def test_brute_oracles_vanish_when_inadmissible(m, n):
    assert brute_enumerate_prps(m, n) == 0
    assert brute_enumerate_rps(m, n) == 0


@pytest.mark.parametrize("m, n", [(3, 2), (5, 2), (5, 3)])
def test_brute_rps_matches_formula(m, n):
    assert brute_enumerate_rps(m, n) == count_rps(m, n)


@pytest.mark.slow
def test_brute_rps_seven():
    assert brute_enumerate_rps(7, 2) == 2640


def test_brute_counts_independent_of_workers():
    assert brute_enumerate_rps(5, 2, workers=2) == 24
    assert brute_enumerate_prps(3, 2, workers=2) == 36


def test_brute_search_budget(monkeypatch):
    monkeypatch.setattr(caps, "table", 5)
    with pytest.raises(CapExceeded):
        brute_enumerate_rps(5, 2)


def test_rps_stream_of_three(rps):
    found = list(iter_rps_magmas(3, 2))
    assert len(found) == 2
    assert rps in found
    assert all(classify(A).rps for A in found)


def test_rps_stream_limit():
    assert len(list(iter_rps_magmas(5, 2, limit=5))) == 5


def test_prps_stream_is_strongly_fair():
    found = list(iter_prps_magmas(3, 2))
    assert len(found) == 36
    assert all(classify(A).prps for A in found)
    assert sum(classify(A).conservative for A in found) == 2


def test_regular_tables_among_rps_five():
    every = set(iter_rps_magmas(5, 2))
    regular = enumerate_regular_tables(cyclic_group(5), 2)
    assert len(every) == 24
    assert len(set(regular)) == 4
    assert set(regular) <= every


def test_iso_classes_three():
    assert brute_iso_classes_max_arity_cyclic(3) == 1


@pytest.mark.slow
def test_iso_classes_five():
    assert brute_iso_classes_max_arity_cyclic(5) == count_iso_classes_max_arity_cyclic(5)
