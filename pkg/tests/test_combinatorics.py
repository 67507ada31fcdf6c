from itertools import product

import pytest
from hypothesis import given, strategies as st

from chromnsym import config
from chromnsym.combinatorics import (
    as_composition,
    as_partition,
    coarsenings,
    compositions_of,
    descent_set,
    from_descents,
    partitions_of,
    refines,
    sort_to_partition,
)
from chromnsym.errors import InputError

compositions = st.lists(st.integers(1, 5), max_size=7).map(tuple)


@pytest.mark.parametrize(
    "c, expected", [((1, 2, 1), {1, 3}), ((4,), set()), ((2, 2), {2}), ((), set())]
)
def test_descent_set(c, expected):
    assert descent_set(c) == expected


@pytest.mark.parametrize(
    "a, b, expected",
    [((1, 1, 2), (2, 2), True), ((2, 2), (1, 1, 2), False), ((3,), (3,), True)],
)
def test_refines(a, b, expected):
    assert refines(a, b) is expected


def test_refines_degree_mismatch():
    with pytest.raises(InputError):
        refines((1, 1), (3,))


@pytest.mark.parametrize(
    "a, expected",
    [
        ((1, 1), [(1, 1), (2,)]),
        ((3,), [(3,)]),
        ((1, 1, 1), [(1, 1, 1), (2, 1), (1, 2), (3,)]),
    ],
)
def test_coarsenings(a, expected):
    assert coarsenings(a) == expected


@pytest.mark.parametrize(
    "a, expected", [((1, 3), (3, 1)), ((), ()), ((2, 1, 1), (2, 1, 1))]
)
def test_sort_to_partition(a, expected):
    assert sort_to_partition(a) == expected


def test_compositions_of():
    assert compositions_of(3) == [(1, 1, 1), (1, 2), (2, 1), (3,)]
    assert compositions_of(0) == [()]
    assert compositions_of(1) == [(1,)]
    assert [len(compositions_of(n)) for n in range(1, 11)] == [2 ** (n - 1) for n in range(1, 11)]


def test_compositions_of_cap(monkeypatch):
    with pytest.raises(InputError):
        compositions_of(13)
    monkeypatch.setenv("CHROMNSYM_DEGREE_CAP", "4")
    with pytest.raises(InputError):
        compositions_of(5)
    assert len(compositions_of(4)) == 8
    config.set_cap("degree", 13)
    try:
        assert len(compositions_of(13)) == 4096
    finally:
        config.set_cap("degree", None)


def test_validation():
    with pytest.raises(InputError):
        as_composition([1, 0])
    with pytest.raises(InputError):
        as_partition([1, 2])
    with pytest.raises(InputError):
        as_composition([1.5])


@pytest.mark.parametrize("n", range(0, 9))
def test_descent_set_is_a_bijection(n):
    comps = compositions_of(n)
    sets = [descent_set(c) for c in comps]
    assert len(set(sets)) == len(comps) == (2 ** (n - 1) if n else 1)
    assert all(from_descents(n, d) == c for c, d in zip(comps, sets))


@pytest.mark.parametrize("n", range(1, 7))
def test_refinement_is_a_partial_order(n):
    comps = compositions_of(n)
    for a in comps:
        assert refines(a, a)
    for a, b in product(comps, repeat=2):
        if refines(a, b) and refines(b, a):
            assert a == b
    for a, b, c in product(comps, repeat=3):
        if refines(a, b) and refines(b, c):
            assert refines(a, c)


@given(compositions)
def test_sort_preserves_multiset(a):
    p = sort_to_partition(a)
    assert sum(p) == sum(a)
    assert sorted(p) == sorted(a)
    assert list(p) == sorted(p, reverse=True)


@given(compositions.filter(bool))
def test_coarsening_count_and_order(a):
    cs = coarsenings(a)
    assert len(cs) == 2 ** (len(a) - 1) == len(set(cs))
    assert cs[0] == a and cs[-1] == (sum(a),)
    assert all(refines(a, b) for b in cs)


def test_partitions_of():
    assert partitions_of(4) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert [len(partitions_of(n)) for n in range(8)] == [1, 1, 2, 3, 5, 7, 11, 15]
