import json
import random
from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

import oracles
from chromnsym.combinatorics import sort_to_partition
from chromnsym.digraph import (
    Digraph,
    alpha,
    alpha_of_mask,
    component_tuple,
    inverse_permutation,
    random_digraph,
    relabel,
    relabel_arcs,
    total_degree,
    underlying_graph,
)
from chromnsym.errors import InputError
from chromnsym.sym import UndirectedGraph, lambda_of_subset


def all_subsets(d):
    for k in range(len(d.arcs) + 1):
        yield from combinations(d.arcs, k)


def test_underlying_graph(c4_orientation):
    assert underlying_graph(c4_orientation) == UndirectedGraph(
        4, [(0, 1), (0, 2), (1, 3), (2, 3)]
    )
    assert underlying_graph(Digraph(3)).edges == ()
    assert underlying_graph(Digraph(2, [(0, 1)])).edges == ((0, 1),)


def test_total_degree(c4_orientation):
    assert total_degree(c4_orientation, {0, 1, 3}) == -2
    assert total_degree(c4_orientation, {2}) == 2
    assert total_degree(c4_orientation, range(4)) == 0
    with pytest.raises(InputError):
        total_degree(c4_orientation, {4})


def test_component_tuple(second_c4):
    assert component_tuple(second_c4, [(0, 2)]) == ((0, 2), (3,), (1,))
    assert component_tuple(second_c4, []) == ((3,), (2,), (1,), (0,))
    assert component_tuple(second_c4, second_c4.arcs) == ((0, 1, 2, 3),)
    with pytest.raises(InputError):
        component_tuple(second_c4, [(2, 0)])


def test_alpha_paper_examples(c4_orientation, second_c4):
    assert alpha(c4_orientation, [(0, 1), (1, 3)]) == (1, 3)
    assert alpha(second_c4, [(0, 2)]) == (2, 1, 1)
    assert alpha(second_c4, []) == (1, 1, 1, 1)
    with pytest.raises(InputError):
        alpha(second_c4, [(1, 0)])


def test_relabel_paper_example(second_c4):
    # v3->w1, v4->w2, v1->w3, v2->w4
    sigma = [2, 3, 0, 1]
    d = relabel(second_c4, sigma)
    assert d == Digraph(4, [(2, 3), (2, 0), (3, 1), (1, 0)])
    s = relabel_arcs([(0, 2)], sigma)
    assert s == [(2, 0)]
    assert component_tuple(d, s) == ((0, 2), (3,), (1,))
    assert alpha(d, s) == (2, 1, 1)


def test_relabel_basics():
    d = Digraph(2, [(0, 1)])
    assert relabel(d, [0, 1]) == d
    assert relabel(d, [1, 0]).arcs == ((1, 0),)
    with pytest.raises(InputError):
        relabel(d, [0, 0])


def test_validation():
    with pytest.raises(InputError):
        Digraph(2, [(0, 0)])
    with pytest.raises(InputError):
        Digraph(2, [(0, 1), (0, 1)])
    with pytest.raises(InputError):
        Digraph(2, [(0, 1), (1, 0)])
    with pytest.raises(InputError):
        Digraph(2, [(0, 2)])
    with pytest.raises(InputError):
        Digraph.from_json({"arcs": []})


def test_text_and_json_parsing(tmp_path):
    text = "# path\n0 1\n2 1  # reversed\n\n2 3\n"
    d = Digraph.from_text(text)
    assert d == Digraph(4, [(0, 1), (2, 1), (2, 3)])
    assert Digraph.from_text("n 5\n0 1\n").n == 5
    with pytest.raises(InputError):
        Digraph.from_text("0 1 2\n")
    f = tmp_path / "d.json"
    f.write_text(json.dumps(d.to_json()))
    assert Digraph.load(f) == d
    f.write_text("{not json")
    with pytest.raises(InputError):
        Digraph.load(f)


@pytest.mark.parametrize("seed", range(30))
def test_alpha_and_tuple_match_oracle(seed):
    rng = random.Random(seed)
    n = rng.randint(1, 5)
    d = random_digraph(n, rng.randint(0, n * (n - 1) // 2), rng=rng)
    for s in all_subsets(d):
        assert alpha(d, s) == oracles.alpha_oracle(d.n, d.arcs, s)
        assert component_tuple(d, s) == oracles.component_tuple_oracle(d.n, s)


@pytest.mark.parametrize("seed", range(25))
def test_labeling_independence(seed):
    rng = random.Random(1000 + seed)
    n = rng.randint(2, 5)
    d = random_digraph(n, rng.randint(1, n * (n - 1) // 2), rng=rng)
    sigma = list(range(n))
    rng.shuffle(sigma)
    e = relabel(d, sigma)
    assert relabel(e, inverse_permutation(sigma)) == d
    for s in all_subsets(d):
        assert alpha(e, relabel_arcs(s, sigma)) == alpha(d, s)


@pytest.mark.parametrize("seed", range(6))
def test_labeling_independence_many_permutations(seed):
    rng = random.Random(3000 + seed)
    n = 5
    d = random_digraph(n, rng.randint(3, 8), rng=rng)
    base = {s: alpha(d, s) for s in all_subsets(d)}
    for _ in range(20):
        sigma = list(range(n))
        rng.shuffle(sigma)
        e = relabel(d, sigma)
        for s, a in base.items():
            assert alpha(e, relabel_arcs(s, sigma)) == a


@pytest.mark.parametrize("seed", range(25))
def test_subset_invariants(seed):
    rng = random.Random(2000 + seed)
    n = rng.randint(1, 6)
    d = random_digraph(n, rng.randint(0, min(8, n * (n - 1) // 2)), rng=rng)
    g = underlying_graph(d)
    for mask in range(1 << len(d.arcs)):
        s = d.arcs_of(mask)
        a = alpha(d, s)
        assert a == alpha_of_mask(d, mask)
        assert sum(a) == n
        assert sort_to_partition(a) == lambda_of_subset(g, s)
        tup = component_tuple(d, s)
        assert sum(total_degree(d, c) for c in tup) == 0
        sizes = [len(c) for c in tup]
        assert sizes == sorted(sizes, reverse=True)


@settings(max_examples=50, deadline=None)
@given(st.integers(0, 7), st.data())
def test_random_digraph_is_valid(n, data):
    m = data.draw(st.integers(0, n * (n - 1) // 2))
    seed = data.draw(st.integers(0, 10**6))
    d = random_digraph(n, m, seed=seed)
    assert len(d.arcs) == m
    assert Digraph.from_json(json.loads(json.dumps(d.to_json()))) == d
    assert random_digraph(n, m, seed=seed) == d


def test_random_digraph_rejects_too_many_arcs():
    with pytest.raises(InputError):
        random_digraph(3, 4, seed=0)
