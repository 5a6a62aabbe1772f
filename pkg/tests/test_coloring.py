import itertools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from rnabisect.coloring import (
    BalancedColoring,
    ColoringError,
    VertexLabeling,
    coloring_to_labeling,
    cut_set,
    is_balanced,
    labeling_to_coloring,
    labeling_to_signature,
    negative_edges,
)
from rnabisect.bounds import contiguous_coloring
from rnabisect.graph import Graph, complete_graph, cycle_power, path_graph, random_graph

from oracles import balanced_colors, graphs


@pytest.mark.parametrize(
    "colors, expected",
    [((1, 2, 1, 2), True), ((1, 1, 1, 2), False), ((1, 1, 2, 2, 2), True), ((1,), True), ((), True), ((2, 2), False)],
)
def test_is_balanced(colors, expected):
    assert is_balanced(colors) is expected


def test_is_balanced_rejects_other_colors():
    with pytest.raises(ColoringError):
        is_balanced((0, 1))


def test_balanced_coloring_validates():
    with pytest.raises(ColoringError):
        BalancedColoring((1, 1, 1, 2))
    assert str(BalancedColoring.from_string("1112222")) == "1112222"
    with pytest.raises(ColoringError):
        BalancedColoring.from_string("1102")


def test_cut_set_path():
    c = cut_set(path_graph(4), BalancedColoring((1, 1, 2, 2)))
    assert c.edges == {(1, 2)}
    assert c.size == 1


def test_cut_set_single_vertex():
    assert cut_set(Graph(1), BalancedColoring((1,))).size == 0


def test_cut_set_length_mismatch():
    with pytest.raises(ColoringError):
        cut_set(path_graph(4), BalancedColoring((1, 2)))


def test_cut_set_contiguous_c7_2():
    g = cycle_power(7, 2)
    f = contiguous_coloring(7, 2)
    by_hand = [(u, v) for u, v in g.edges if f[u] != f[v]]
    assert len(by_hand) == 6
    assert cut_set(g, f).size == 6


def test_signature_path_examples():
    g = path_graph(3)
    assert labeling_to_signature(g, VertexLabeling((1, 2, 3))) == {(0, 1): -1, (1, 2): -1}
    assert labeling_to_signature(g, VertexLabeling((1, 3, 2))) == {(0, 1): 1, (1, 2): -1}


def test_signature_k3():
    sig = labeling_to_signature(complete_graph(3), VertexLabeling((1, 2, 3)))
    # parities odd, even, odd: only 01 and 12 disagree
    assert sorted(sig.values()) == [-1, -1, 1]


def test_labeling_must_be_permutation():
    with pytest.raises(ColoringError):
        VertexLabeling((1, 1, 2))
    with pytest.raises(ColoringError):
        VertexLabeling((0, 1, 2))


def test_labeling_to_coloring_examples():
    assert labeling_to_coloring(VertexLabeling((1, 2, 3, 4))).colors == (1, 2, 1, 2)
    assert labeling_to_coloring(VertexLabeling((2, 1, 4, 3, 5))).colors == (2, 1, 2, 1, 1)


def test_coloring_to_labeling_examples():
    assert coloring_to_labeling(BalancedColoring((1, 2, 1, 2))).labels == (1, 2, 3, 4)
    lab = coloring_to_labeling(BalancedColoring((2, 1, 2, 1))).labels
    # equal classes: class 1 takes the odd labels
    assert [v for v, x in enumerate(lab) if x % 2] == [1, 3]
    assert lab == (2, 1, 4, 3)


def test_coloring_to_labeling_larger_class_gets_odd_labels():
    lab = coloring_to_labeling(BalancedColoring((2, 1, 2, 1, 2))).labels
    assert [v for v, x in enumerate(lab) if x % 2] == [0, 2, 4]
    with pytest.raises(ColoringError):
        coloring_to_labeling((1, 1, 1, 2))


def test_swap_invariance_small():
    g = cycle_power(9, 2)
    f = BalancedColoring((1, 2, 2, 1, 1, 2, 1, 2, 1))
    assert cut_set(g, f) == cut_set(g, f.swapped())


def test_labeling_pipelines_agree_random():
    rng = np.random.default_rng(2024)
    for _ in range(1000):
        n = int(rng.integers(1, 11))
        g = random_graph(n, float(rng.random()), rng)
        lab = VertexLabeling(tuple(int(x) + 1 for x in rng.permutation(n)))
        neg = negative_edges(labeling_to_signature(g, lab))
        f = labeling_to_coloring(lab)
        assert is_balanced(f.colors)
        assert cut_set(g, f).edges == neg


def test_coloring_round_trip_random():
    rng = np.random.default_rng(7)
    for _ in range(1000):
        n = int(rng.integers(1, 15))
        ones = int(rng.choice(sorted({n // 2, (n + 1) // 2})))
        colors = np.full(n, 2)
        colors[rng.permutation(n)[:ones]] = 1
        f = BalancedColoring(tuple(colors.tolist()))
        back = labeling_to_coloring(coloring_to_labeling(f))
        assert back == f or back == f.swapped()


@given(st.integers(1, 10).flatmap(lambda n: st.tuples(graphs(min_n=n, max_n=n), balanced_colors(n))))
def test_cut_properties(gf):
    g, colors = gf
    f = BalancedColoring(colors)
    c = cut_set(g, f)
    assert c.size <= g.m
    assert all(f[u] != f[v] for u, v in c.edges)
    assert c == cut_set(g, f.swapped())
    crossing = any(f[u] != f[v] for u, v in g.edges)
    assert (c.size == 0) == (not crossing)


@settings(max_examples=60)
@given(graphs(max_n=7))
def test_definition_equivalence_property(g):
    by_labels = min(
        len(negative_edges(labeling_to_signature(g, VertexLabeling(p))))
        for p in itertools.permutations(range(1, g.n + 1))
    )
    by_colorings = min(
        cut_set(g, c).size for c in itertools.product((1, 2), repeat=g.n) if is_balanced(c)
    )
    assert by_labels == by_colorings
