"""Independent reference computations and hypothesis strategies for the tests."""

import itertools

from hypothesis import strategies as st

from rnabisect.graph import Graph


@st.composite
def graphs(draw, min_n=1, max_n=9):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(n, frozenset(p for p, k in zip(pairs, keep) if k))


@st.composite
def balanced_colors(draw, n):
    ones = draw(st.sampled_from(sorted({n // 2, (n + 1) // 2})))
    perm = draw(st.permutations(range(n)))
    colors = [2] * n
    for v in perm[:ones]:
        colors[v] = 1
    return tuple(colors)


def naive_rna(g: Graph) -> int:
    """Every 2-coloring, filtered for balance; no symmetry reduction."""
    best = None
    for colors in itertools.product((1, 2), repeat=g.n):
        ones = colors.count(1)
        if abs(2 * ones - g.n) > 1:
            continue
        cut = sum(1 for u, v in g.edges if colors[u] != colors[v])
        best = cut if best is None else min(best, cut)
    return best


def cyclic_distance_edges(n: int, d: int) -> set:
    """Pairs at cycle distance 1..d, found by testing every pair."""
    return {
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if min(v - u, n - (v - u)) <= d
    }
