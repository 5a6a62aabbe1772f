"""Closed forms and constructions for the rna number of cycle powers.

Includes the prefix-arc coloring that attains d(d+1) cut edges on C_n^d,
the general upper bound floor((2m+n)/4), the earlier 2d <= . <= d(d+1)
sandwich, and the vertex-deletion step that turns a balanced coloring of
C_n^d into one of C_{n-1}^d without increasing the cut.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .coloring import BalancedColoring, ColoringError, cut_size
from .graph import Graph, GraphError, cycle_power


class ReductionError(ValueError):
    pass


def _check_power(d: int) -> None:
    if d < 2:
        raise ValueError(f"power d must be >= 2, got {d}")


def theorem_value(d: int) -> int:
    _check_power(d)
    return d * (d + 1)


def ska_bounds(d: int) -> tuple:
    """(lower, upper) = (2d, d(d+1)) for C_n^d with n >= 2d+1."""
    _check_power(d)
    return 2 * d, d * (d + 1)


def kang_bound(g: Graph) -> int:
    return (2 * g.m + g.n) // 4


def contiguous_coloring(n: int, d: int) -> BalancedColoring:
    """Color the arc 0..floor(n/2)-1 with 1 and the rest with 2.

    Both arcs have length >= d, so each of the two arc boundaries is crossed
    by 1 + 2 + ... + d edges of C_n^d.
    """
    _check_power(d)
    if n < 2 * d + 1:
        raise GraphError(f"need n >= 2d+1 = {2 * d + 1}, got n={n}")
    half = n // 2
    return BalancedColoring((1,) * half + (2,) * (n - half))


def circulant_cut_size(n: int, d: int, colors) -> int:
    """Cut size of a coloring of C_n^d without materializing the edge set.

    Counts pairs (i, i+j mod n), j = 1..d, with different colors.
    """
    if n < 2 * d + 1:
        raise GraphError(f"need n >= 2d+1 = {2 * d + 1}, got n={n}")
    c = np.asarray(colors.colors if isinstance(colors, BalancedColoring) else colors)
    if c.size != n:
        raise ColoringError(f"coloring has length {c.size}, expected {n}")
    return int(sum(np.count_nonzero(c != np.roll(c, -j)) for j in range(1, d + 1)))


@dataclass(frozen=True)
class ReductionResult:
    H: Graph
    f_prime: BalancedColoring
    added_edges: tuple
    cut_before: int
    cut_after: int
    pivot: int
    rotation: int
    matches_cycle_power: bool

    def to_dict(self) -> dict:
        return {
            "n": self.H.n + 1,
            "n_H": self.H.n,
            "pivot": self.pivot,
            "rotation": self.rotation,
            "added_edges": [list(e) for e in self.added_edges],
            "f_prime": str(self.f_prime),
            "cut_before": self.cut_before,
            "cut_after": self.cut_after,
            "H_is_cycle_power": self.matches_cycle_power,
            "H_edges": [list(e) for e in self.H.sorted_edges()],
        }


def reduce_cycle_power(n: int, d: int, f, pivot: int = 0) -> ReductionResult:
    """Delete a majority-class vertex of C_n^d and patch the hole.

    The coloring is rotated so the pivot sits at v_0. Removing v_0 leaves the
    d pairs (v_{n-d+k}, v_{1+k}) at cycle distance d+1; adding them back as
    edges S and renaming v_{j+1} -> w_j gives exactly C_{n-1}^d. Every S edge
    joins two neighbours of v_0, so a bichromatic S edge always pairs with a
    bichromatic edge at v_0 that was deleted, and the cut cannot grow.
    """
    _check_power(d)
    if n < 2 * d + 2:
        raise ReductionError(f"reduction needs n >= 2d+2 = {2 * d + 2}, got n={n}")
    if not isinstance(f, BalancedColoring):
        try:
            f = BalancedColoring(tuple(f))
        except ColoringError as exc:
            raise ReductionError(str(exc)) from exc
    if len(f) != n:
        raise ReductionError(f"coloring has length {len(f)}, expected {n}")
    if not 0 <= pivot < n:
        raise ReductionError(f"pivot {pivot} out of range")
    if f.class_size(f[pivot]) < (n + 1) // 2:
        raise ReductionError(f"pivot {pivot} is in the minority color class")

    g = cycle_power(n, d)
    rot = tuple(f.colors[(i + pivot) % n] for i in range(n))

    star = {e for e in g.edges if 0 in e}
    s_edges = [(n - d + k, 1 + k) for k in range(d)]
    for a, b in s_edges:
        if g.has_edge(a, b):
            raise AssertionError(f"patch edge {(a, b)} already in C_{n}^{d}")
        if not (g.has_edge(0, a) and g.has_edge(0, b)):
            raise AssertionError(f"patch edge {(a, b)} does not join two neighbours of v_0")

    kept = [(u - 1, v - 1) for u, v in g.edges - star]
    added = tuple(sorted((min(a, b) - 1, max(a, b) - 1) for a, b in s_edges))
    h_plain = Graph.from_edges(n - 1, kept + list(added))
    target = cycle_power(n - 1, d)
    matches = h_plain.edges == target.edges
    h = Graph(n - 1, h_plain.edges, target.family if matches else None)

    f_prime = BalancedColoring(rot[1:])
    return ReductionResult(
        H=h,
        f_prime=f_prime,
        added_edges=added,
        cut_before=cut_size(g, f.colors),
        cut_after=cut_size(h, f_prime.colors),
        pivot=pivot,
        rotation=pivot,
        matches_cycle_power=matches,
    )
