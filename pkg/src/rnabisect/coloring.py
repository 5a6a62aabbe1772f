"""Balanced 2-colorings, cut sets, and parity labelings/signatures.

Two equivalent views of the rna number live here. A vertex labeling 1..n
signs each edge +1 when its endpoint labels share parity and -1 otherwise;
coloring odd labels 1 and even labels 2 turns the negative edges into
exactly the bichromatic edges of a balanced coloring, and back.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Sequence

from .graph import Edge, Graph


class ColoringError(ValueError):
    pass


def is_balanced(colors: Sequence[int]) -> bool:
    """True iff the two color classes differ in size by at most one."""
    if any(c not in (1, 2) for c in colors):
        raise ColoringError("colors must be 1 or 2")
    ones = sum(1 for c in colors if c == 1)
    return abs(ones - (len(colors) - ones)) <= 1


@dataclass(frozen=True)
class BalancedColoring:
    colors: tuple

    def __post_init__(self):
        colors = tuple(int(c) for c in self.colors)
        if not is_balanced(colors):
            raise ColoringError(f"coloring {''.join(map(str, colors))} is not balanced")
        object.__setattr__(self, "colors", colors)

    @classmethod
    def from_string(cls, s: str) -> "BalancedColoring":
        if not s or set(s) - {"1", "2"}:
            raise ColoringError(f"coloring string must consist of '1'/'2', got {s!r}")
        return cls(tuple(int(ch) for ch in s))

    def __str__(self) -> str:
        return "".join(map(str, self.colors))

    def __len__(self) -> int:
        return len(self.colors)

    def __getitem__(self, v: int) -> int:
        return self.colors[v]

    def class_size(self, color: int) -> int:
        return sum(1 for c in self.colors if c == color)

    def swapped(self) -> "BalancedColoring":
        return BalancedColoring(tuple(3 - c for c in self.colors))


@dataclass(frozen=True)
class CutSet:
    edges: frozenset

    @property
    def size(self) -> int:
        return len(self.edges)


def cut_set(g: Graph, f) -> CutSet:
    colors = f.colors if isinstance(f, BalancedColoring) else tuple(f)
    if len(colors) != g.n:
        raise ColoringError(f"coloring has length {len(colors)}, graph has {g.n} vertices")
    return CutSet(frozenset(e for e in g.edges if colors[e[0]] != colors[e[1]]))


def cut_size(g: Graph, colors: Sequence[int]) -> int:
    return sum(1 for u, v in g.edges if colors[u] != colors[v])


@dataclass(frozen=True)
class VertexLabeling:
    """``labels[v]`` is the label in 1..n given to vertex v."""

    labels: tuple

    def __post_init__(self):
        labels = tuple(int(x) for x in self.labels)
        if sorted(labels) != list(range(1, len(labels) + 1)):
            raise ColoringError(f"labels {labels} are not a permutation of 1..{len(labels)}")
        object.__setattr__(self, "labels", labels)


EdgeSignature = Dict[Edge, int]


def labeling_to_signature(g: Graph, labeling: VertexLabeling) -> EdgeSignature:
    if len(labeling.labels) != g.n:
        raise ColoringError("labeling does not cover the graph's vertices")
    lab = labeling.labels
    return {e: 1 if lab[e[0]] % 2 == lab[e[1]] % 2 else -1 for e in g.sorted_edges()}


def negative_edges(signature: EdgeSignature) -> frozenset:
    return frozenset(e for e, s in signature.items() if s == -1)


def labeling_to_coloring(labeling: VertexLabeling) -> BalancedColoring:
    return BalancedColoring(tuple(1 if x % 2 else 2 for x in labeling.labels))


def coloring_to_labeling(f) -> VertexLabeling:
    """Odd labels go to the larger class (class 1 on ties), ascending by vertex."""
    colors = f.colors if isinstance(f, BalancedColoring) else tuple(f)
    if not is_balanced(colors):
        raise ColoringError("coloring is not balanced")
    ones = sum(1 for c in colors if c == 1)
    odd_color = 1 if ones >= len(colors) - ones else 2
    labels = [0] * len(colors)
    next_odd, next_even = 1, 2
    for v, c in enumerate(colors):
        if c == odd_color:
            labels[v] = next_odd
            next_odd += 2
        else:
            labels[v] = next_even
            next_even += 2
    return VertexLabeling(tuple(labels))
