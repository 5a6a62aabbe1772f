"""Simple undirected graphs on dense vertex indices, family generators and edge-list I/O."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Optional, Tuple

import numpy as np

Edge = Tuple[int, int]

FAMILY_KINDS = ("cycle-power", "path", "cycle", "star", "wheel", "complete", "custom")


class GraphError(ValueError):
    pass


class EdgeListParseError(GraphError):
    pass


@dataclass(frozen=True)
class FamilyTag:
    """Which generator produced a graph. ``d`` is only meaningful for cycle powers."""

    kind: str
    n: int = 0
    d: int = 0

    def __post_init__(self):
        if self.kind not in FAMILY_KINDS:
            raise GraphError(f"unknown family kind {self.kind!r}")

    def to_comment(self) -> str:
        if self.kind == "custom":
            return "# family: custom"
        if self.kind == "cycle-power":
            return f"# family: cycle-power n={self.n} d={self.d}"
        return f"# family: {self.kind} n={self.n}"

    @classmethod
    def from_comment(cls, line: str) -> Optional["FamilyTag"]:
        body = line.lstrip("#").strip()
        if not body.startswith("family:"):
            return None
        parts = body[len("family:"):].split()
        if not parts:
            return None
        kw = dict(p.split("=", 1) for p in parts[1:] if "=" in p)
        try:
            return cls(parts[0], int(kw.get("n", 0)), int(kw.get("d", 0)))
        except ValueError as exc:
            raise EdgeListParseError(f"bad family comment: {line!r}") from exc


def _canonical(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset = field(default_factory=frozenset)
    family: Optional[FamilyTag] = field(default=None, compare=False)

    def __post_init__(self):
        if self.n < 0:
            raise GraphError("vertex count must be non-negative")
        canon = set()
        for u, v in self.edges:
            u, v = int(u), int(v)
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={self.n}")
            canon.add(_canonical(u, v))
        object.__setattr__(self, "edges", frozenset(canon))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Edge], family: Optional[FamilyTag] = None) -> "Graph":
        """Build a graph, rejecting duplicate edges (in either orientation)."""
        seen = set()
        for u, v in edges:
            e = _canonical(int(u), int(v))
            if e in seen:
                raise GraphError(f"duplicate edge {e}")
            seen.add(e)
        return cls(n, frozenset(seen), family)

    @classmethod
    def _trusted(cls, n: int, edges: frozenset, family: Optional[FamilyTag] = None) -> "Graph":
        # caller guarantees canonical, in-range, loop-free edges
        g = object.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "edges", edges)
        object.__setattr__(g, "family", family)
        return g

    @property
    def m(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return _canonical(u, v) in self.edges

    def sorted_edges(self) -> list:
        return sorted(self.edges)

    @cached_property
    def neighbors(self) -> tuple:
        adj = [[] for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return tuple(tuple(sorted(a)) for a in adj)

    def degrees(self) -> list:
        return [len(a) for a in self.neighbors]

    def adjacency_matrix(self, dtype=np.int8) -> np.ndarray:
        a = np.zeros((self.n, self.n), dtype=dtype)
        if self.edges:
            idx = np.array(self.sorted_edges())
            a[idx[:, 0], idx[:, 1]] = 1
            a[idx[:, 1], idx[:, 0]] = 1
        return a

    def with_edge(self, u: int, v: int) -> "Graph":
        return Graph(self.n, self.edges | {_canonical(u, v)})

    def relabel(self, mapping) -> "Graph":
        """Apply a vertex permutation given as ``mapping[old] = new``."""
        return Graph(self.n, frozenset(_canonical(mapping[u], mapping[v]) for u, v in self.edges))


# -- generators ------------------------------------------------------------


def cycle_power(n: int, d: int) -> Graph:
    """The d-th power of the n-cycle: i ~ i+j (mod n) for j = 1..d.

    Requires d >= 1 and n >= 2d+1; smaller n would generate the same pair twice.
    """
    if d < 1:
        raise GraphError(f"power d must be >= 1, got {d}")
    if n < 2 * d + 1:
        raise GraphError(f"cycle power needs n >= 2d+1 = {2 * d + 1}, got n={n}")
    edges = frozenset(_canonical(i, (i + j) % n) for i in range(n) for j in range(1, d + 1))
    return Graph._trusted(n, edges, FamilyTag("cycle-power", n, d))


def path_graph(n: int) -> Graph:
    if n < 2:
        raise GraphError(f"path needs n >= 2, got {n}")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)], FamilyTag("path", n))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError(f"cycle needs n >= 3, got {n}")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)], FamilyTag("cycle", n))


def star_graph(n: int) -> Graph:
    """Vertex 0 joined to the n-1 leaves 1..n-1."""
    if n < 4:
        raise GraphError(f"star needs n >= 4 vertices, got {n}")
    return Graph.from_edges(n, [(0, i) for i in range(1, n)], FamilyTag("star", n))


def wheel_graph(n: int) -> Graph:
    """Hub 0 joined to every vertex of the rim cycle 1..n-1."""
    if n < 4:
        raise GraphError(f"wheel needs n >= 4 vertices, got {n}")
    rim = n - 1
    edges = [(1 + i, 1 + (i + 1) % rim) for i in range(rim)]
    edges += [(0, i) for i in range(1, n)]
    return Graph.from_edges(n, edges, FamilyTag("wheel", n))


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise GraphError(f"complete graph needs n >= 1, got {n}")
    edges = [(i, j) for i in range(n) for j in range(i + 1, n)]
    return Graph.from_edges(n, edges, FamilyTag("complete", n))


def make_family(tag: FamilyTag) -> Graph:
    builders = {
        "path": path_graph,
        "cycle": cycle_graph,
        "star": star_graph,
        "wheel": wheel_graph,
        "complete": complete_graph,
    }
    if tag.kind == "cycle-power":
        return cycle_power(tag.n, tag.d)
    if tag.kind == "custom":
        raise GraphError("custom graphs have no generator; parse them from a file")
    return builders[tag.kind](tag.n)


def random_graph(n: int, p: float, rng: np.random.Generator) -> Graph:
    """Erdos-Renyi G(n, p)."""
    iu, ju = np.triu_indices(n, 1)
    keep = rng.random(iu.size) < p
    return Graph(n, frozenset(zip(iu[keep].tolist(), ju[keep].tolist())))


# -- edge-list format ------------------------------------------------------


def parse_edge_list(data) -> Graph:
    """Read the ``n m`` header + ``u v`` lines format. '#' lines are comments.

    A ``# family: ...`` comment restores the generator tag.
    """
    text = data.decode("ascii") if isinstance(data, (bytes, bytearray)) else data
    family = None
    rows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            tag = FamilyTag.from_comment(line)
            if tag is not None:
                family = tag
            continue
        parts = line.split()
        if len(parts) != 2:
            raise EdgeListParseError(f"line {lineno}: expected two integers, got {raw!r}")
        try:
            rows.append((lineno, int(parts[0]), int(parts[1])))
        except ValueError as exc:
            raise EdgeListParseError(f"line {lineno}: not an integer pair: {raw!r}") from exc
    if not rows:
        raise EdgeListParseError("missing 'n m' header")
    _, n, m = rows[0]
    if n < 0 or m < 0:
        raise EdgeListParseError("header values must be non-negative")
    body = rows[1:]
    if len(body) != m:
        raise EdgeListParseError(f"header announces {m} edges, found {len(body)}")
    seen = set()
    for lineno, u, v in body:
        if u == v:
            raise EdgeListParseError(f"line {lineno}: self-loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise EdgeListParseError(f"line {lineno}: vertex index out of range for n={n}")
        e = _canonical(u, v)
        if e in seen:
            raise EdgeListParseError(f"line {lineno}: duplicate edge {e}")
        seen.add(e)
    return Graph(n, frozenset(seen), family)


def serialize_edge_list(g: Graph) -> bytes:
    lines = []
    if g.family is not None:
        lines.append(g.family.to_comment())
    lines.append(f"{g.n} {g.m}")
    lines.extend(f"{u} {v}" for u, v in g.sorted_edges())
    return ("\n".join(lines) + "\n").encode("ascii")
