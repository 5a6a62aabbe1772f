"""Exact minimum bisection width by enumeration and by branch-and-bound.

Both solvers pin vertex 0 to color 1 (colors can always be swapped) and
return the lexicographically smallest optimal color string, so their
reports agree witness-for-witness and not just on the value.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .coloring import BalancedColoring, cut_size
from .graph import Graph

BRUTE_FORCE = "BruteForce"
BRANCH_AND_BOUND = "BranchAndBound"
HEURISTIC = "Heuristic"


class SizeGuardError(ValueError):
    """The instance exceeds the configured vertex-count guard."""


@dataclass
class SolveReport:
    rna_value: int
    witness: BalancedColoring
    nodes_explored: int
    elapsed: float
    method: str
    optimal: bool = True

    def to_dict(self) -> dict:
        return {
            "rna": self.rna_value,
            "witness": str(self.witness),
            "method": self.method,
            "nodes": self.nodes_explored,
            "elapsed_ms": round(self.elapsed * 1000.0, 3),
            "optimal": self.optimal,
        }


@dataclass
class ExactConfig:
    brute_guard_n: int = 30
    bnb_guard_n: int = 40
    node_budget: Optional[int] = None
    # chunk of bitmasks evaluated per vectorized step
    chunk_bits: int = 20


def class_two_counts(n: int) -> tuple:
    """Admissible sizes of the color-2 class once vertex 0 is pinned to color 1."""
    return (n // 2,) if n % 2 == 0 else (n // 2, n // 2 + 1)


def brute_force_rna(g: Graph, config: Optional[ExactConfig] = None) -> SolveReport:
    """Evaluate every balanced coloring with vertex 0 colored 1.

    Vertex i is bit n-1-i of a mask (bit set = color 2), so scanning masks in
    increasing order visits color strings in lexicographic order and the first
    minimum found is the lexicographically smallest optimal witness.
    """
    config = config or ExactConfig()
    n = g.n
    if n < 1:
        raise ValueError("graph must have at least one vertex")
    if n > config.brute_guard_n:
        raise SizeGuardError(f"n={n} exceeds brute-force guard {config.brute_guard_n}")
    start = time.perf_counter()
    if n == 1:
        return SolveReport(0, BalancedColoring((1,)), 1, time.perf_counter() - start, BRUTE_FORCE)

    adj = g.adjacency_matrix(np.float32)
    deg = adj.sum(axis=1)
    shifts = np.arange(n - 1, -1, -1, dtype=np.int64)
    allowed = np.array(class_two_counts(n))

    best_val, best_mask, count = None, None, 0
    total = 1 << (n - 1)
    step = 1 << min(config.chunk_bits, n - 1)
    for lo in range(0, total, step):
        masks = np.arange(lo, min(lo + step, total), dtype=np.int64)
        masks = masks[np.isin(np.bitwise_count(masks), allowed)]
        if masks.size == 0:
            continue
        count += masks.size
        x = ((masks[:, None] >> shifts) & 1).astype(np.float32)
        # sum over edges of x_u xor x_v  ==  x.deg - x^T A x
        cuts = x @ deg - np.einsum("ij,ij->i", x @ adj, x)
        i = int(np.argmin(cuts))
        val = int(round(float(cuts[i])))
        if best_val is None or val < best_val:
            best_val, best_mask = val, int(masks[i])

    colors = tuple(1 + ((best_mask >> (n - 1 - v)) & 1) for v in range(n))
    return SolveReport(best_val, BalancedColoring(colors), count, time.perf_counter() - start, BRUTE_FORCE)


def _initial_incumbent(g: Graph) -> BalancedColoring:
    # local imports: both modules import this one for SolveReport
    from .bounds import contiguous_coloring
    from .heuristic import LocalSearchConfig, local_search_rna

    fam = g.family
    candidates = []
    if fam is not None and fam.kind == "cycle-power" and fam.d >= 2 and fam.n == g.n:
        candidates.append(contiguous_coloring(fam.n, fam.d))
    if g.n >= 2:
        rep = local_search_rna(g, LocalSearchConfig(seed=0, restarts=4))
        candidates.append(rep.witness)
    if not candidates:
        return BalancedColoring((1,) * g.n)
    return min(candidates, key=lambda f: (cut_size(g, f.colors), str(f)))


class _BudgetExhausted(Exception):
    pass


def branch_and_bound_rna(
    g: Graph,
    budget: Optional[int] = None,
    config: Optional[ExactConfig] = None,
    incumbent: Optional[BalancedColoring] = None,
) -> SolveReport:
    """Depth-first search over vertices 0..n-1, color 1 before color 2.

    The bound at a node is the committed cut plus, for every unassigned vertex,
    the smaller of its edge counts into the two committed classes; those edge
    sets are disjoint, so the sum never overestimates. Class sizes are capped
    at ceil(n/2). Ties with the incumbent are kept alive only while the
    current prefix is lexicographically below it.
    """
    config = config or ExactConfig()
    budget = config.node_budget if budget is None else budget
    n = g.n
    if n < 1:
        raise ValueError("graph must have at least one vertex")
    if n > config.bnb_guard_n:
        raise SizeGuardError(f"n={n} exceeds branch-and-bound guard {config.bnb_guard_n}")
    start = time.perf_counter()
    if n == 1:
        return SolveReport(0, BalancedColoring((1,)), 1, time.perf_counter() - start, BRANCH_AND_BOUND)

    inc = incumbent if incumbent is not None else _initial_incumbent(g)
    if inc.colors[0] != 1:
        inc = inc.swapped()
    best = {"val": cut_size(g, inc.colors), "colors": list(inc.colors), "found": False}
    inc_colors = inc.colors

    nbrs = g.neighbors
    cap = (n + 1) // 2
    color = [0] * n
    into = [[0] * n, [0] * n, [0] * n]  # into[c][v]: edges from v to committed class c
    sizes = [0, 0, 0]
    nodes = [0]

    def assign(v, c):
        # returns change in committed cut and in the lower-bound slack
        other = 3 - c
        d_cut = into[other][v]
        d_slack = -min(into[1][v], into[2][v])
        row = into[c]
        for w in nbrs[v]:
            if color[w] == 0:
                before = min(into[1][w], into[2][w])
                row[w] += 1
                d_slack += min(into[1][w], into[2][w]) - before
        color[v] = c
        sizes[c] += 1
        return d_cut, d_slack

    def unassign(v, c):
        row = into[c]
        for w in nbrs[v]:
            if color[w] == 0:
                row[w] -= 1
        color[v] = 0
        sizes[c] -= 1

    # state: prefix 0 below / 1 equal to / 2 above the incumbent, lexicographically
    def search(v, cut, slack, state):
        nodes[0] += 1
        if budget is not None and nodes[0] > budget:
            raise _BudgetExhausted
        if v == n:
            if cut < best["val"] or (cut == best["val"] and state == 0 and not best["found"]):
                best["val"], best["colors"], best["found"] = cut, color[:], True
            return
        for c in (1, 2):
            if sizes[c] >= cap:
                continue
            if state == 1:
                child_state = 0 if c < inc_colors[v] else (1 if c == inc_colors[v] else 2)
            else:
                child_state = state
            d_cut, d_slack = assign(v, c)
            bound = cut + d_cut + slack + d_slack
            ties_ok = child_state != 2 and not best["found"]
            if bound < best["val"] or (bound == best["val"] and ties_ok):
                search(v + 1, cut + d_cut, slack + d_slack, child_state)
            unassign(v, c)

    optimal = True
    try:
        d_cut, d_slack = assign(0, 1)
        search(1, d_cut, d_slack, 1 if inc_colors[0] == 1 else 0)
    except _BudgetExhausted:
        optimal = False
    colors = tuple(best["colors"])
    return SolveReport(
        best["val"], BalancedColoring(colors), nodes[0], time.perf_counter() - start, BRANCH_AND_BOUND, optimal
    )
