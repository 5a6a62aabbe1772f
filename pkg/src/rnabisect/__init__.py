"""Minimum bisection width (rna number) of graphs, with tooling for cycle powers."""

from .bounds import (
    ReductionResult,
    circulant_cut_size,
    contiguous_coloring,
    kang_bound,
    reduce_cycle_power,
    ska_bounds,
    theorem_value,
)
from .coloring import (
    BalancedColoring,
    CutSet,
    VertexLabeling,
    coloring_to_labeling,
    cut_set,
    is_balanced,
    labeling_to_coloring,
    labeling_to_signature,
)
from .exact import ExactConfig, SolveReport, branch_and_bound_rna, brute_force_rna
from .graph import (
    FamilyTag,
    Graph,
    complete_graph,
    cycle_graph,
    cycle_power,
    make_family,
    parse_edge_list,
    path_graph,
    serialize_edge_list,
    star_graph,
    wheel_graph,
)
from .heuristic import LocalSearchConfig, local_search_rna

__version__ = "0.1.0"
