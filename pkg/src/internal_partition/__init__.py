"""Solvers and checkers for (a,b)-internal partitions of graphs."""

from .constructive import DichotomyFailure, NotFourSparseError, find_internal_partition_4sparse
from .degeneracy import (
    is_degenerate,
    maximal_internal_subset,
    minimal_internal_subset,
    peel_core,
)
from .generation import GenSpec, named_graph, random_regular
from .graph import (
    DemandFunctions,
    Graph,
    Partition,
    cut_size,
    degree_in_subset,
    is_four_sparse,
    move_delta_w,
    potential_w,
    verify_internal,
)
from .heuristic import HeuristicConfig, local_search, objective_violation
from .oracle import brute_force_degenerate, brute_force_four_sparse, brute_force_partition

__version__ = "0.1.0"
