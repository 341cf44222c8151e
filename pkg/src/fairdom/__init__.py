"""fairdom: exact enumeration, counting and verification of fair dominating sets.

A dominating set is fair when every vertex outside it sees the same number of
its members. The package provides a pruned exhaustive oracle over arbitrary
small graphs (compiled kernel with a pure-Python fallback), closed-form
evaluators for the published families, the fair domination polynomial, and a
verifier that arbitrates published formulas and tables against the oracle.
"""

from .closed_forms import (
    Applicability,
    FormulaResult,
    cactus_claims,
    cactus_count,
    complete_poly,
    cycle_corollary,
    cycle_count,
    cycle_fd_number,
    friendship_count,
    knn_count,
    path_special,
)
from .combinatorics import (
    binomial,
    compositions,
    cycle_block_count,
    cycle_block_sets,
    cycle_division_formula,
    cycle_division_total,
    multinomial,
    partitions,
)
from .engine import (
    DEFAULT_CAP,
    HARD_CAP,
    KERNEL_BACKEND,
    FairDomPolynomial,
    FairnessResult,
    FairnessStatus,
    classify,
    count_fd,
    enumerate_fd,
    fd_k_number,
    fd_number,
    fd_polynomial,
    gamma,
)
from .errors import CapacityError, FormulaInconsistencyError
from .families import (
    FamilySpec,
    complete,
    complete_bipartite,
    corona,
    cycle,
    empty_graph,
    friendship,
    join,
    parse_family,
    path,
    triangular_cactus,
)
from .graph import Graph, VertexSet, load_edge_list, parse_edge_list, save_edge_list

__version__ = "0.1.0"
