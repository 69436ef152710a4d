"""Exact-arithmetic construction, enumeration, counting and verification of
harmonic and holomorphic functions on finite multigraphs and truncated
regular trees, over finite fields, cyclic rings and the Eisenstein
integers."""

from .calculus import (
    GraphFunction,
    IncrementVector,
    checked_vertices,
    harmonic_violations,
    holomorphic_violations,
    is_harmonic,
    is_holomorphic,
    laplacian,
    local_condition,
    local_increments,
)
from .enumeration import (
    CountReport,
    count_extension,
    count_functions,
    count_local_restriction,
    enumerate_functions,
    exists_nontrivial_holomorphic,
    verify,
)
from .graphs import (
    Graph,
    TruncatedTree,
    as_graph,
    complete,
    cycle,
    edge_rooted_tree,
    gen,
    multi,
    path,
    star,
    tree,
)
from .rings import (
    EisensteinRing,
    ExtensionField,
    ModRing,
    PrimeField,
    Ring,
    irreducible_poly,
    quadratic_character,
    ring_make,
)
from .solve import (
    DEFAULT_BUDGET,
    BudgetExceededError,
    LocalSolutionSet,
    QuadraticSystem,
    count_diagonal_quadratic_zeros,
    diagonal_counts_exhaustive,
    local_solution_set,
    predicted_N1,
    predicted_N2,
    two_squares_count,
)
from .treedyn import (
    BranchTable,
    DeadEndError,
    DynamicsConfig,
    compare_corollary10,
    dp_neighborhood_count,
    eisenstein_branches,
    root_branches,
    sample_complex_tr3,
    sample_holomorphic_tree,
)

__version__ = "0.1.0"
