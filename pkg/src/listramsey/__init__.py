"""Multicolor list Ramsey numbers: exact small-scale search and randomized constructions."""

from .bounds import (
    BoundReport,
    c_r,
    pattern_reports,
    size_degree_lowers,
    theorem11_bounds,
    theorem12_lower,
    theorem31_bounds,
)
from .coloring import Coloring, ListAssignment
from .construct import (
    ConstructionFailed,
    FeasibilityReport,
    HomomorphismSystem,
    InfeasibleParameters,
    balanced_bipartite,
    lll_construct,
    lll_feasibility,
    lll_host_feasibility,
    max_feasible_n,
    prop14_threshold,
    union_bound_construct,
)
from .decide import DecisionOutcome, is_family_ramsey, is_list_ramsey, scan_not_ramsey
from .extremal import (
    BudgetExceeded,
    DensityEstimate,
    SymmetrizationTrace,
    TuranResult,
    degree_target,
    density_estimate,
    m_parameter,
    symmetrize,
    turan_number,
)
from .hypergraph import (
    Hypergraph,
    VertexPartition,
    degree,
    duplicate_vertex,
    is_r_partite,
    min_degree,
    named,
    weak_chromatic_number,
)
from .morphism import (
    Embedding,
    VertexMap,
    find_copy,
    find_homomorphism,
    is_hom_free,
    verify_coloring,
)

__version__ = "0.1.0"
