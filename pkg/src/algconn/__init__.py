"""Algebraic connectivity toolkit: Laplacian spectra and Fiedler structure,
matching/cover invariants, double-broom families, isomorph-free enumeration
of small graphs, and an exhaustive verification harness with closed-form
lower bounds."""

from .errors import (
    ClassificationInconsistent,
    DimensionMismatch,
    EmptyClassWarning,
    GraphError,
    Infeasible,
    InvalidVertex,
    IsolatedVertex,
    NoConvergence,
    NoCycle,
    NotATree,
    NotConnected,
    NotSymmetric,
    ParseError,
    SelfLoop,
    TooLarge,
    TooSmall,
    TrivialBranch,
    UnknownTarget,
    ZeroVector,
)
from .graph import (
    CanonicalForm,
    Graph,
    InvariantSummary,
    canonical_form,
    diameter,
    encode_graph6,
    format_edge_list,
    from_edge_list,
    is_connected,
    is_isomorphic,
    is_tree,
    parse_edge_list,
    parse_graph6,
    relabel,
)
from .spectral import (
    FiedlerClass,
    FiedlerData,
    Spectrum,
    algebraic_connectivity,
    classify_fiedler,
    eigen_symmetric,
    fiedler_vector,
    laplacian,
    rayleigh_quotient,
)
from .matching import (
    Matching,
    edge_cover_number,
    matching_number,
    maximum_matching,
    spanning_tree_preserving_matching,
    spanning_unicyclic_preserving_matching,
)
from .families import (
    BroomParams,
    balanced_broom,
    coalescence,
    complete_graph,
    cycle_graph,
    double_broom,
    extremal_tree,
    path_graph,
    relocate_branch,
    star_graph,
)
from .enumeration import (
    GraphStream,
    all_connected_graphs,
    all_trees,
    with_cover,
    with_matching,
)
from .verification import (
    TARGETS,
    VerificationReport,
    WitnessRecord,
    bound_cover,
    bound_matching,
    kirkland_bound,
    path_alpha,
    verify,
)

__version__ = "0.1.0"

__all__ = [
    "BroomParams",
    "CanonicalForm",
    "ClassificationInconsistent",
    "DimensionMismatch",
    "EmptyClassWarning",
    "FiedlerClass",
    "FiedlerData",
    "Graph",
    "GraphError",
    "GraphStream",
    "Infeasible",
    "InvalidVertex",
    "InvariantSummary",
    "IsolatedVertex",
    "Matching",
    "NoConvergence",
    "NoCycle",
    "NotATree",
    "NotConnected",
    "NotSymmetric",
    "ParseError",
    "SelfLoop",
    "Spectrum",
    "TARGETS",
    "TooLarge",
    "TooSmall",
    "TrivialBranch",
    "UnknownTarget",
    "VerificationReport",
    "WitnessRecord",
    "ZeroVector",
    "algebraic_connectivity",
    "all_connected_graphs",
    "all_trees",
    "balanced_broom",
    "bound_cover",
    "bound_matching",
    "canonical_form",
    "classify_fiedler",
    "coalescence",
    "complete_graph",
    "cycle_graph",
    "diameter",
    "double_broom",
    "edge_cover_number",
    "eigen_symmetric",
    "encode_graph6",
    "extremal_tree",
    "fiedler_vector",
    "format_edge_list",
    "from_edge_list",
    "is_connected",
    "is_isomorphic",
    "is_tree",
    "kirkland_bound",
    "laplacian",
    "matching_number",
    "maximum_matching",
    "parse_edge_list",
    "parse_graph6",
    "path_alpha",
    "path_graph",
    "rayleigh_quotient",
    "relabel",
    "relocate_branch",
    "spanning_tree_preserving_matching",
    "spanning_unicyclic_preserving_matching",
    "star_graph",
    "verify",
    "with_cover",
    "with_matching",
]
