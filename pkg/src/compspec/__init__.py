"""Complementarity spectra of finite simple digraphs.

The complementarity spectrum of a digraph collects the spectral radii of
its induced strongly connected subdigraphs. This package computes certified
spectra, classifies digraphs by spectrum cardinality, builds the cycle,
infinity, theta, infinity-hat and dj families with their cospectral
constructions, and searches small orders exhaustively for non-isomorphic
cospectral mates.
"""

from .digraph import (
    Digraph,
    canonical_form,
    converse,
    format_edge_list,
    from_arcs,
    induced,
    is_isomorphic,
    parse_edge_list,
    to_dot,
)
from .errors import (
    CompspecError,
    IncomparableTolerances,
    InvalidFamilyParameters,
    NoRealRootAtOrAboveZero,
    NonConvergence,
    NotStronglyConnected,
    SelfLoopError,
    SizeLimitExceeded,
    VertexOutOfRangeError,
)
from .families import (
    DJ,
    Cycle,
    FamilySpec,
    Infinity,
    InfinityHat,
    Theta,
    closed_form_charpoly,
    generate,
    infinity_for_theta,
    notdcs_pairs,
    parse_spec,
    prop12_pair,
    thetas_for_infinity,
)
from .sachs import LinearSubdigraph, enumerate_cycles, linear_subdigraphs, sachs_char_poly
from .scc import SccDecomposition, decompose, is_acyclic, is_strongly_connected
from .search import (
    CospectralClass,
    SearchReport,
    enumerate_digraphs,
    find_by_charpoly,
    find_cospectral_classes,
    is_dcs,
)
from .spectral import (
    EXACT_ZERO,
    Polynomial,
    RadiusEstimate,
    char_poly_exact,
    eval_poly,
    largest_real_root,
    radius_of_masks,
    spectral_radius,
)
from .spectrum import (
    CardinalityClass,
    CompSpectrum,
    classify_cardinality,
    complementarity_spectrum,
    contains_cycle,
    spectra_equal,
    verify_eicp_definition,
)

__version__ = "0.1.0"

__all__ = [
    "CardinalityClass",
    "CompSpectrum",
    "CompspecError",
    "CospectralClass",
    "Cycle",
    "DJ",
    "Digraph",
    "EXACT_ZERO",
    "FamilySpec",
    "IncomparableTolerances",
    "Infinity",
    "InfinityHat",
    "InvalidFamilyParameters",
    "LinearSubdigraph",
    "NoRealRootAtOrAboveZero",
    "NonConvergence",
    "NotStronglyConnected",
    "Polynomial",
    "RadiusEstimate",
    "SccDecomposition",
    "SearchReport",
    "SelfLoopError",
    "SizeLimitExceeded",
    "Theta",
    "VertexOutOfRangeError",
    "canonical_form",
    "char_poly_exact",
    "classify_cardinality",
    "closed_form_charpoly",
    "complementarity_spectrum",
    "contains_cycle",
    "converse",
    "decompose",
    "enumerate_cycles",
    "enumerate_digraphs",
    "eval_poly",
    "find_by_charpoly",
    "find_cospectral_classes",
    "format_edge_list",
    "from_arcs",
    "generate",
    "induced",
    "infinity_for_theta",
    "is_acyclic",
    "is_dcs",
    "is_isomorphic",
    "is_strongly_connected",
    "largest_real_root",
    "linear_subdigraphs",
    "notdcs_pairs",
    "parse_edge_list",
    "parse_spec",
    "prop12_pair",
    "radius_of_masks",
    "sachs_char_poly",
    "spectra_equal",
    "spectral_radius",
    "thetas_for_infinity",
    "to_dot",
    "verify_eicp_definition",
]
