"""Exact constructions of graphs with two distinct eigenvalues."""

from .coloring import (
    EdgeColoring,
    HyperedgeColoring,
    SearchBudgetExceeded,
    bipartite_delta_color,
    color_hyperedges,
    exact_edge_color,
    hypergraph_chromatic_index,
    one_factorize,
    vizing_color,
)
from .exact_linalg import (
    ProjectorFamily,
    RationalMatrix,
    annihilates,
    build_projector_family,
    kron,
    subset_projector,
    verify_nowhere_zero,
)
from .graphs import Graph, Hypergraph, generate, modified_strong_product, representing_graph, strong_product
from .oracle import FloatSpectrum, distinct_count, eigensolve_symmetric
from .witness import (
    SummandFamily,
    WitnessCertificate,
    assemble,
    block_pattern,
    check_pattern_membership,
    eigvec_structure_check,
    witness_hypergraph,
    witness_maxdeg,
    witness_onefactor,
)

__version__ = "0.1.0"
