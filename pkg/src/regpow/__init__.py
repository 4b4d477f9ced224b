"""Exact computation of regularity, powers, and symbolic powers of edge
ideals of graphs, with a degree-complex engine and a Betti-number oracle."""

from .complexes import SimplicialComplex, complex_of_ideal, ideal_of_complex
from .graphs import (
    Graph,
    all_labeled_graphs,
    complete_bipartite_graph,
    complete_graph,
    cycle_graph,
    edge_ideal,
    gnp_random_graph,
    graph_isomorphism_classes,
    path_graph,
    random_gap_free_graph,
)
from .homology import GF2, QQ, CoefficientField, HomologyProfile, homology
from .monomials import (
    MonomialIdeal,
    exponent_box,
    format_monomial,
    intersect_many,
    minimalize,
    monomial_derivative,
    parse_monomial,
    unit_ideal,
    zero_ideal,
)
from .powers import (
    IntermediateSpec,
    colon_identity_holds,
    differential_membership,
    edge_packing_order,
    independent_set_colon_criterion,
    intermediate_ideal,
    power_membership,
    sample_intermediates,
    symbolic_power,
    symbolic_power_of_ideal,
)
from .regularity import (
    BettiTable,
    MethodMismatchError,
    RegularityCertificate,
    betti_table,
    degree_complex,
    extremal_pairs,
    has_linear_resolution,
    regularity,
    regularity_from_betti,
    regularity_with_certificates,
    verify_certificate,
)

__version__ = "0.1.0"
