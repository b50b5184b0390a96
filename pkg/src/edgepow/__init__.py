"""Associated primes of edge ideal powers, computed combinatorially.

For a simple graph and its edge ideal I, every associated prime of I^t
corresponds to a vertex cover; the embedded ones are detected through
cores, dominating sets, and the mu* invariant of ear decompositions.
A brute-force socle oracle provides an independent cross-check.
"""

from .assoc import (
    AssResult,
    EmbeddedTestResult,
    StabilityReport,
    ass_infinity,
    associated_primes,
    cover_report,
    depth_positive_test,
    embedded_prime_test,
    graph_hash,
    max_ideal_in_ass,
)
from .catalog import connected_graphs, random_connected_graph
from .ears import (
    Ear,
    EarDecomposition,
    MuStarResult,
    critical_weights,
    mu_star_value,
    mu_star_via_weights,
    odd_ear_decomposition,
    phi_star,
    reduce_decomposition,
    s_invariant,
    s_invariant_with_witness,
)
from .errors import (
    DisconnectedInputError,
    EdgepowError,
    GraphInputError,
    IsolatedVertexError,
    NotACoverError,
    NotStronglyNonBipartiteError,
    ResourceLimitError,
)
from .graph import (
    CoverReport,
    Graph,
    canonical_form,
    canonical_key,
    closed_neighborhood,
    connected_components,
    core,
    induced_subgraph,
    is_cover,
    is_dominating,
    is_strongly_non_bipartite,
    minimal_covers,
)
from .io import (
    load_graph,
    parse_graph_json,
    parse_graph_text,
    parse_inline_edges,
    serialize_graph_json,
    serialize_graph_text,
)
from .sbases import SBase, enumerate_minimal_sbases, is_minimal_sbase, is_sbase
from .socle import (
    SocleWitness,
    oracle_max_ideal_in_ass,
    oracle_prime_in_ass,
    verify_socle_conditions,
)
from .weighted import (
    WeightedGraph,
    WeightVector,
    augment_weights,
    has_perfect_matching,
    is_factor_critical,
    is_matching,
    is_matching_critical,
    matching_number,
    matching_number_exhaustive,
    maximum_matching,
    monomial_in_power,
    polarize,
    unit_weights,
    weight_vectors,
)

__version__ = "0.1.0"

__all__ = [
    "AssResult",
    "CoverReport",
    "DisconnectedInputError",
    "Ear",
    "EarDecomposition",
    "EdgepowError",
    "EmbeddedTestResult",
    "Graph",
    "GraphInputError",
    "IsolatedVertexError",
    "MuStarResult",
    "NotACoverError",
    "NotStronglyNonBipartiteError",
    "ResourceLimitError",
    "SBase",
    "SocleWitness",
    "StabilityReport",
    "WeightVector",
    "WeightedGraph",
    "ass_infinity",
    "associated_primes",
    "augment_weights",
    "canonical_form",
    "canonical_key",
    "closed_neighborhood",
    "connected_components",
    "connected_graphs",
    "core",
    "cover_report",
    "critical_weights",
    "depth_positive_test",
    "embedded_prime_test",
    "enumerate_minimal_sbases",
    "graph_hash",
    "has_perfect_matching",
    "induced_subgraph",
    "is_cover",
    "is_dominating",
    "is_factor_critical",
    "is_matching",
    "is_matching_critical",
    "is_minimal_sbase",
    "is_sbase",
    "is_strongly_non_bipartite",
    "load_graph",
    "matching_number",
    "matching_number_exhaustive",
    "max_ideal_in_ass",
    "maximum_matching",
    "minimal_covers",
    "monomial_in_power",
    "mu_star_value",
    "mu_star_via_weights",
    "odd_ear_decomposition",
    "oracle_max_ideal_in_ass",
    "oracle_prime_in_ass",
    "parse_graph_json",
    "parse_graph_text",
    "parse_inline_edges",
    "phi_star",
    "polarize",
    "random_connected_graph",
    "reduce_decomposition",
    "s_invariant",
    "s_invariant_with_witness",
    "serialize_graph_json",
    "serialize_graph_text",
    "unit_weights",
    "verify_socle_conditions",
    "weight_vectors",
]
