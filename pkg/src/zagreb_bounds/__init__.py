"""Degree-based graph indices, lower bounds on the general Zagreb index, and exhaustive checks."""

from .bounds import (
    BoundSpec,
    BoundValue,
    admissible_specs,
    baseline_bound,
    best_bound,
    bound_ids,
    evaluate,
    general_zagreb_lower_bound,
    lemma1_equality,
    lemma1_rhs,
    m1_pair_bound,
    m2_lower_bound,
    modified_m1_bounds,
    nordhaus_gaddum,
    spectral_lower_bound,
)
from .errors import (
    CapacityError,
    ConvergenceError,
    DomainError,
    GraphRangeError,
    HypothesisError,
    ParseError,
    ZagrebError,
)
from .graph import (
    CorpusSpec,
    DegreeSequence,
    GammaClass,
    Graph,
    complement,
    degree_sequence,
    enumerate_graphs,
    parse_edge_list,
    parse_graph6,
    to_edge_list,
    to_graph6,
)
from .indices import (
    IndexValue,
    compute_all,
    first_zagreb,
    forgotten,
    general_zagreb,
    general_zagreb_coindex,
    inverse_degree,
    modified_first_zagreb,
    second_zagreb,
    spectral_radius,
)
from .scalars import ApproxScalar

__version__ = "0.1.0"

__all__ = [
    "admissible_specs",
    "ApproxScalar",
    "baseline_bound",
    "best_bound",
    "bound_ids",
    "BoundSpec",
    "BoundValue",
    "CapacityError",
    "complement",
    "compute_all",
    "ConvergenceError",
    "CorpusSpec",
    "degree_sequence",
    "DegreeSequence",
    "DomainError",
    "enumerate_graphs",
    "evaluate",
    "first_zagreb",
    "forgotten",
    "GammaClass",
    "general_zagreb",
    "general_zagreb_coindex",
    "general_zagreb_lower_bound",
    "Graph",
    "GraphRangeError",
    "HypothesisError",
    "IndexValue",
    "inverse_degree",
    "lemma1_equality",
    "lemma1_rhs",
    "m1_pair_bound",
    "m2_lower_bound",
    "modified_first_zagreb",
    "modified_m1_bounds",
    "nordhaus_gaddum",
    "parse_edge_list",
    "parse_graph6",
    "ParseError",
    "second_zagreb",
    "spectral_lower_bound",
    "spectral_radius",
    "to_edge_list",
    "to_graph6",
    "ZagrebError",
]
