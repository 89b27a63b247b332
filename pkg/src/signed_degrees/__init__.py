"""Signed degree sets and signed degree sequences of signed graphs."""

from .graph import (
    DegreeSet,
    DomainError,
    GraphBuilder,
    Sign,
    SignedGraph,
    disjoint_union,
    is_connected,
    negate_signs,
    signed_degree,
    signed_degree_sequence,
    signed_degree_set,
)
from .graphicality import (
    compute_m,
    is_graphical_chartrand,
    is_graphical_yan,
    realize_sequence,
    reduce_chartrand,
    reduction_trace,
    standardize,
)
from .io import GraphParseError, from_json, to_dot, to_json
from .oracle import (
    BudgetExceeded,
    EnumerationBudget,
    enumerate_signed_graphs,
    oracle_is_graphical,
    oracle_min_order,
    oracle_realizable_at_order,
)
from .realize import (
    RealizationResult,
    realize_negative_set,
    realize_positive_set,
    realize_set,
    replicate,
)

__version__ = "0.1.0"
