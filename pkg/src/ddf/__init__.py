"""Degree-specified digraph realization and connectivity augmentation.

Exact feasibility checkers with re-checkable certificates, witness
construction at desk scale and a brute-force oracle to certify both.
"""

from __future__ import annotations

from .bisets import BiSet, PFunctionContext, max_p1_independent, p_value
from .characterize import (
    AugmentInstance,
    check_cover_crossing_family,
    check_edge_augment_multigraph,
    check_edge_augment_plus_one,
    check_instance,
    check_k_connected_degree_sequence,
    check_node_augment_multigraph,
    check_node_augment_simple,
    check_strong_augment_simple,
    check_strong_simple,
    recheck_certificate,
)
from .digraph import DegreeSpec, Digraph, complement, complete_digraph, star_graph
from .errors import (
    CapExceeded,
    DDFError,
    InputError,
    InvariantViolation,
    PreconditionError,
)
from .realize import (
    RealizationResult,
    greedy_realize,
    loop_reduce,
    ore_realize,
    simple_realizable,
    simple_realize,
)
from .verdict import FeasibilityVerdict

__version__ = "0.1.0"

__all__ = [
    "AugmentInstance",
    "BiSet",
    "CapExceeded",
    "DDFError",
    "DegreeSpec",
    "Digraph",
    "FeasibilityVerdict",
    "InputError",
    "InvariantViolation",
    "PFunctionContext",
    "PreconditionError",
    "RealizationResult",
    "check_cover_crossing_family",
    "check_edge_augment_multigraph",
    "check_edge_augment_plus_one",
    "check_instance",
    "check_k_connected_degree_sequence",
    "check_node_augment_multigraph",
    "check_node_augment_simple",
    "check_strong_augment_simple",
    "check_strong_simple",
    "complement",
    "complete_digraph",
    "greedy_realize",
    "loop_reduce",
    "max_p1_independent",
    "ore_realize",
    "p_value",
    "recheck_certificate",
    "simple_realizable",
    "simple_realize",
    "star_graph",
]
