"""Degree-based graph entropy of k-uniform hypergraphs and exhaustive checks of its extremal bounds."""

from .core import (
    CycleClass,
    DegreeSequence,
    Hypergraph,
    StructureClass,
    classify,
    degree_sequence,
    max_degree,
    pendency,
    validate,
)
from .entropy import BoundPair, degree_entropy, h_bounds, h_value, theorem_bounds
from .enumeration import (
    ExtremalReport,
    enumerate_class,
    enumerate_class_naive,
    extremal_report,
    random_instance,
    verify_theorem,
)
from .families import FamilyTag, Graph, family_member, family_tags, hyperstar, is_isomorphic, loose_path, membership, power
from .io import parse, serialize
from .transforms import MoveSpec, check_lemma_monotonicity, class_closure_check, edge_release, move_edges

__all__ = [
    "BoundPair", "CycleClass", "DegreeSequence", "ExtremalReport", "FamilyTag", "Graph", "Hypergraph",
    "MoveSpec", "StructureClass", "check_lemma_monotonicity", "class_closure_check", "classify",
    "degree_entropy", "degree_sequence", "edge_release", "enumerate_class", "enumerate_class_naive",
    "extremal_report", "family_member", "family_tags", "h_bounds", "h_value", "hyperstar", "is_isomorphic",
    "loose_path", "max_degree", "membership", "move_edges", "parse", "pendency", "power", "random_instance",
    "serialize", "theorem_bounds", "validate", "verify_theorem",
]
