"""Claw-free graphs under a second forbidden induced subgraph: perfectness
classification, exception lists and exhaustive verification tools."""

from ._jit import JIT_ENABLED
from .catalog import exceptions, h_graphs, named, validate_catalog
from .classify import classify_pair, member_of_class_G, verdict
from .families import FamilySpec, build_family, inflate_cycle, recognize_inflation
from .graph import Graph, GraphError, build, from_graph6, to_graph6
from .holes import find_odd_antihole, find_odd_hole, is_perfect
from .iso import are_isomorphic, canonical_form, contains_induced, is_free

__version__ = "0.1.0"

__all__ = [
    "JIT_ENABLED", "Graph", "GraphError", "FamilySpec",
    "are_isomorphic", "build", "build_family", "canonical_form", "classify_pair",
    "contains_induced", "exceptions", "find_odd_antihole", "find_odd_hole",
    "from_graph6", "h_graphs", "inflate_cycle", "is_free", "is_perfect",
    "member_of_class_G", "named", "recognize_inflation", "to_graph6",
    "validate_catalog", "verdict",
]
