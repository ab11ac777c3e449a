"""Mutual-visibility numbers of graphs: verifiers, exact solver, constructions."""

from .graphs import CeilingError, Graph, GraphError
from .genlang import ParseError, build, parse_spec
from .solver import SolveOptions, SolveResult, max_visibility, visibility_numbers
from .visibility import ALL_VARIANTS, Variant, VertexSet, VisibilityReport, verify, verify_line_complete

__all__ = [
    "ALL_VARIANTS",
    "CeilingError",
    "Graph",
    "GraphError",
    "ParseError",
    "SolveOptions",
    "SolveResult",
    "Variant",
    "VertexSet",
    "VisibilityReport",
    "build",
    "max_visibility",
    "parse_spec",
    "verify",
    "verify_line_complete",
    "visibility_numbers",
]
