"""Degeneration graphs, transitive closure, irreducible components and DOT output."""

from .components import ClaimViolation, ComponentReport, InconsistentClaim, component_candidates, irreducible_components
from .dot import DotOptions, emit_dot
from .graph import (
    DegenGraph,
    GraphEdge,
    GraphNode,
    NonEdge,
    build_graph,
    classify,
    consistency_conflicts,
    figure_graph,
    jacobian_rank,
    transitive_closure,
)

__all__ = [
    "ClaimViolation",
    "ComponentReport",
    "DegenGraph",
    "DotOptions",
    "GraphEdge",
    "GraphNode",
    "InconsistentClaim",
    "NonEdge",
    "build_graph",
    "classify",
    "component_candidates",
    "consistency_conflicts",
    "emit_dot",
    "figure_graph",
    "irreducible_components",
    "jacobian_rank",
    "transitive_closure",
]
