"""Rooted labeled trees counted by the size of their maximal decreasing subtree."""

from .counting import Method, TriangleRow, t_count, triangle_row
from .trees import (
    RootedLabeledTree,
    brute_force_triangle,
    decompose,
    enumerate_trees,
    maximal_decreasing_subtree,
    validate,
)

__version__ = "0.1.0"

__all__ = [
    "Method",
    "RootedLabeledTree",
    "TriangleRow",
    "brute_force_triangle",
    "decompose",
    "enumerate_trees",
    "maximal_decreasing_subtree",
    "t_count",
    "triangle_row",
    "validate",
]
