"""Resolved model: variable classification, dependency order and instance grid."""

from .grid import (
    BreakdownLayout,
    CategoryRow,
    InstanceGrid,
    ReportGrid,
    expand,
    layout_breakdown,
)
from .semantic import DependencyGraph, SemanticModel, VariableInfo, analyze

__all__ = [
    "BreakdownLayout",
    "CategoryRow",
    "DependencyGraph",
    "InstanceGrid",
    "ReportGrid",
    "SemanticModel",
    "VariableInfo",
    "analyze",
    "expand",
    "layout_breakdown",
]
