"""Audit artifacts: dependency trees, formula census, sensitivity and documentation."""

from .census import Census, CensusEntry, formula_census
from .docs import export_docs, extract_model_source
from .sensitivity import SensitivityEntry, perturb, sensitivity_rank
from .tree import DependencyNode, dependency_tree, render_tree

__all__ = [
    "Census",
    "CensusEntry",
    "DependencyNode",
    "SensitivityEntry",
    "dependency_tree",
    "export_docs",
    "extract_model_source",
    "formula_census",
    "perturb",
    "render_tree",
    "sensitivity_rank",
]
