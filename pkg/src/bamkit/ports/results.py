"""Result dataclasses for command operations.

These are immutable dataclasses representing the outcome of operations.
Failures are handled via exceptions, so these represent successful results.
"""

from dataclasses import dataclass
from typing import TYPE_CHECKING

from bamkit.utils.types import VariableName

if TYPE_CHECKING:
    from bamkit.audit import CensusEntry, DependencyNode, SensitivityEntry


@dataclass(frozen=True)
class CheckResult:
    """Result of parsing and analyzing a model."""

    model_path: str
    hierarchies: int
    reports: int
    inputs: list[VariableName]
    calculated: list[VariableName]

    @property
    def summary(self) -> str:
        return (
            f"{self.hierarchies} hierarchies, {self.reports} reports, "
            f"{len(self.inputs)} inputs, {len(self.calculated)} calculated"
        )


@dataclass(frozen=True)
class GenerateResult:
    """Result of generating a workbook or value file."""

    output_path: str
    backend: str
    sheets: int
    defined_names: int
    seeded: bool = False


@dataclass(frozen=True)
class EvalResult:
    """Result of evaluating a model over input data."""

    instances: int
    defaulted: int
    output_path: str | None = None


@dataclass(frozen=True)
class VerifyResult:
    """Result of a verification run without mismatches."""

    compared: int
    missing: int
    mismatches: int = 0


@dataclass(frozen=True)
class DepsResult:
    """Dependency tree of one variable."""

    variable: VariableName
    tree: "DependencyNode"
    inputs: list[VariableName]


@dataclass(frozen=True)
class CensusResult:
    """Distinct formulas of a model."""

    count: int
    entries: list["CensusEntry"]


@dataclass(frozen=True)
class SensitivityResult:
    """Sensitivity ranking of one target instance."""

    target: VariableName
    category: str
    period: str
    entries: list["SensitivityEntry"]


@dataclass(frozen=True)
class DocsResult:
    """Result of exporting model documentation."""

    formulas: int
    output_path: str | None = None
