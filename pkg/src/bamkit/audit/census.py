"""Distinct-formula census: the auditor's unit of inspection work."""

from dataclasses import dataclass

from bamkit.language.ast import VariableRef
from bamkit.language.expressions import format_expression
from bamkit.model.semantic import SemanticModel
from bamkit.utils.types import ReportName, VariableName


@dataclass(frozen=True)
class CensusEntry:
    formula: str
    variable: VariableName
    reports: tuple[ReportName, ...]


@dataclass(frozen=True)
class Census:
    entries: tuple[CensusEntry, ...]

    @property
    def count(self) -> int:
        return len(self.entries)


def formula_census(model: SemanticModel) -> Census:
    """List each distinct formula once, with the reports that carry it.

    A formula repeated in several reports is merged by analysis into one
    definition, so there is exactly one entry per calculated variable.
    """

    def name_of(ref: VariableRef) -> str:
        return model.variables[ref.key].name

    carriers: dict[str, set[ReportName]] = {}
    for report in model.document.reports:
        for formula in report.formulas:
            carriers.setdefault(formula.key, set()).add(report.name)

    entries = []
    for info in model.calculated:
        assert info.definition is not None
        text = f"{info.name} = {format_expression(info.definition.body, name_of)}"
        entries.append(CensusEntry(text, info.name, tuple(sorted(carriers[info.key]))))
    return Census(tuple(sorted(entries, key=lambda e: e.formula)))
