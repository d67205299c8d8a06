"""Semantic analysis: variable table, classification and dependency order."""

import logging
from collections import deque
from dataclasses import dataclass, field
from typing import Literal

from bamkit.language.ast import (
    CategoryHierarchy,
    FormulaDef,
    ModelDocument,
    TimeFrame,
    iter_refs,
    name_key,
    normalized,
)
from bamkit.ports.exceptions import (
    ConflictingDefinitionError,
    CyclicDependencyError,
    UnknownBreakdownTitleError,
    UnknownVariableError,
)
from bamkit.utils.types import Breakdown, NameKey, ReportName, VariableName

logger = logging.getLogger(__name__)

VariableKind = Literal["input", "calculated"]


@dataclass(frozen=True)
class VariableInfo:
    """One entry of the variable table."""

    name: VariableName
    kind: VariableKind
    definition: FormulaDef | None = None
    reports: tuple[ReportName, ...] = ()
    # every breakdown the variable is instantiated on, in first-use order
    breakdowns: tuple[Breakdown, ...] = ()

    @property
    def key(self) -> NameKey:
        return name_key(self.name)

    @property
    def is_input(self) -> bool:
        return self.kind == "input"

    @property
    def is_calculated(self) -> bool:
        return self.kind == "calculated"


@dataclass(frozen=True)
class DependencyGraph:
    """Edges from each calculated variable to the variables its formula reads."""

    edges: dict[NameKey, tuple[NameKey, ...]] = field(default_factory=dict)
    order: tuple[NameKey, ...] = ()

    def dependencies(self, key: NameKey) -> tuple[NameKey, ...]:
        return self.edges.get(key, ())

    def reachable(self, key: NameKey) -> set[NameKey]:
        """All variables reachable from key, excluding key itself."""
        seen: set[NameKey] = set()
        stack = list(self.dependencies(key))
        while stack:
            current = stack.pop()
            if current in seen:
                continue
            seen.add(current)
            stack.extend(self.dependencies(current))
        return seen


@dataclass(frozen=True)
class SemanticModel:
    """Resolved model: document, variable table and dependency graph."""

    document: ModelDocument
    variables: dict[NameKey, VariableInfo]
    graph: DependencyGraph
    # canonical breakdown of each report, aligned with document.reports
    report_breakdowns: tuple[Breakdown, ...] = ()

    @property
    def time_frame(self) -> TimeFrame:
        return self.document.time_frame

    @property
    def inputs(self) -> list[VariableInfo]:
        return [v for v in self.variables.values() if v.is_input]

    @property
    def calculated(self) -> list[VariableInfo]:
        return [v for v in self.variables.values() if v.is_calculated]

    def has_variable(self, name: str) -> bool:
        return name_key(name) in self.variables

    def variable(self, name: str, exit_code: int = 2) -> VariableInfo:
        """Look up a variable by any spelling of its name.

        Raises:
            UnknownVariableError: If no variable has that name
        """
        try:
            return self.variables[name_key(name)]
        except KeyError:
            raise UnknownVariableError(name, exit_code=exit_code) from None

    def in_order(self) -> list[VariableInfo]:
        """Variables in topological order (dependencies first)."""
        return [self.variables[k] for k in self.graph.order]

    def dependencies(self, name: str) -> list[VariableInfo]:
        """Variables directly read by the formula of name (empty for inputs)."""
        info = self.variable(name)
        return [self.variables[k] for k in self.graph.dependencies(info.key)]

    def input_dependencies(self, name: str) -> list[VariableInfo]:
        """Input variables the named variable transitively depends on, table order."""
        reachable = self.graph.reachable(self.variable(name).key)
        return [v for v in self.inputs if v.key in reachable]

    def hierarchy(self, title: str) -> CategoryHierarchy:
        found = self.document.hierarchy(title)
        if found is None:
            raise UnknownBreakdownTitleError(f"Unknown hierarchy '{title}'")
        return found

    @property
    def breakdowns(self) -> list[Breakdown]:
        """Distinct breakdowns used by any variable, in first-use order."""
        seen: dict[Breakdown, None] = {}
        for info in self.variables.values():
            for breakdown in info.breakdowns:
                seen.setdefault(breakdown, None)
        return list(seen)


def _resolve_breakdowns(doc: ModelDocument) -> tuple[Breakdown, ...]:
    resolved: list[Breakdown] = []
    for report in doc.reports:
        titles: list[str] = []
        for title in report.breakdown:
            hierarchy = doc.hierarchy(title)
            if hierarchy is None:
                raise UnknownBreakdownTitleError(
                    f"Report '{report.name}' breaks down by unknown hierarchy '{title}'",
                    line=report.breakdown_line or report.source_line,
                )
            titles.append(hierarchy.title)
        resolved.append(tuple(titles))
    return tuple(resolved)


def _find_cycle(
    remaining: list[NameKey], edges: dict[NameKey, tuple[NameKey, ...]]
) -> list[NameKey]:
    """Walk unresolved dependencies from the first remaining node until one repeats."""
    pending = set(remaining)
    path: list[NameKey] = []
    current = remaining[0]
    while current not in path:
        path.append(current)
        current = next(dep for dep in edges.get(current, ()) if dep in pending)
    return path[path.index(current) :]


def _topological_order(
    keys: list[NameKey], edges: dict[NameKey, tuple[NameKey, ...]]
) -> tuple[NameKey, ...]:
    """Kahn's algorithm; ties are broken by table order.

    Nodes on or behind a cycle are left out of the result.
    """
    unresolved = {k: len(edges.get(k, ())) for k in keys}
    dependents: dict[NameKey, list[NameKey]] = {k: [] for k in keys}
    for key in keys:
        for dep in edges.get(key, ()):
            dependents[dep].append(key)

    queue = deque(k for k in keys if unresolved[k] == 0)
    order: list[NameKey] = []
    while queue:
        key = queue.popleft()
        order.append(key)
        for dependent in dependents[key]:
            unresolved[dependent] -= 1
            if unresolved[dependent] == 0:
                queue.append(dependent)

    return tuple(order)


def analyze(doc: ModelDocument) -> SemanticModel:
    """Classify variables, merge definitions and order the dependency graph.

    Raises:
        UnknownBreakdownTitleError: If a breakdown names an undeclared hierarchy
        ConflictingDefinitionError: If a variable has two different formulas
        CyclicDependencyError: If formulas depend on each other in a cycle
    """
    report_breakdowns = _resolve_breakdowns(doc)

    names: dict[NameKey, VariableName] = {}
    definitions: dict[NameKey, FormulaDef] = {}
    reports: dict[NameKey, list[ReportName]] = {}
    breakdowns: dict[NameKey, list[Breakdown]] = {}

    def mention(name: VariableName, report: ReportName, breakdown: Breakdown) -> None:
        key = name_key(name)
        names.setdefault(key, name)
        if report not in reports.setdefault(key, []):
            reports[key].append(report)
        if breakdown not in breakdowns.setdefault(key, []):
            breakdowns[key].append(breakdown)

    for report, breakdown in zip(doc.reports, report_breakdowns):
        for formula in report.formulas:
            mention(formula.target, report.name, breakdown)
            for ref in iter_refs(formula.body):
                mention(ref.name, report.name, breakdown)

            previous = definitions.get(formula.key)
            if previous is None:
                definitions[formula.key] = formula
            elif normalized(previous.body) != normalized(formula.body):
                raise ConflictingDefinitionError(
                    f"'{formula.target}' is defined differently than on "
                    f"line {previous.source_line}",
                    line=formula.source_line,
                )

    keys = list(names)
    edges: dict[NameKey, tuple[NameKey, ...]] = {
        key: tuple(dict.fromkeys(ref.key for ref in iter_refs(formula.body)))
        for key, formula in definitions.items()
    }
    order = _topological_order(keys, edges)
    if len(order) != len(keys):
        placed = set(order)
        cycle = _find_cycle([k for k in keys if k not in placed], edges)
        raise CyclicDependencyError(
            [names[k] for k in cycle], line=definitions[cycle[0]].source_line
        )

    # operands are instantiated wherever the formula that reads them is
    for key in reversed(order):
        for dep in edges.get(key, ()):
            for breakdown in breakdowns[key]:
                if breakdown not in breakdowns[dep]:
                    breakdowns[dep].append(breakdown)

    variables = {
        key: VariableInfo(
            name=names[key],
            kind="calculated" if key in definitions else "input",
            definition=definitions.get(key),
            reports=tuple(reports[key]),
            breakdowns=tuple(breakdowns[key]),
        )
        for key in keys
    }
    model = SemanticModel(
        document=doc,
        variables=variables,
        graph=DependencyGraph(edges=edges, order=order),
        report_breakdowns=report_breakdowns,
    )
    logger.debug(
        "Analyzed %d inputs and %d calculated variables",
        len(model.inputs),
        len(model.calculated),
    )
    return model
