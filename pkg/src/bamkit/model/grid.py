"""Expansion of a SemanticModel over category rows and periods.

Rows of one hierarchy are laid out depth-first in declaration order: an
internal node emits a header row, its children and then its roll-up row; the
grand roll-up row closes the hierarchy. With several breakdown hierarchies the
first one is the outer nesting level and every outer coordinate repeats the
complete inner block underneath a header row.
"""

import itertools
from dataclasses import dataclass, field
from typing import Literal

from bamkit.language.ast import CategoryHierarchy, CategoryNode
from bamkit.ports.exceptions import AnalysisError
from bamkit.utils.types import Breakdown, CategoryPath, NameKey, ReportName

from .semantic import SemanticModel, VariableInfo

# header: label only; single: the one row of an empty breakdown
RowKind = Literal["header", "leaf", "rollup", "grand", "single"]

MAX_OUTLINE_LEVEL = 7


@dataclass(frozen=True)
class CategoryRow:
    """One row of a breakdown layout.

    ``level`` is the outline level of the row's label; the variable rows
    listed under the label sit one level deeper. ``members`` are the leaf
    paths a row aggregates (the row's own path for a leaf).
    """

    kind: RowKind
    label: str
    path: CategoryPath
    level: int
    members: tuple[CategoryPath, ...] = ()

    @property
    def is_instance(self) -> bool:
        return self.kind != "header"

    @property
    def is_aggregate(self) -> bool:
        return self.kind in ("rollup", "grand")

    @property
    def label_level(self) -> int:
        return max(0, min(self.level, MAX_OUTLINE_LEVEL))

    @property
    def variable_level(self) -> int:
        return max(0, min(self.level + 1, MAX_OUTLINE_LEVEL))


@dataclass(frozen=True)
class BreakdownLayout:
    """Ordered category rows for one breakdown."""

    breakdown: Breakdown
    rows: tuple[CategoryRow, ...]

    @property
    def instance_rows(self) -> list[CategoryRow]:
        return [r for r in self.rows if r.is_instance]

    @property
    def leaf_paths(self) -> list[CategoryPath]:
        return [r.path for r in self.rows if r.kind in ("leaf", "single")]

    def row(self, path: CategoryPath) -> CategoryRow | None:
        for row in self.rows:
            if row.is_instance and row.path == path:
                return row
        return None


@dataclass(frozen=True)
class ReportGrid:
    """A report's layout and the variables its formulas mention."""

    name: ReportName
    index: int
    layout: BreakdownLayout
    variables: tuple[NameKey, ...]

    @property
    def breakdown(self) -> Breakdown:
        return self.layout.breakdown


@dataclass(frozen=True)
class InstanceGrid:
    """Every variable instantiated over category rows and periods."""

    period_labels: tuple[str, ...]
    layouts: dict[Breakdown, BreakdownLayout]
    reports: tuple[ReportGrid, ...] = ()
    # variable key -> breakdowns it is instantiated on
    variable_breakdowns: dict[NameKey, tuple[Breakdown, ...]] = field(
        default_factory=dict
    )

    @property
    def period_count(self) -> int:
        return len(self.period_labels)

    def rows_for(self, key: NameKey) -> list[tuple[Breakdown, CategoryRow]]:
        """Instance rows of a variable across all of its breakdowns."""
        return [
            (breakdown, row)
            for breakdown in self.variable_breakdowns.get(key, ())
            for row in self.layouts[breakdown].instance_rows
        ]

    def leaf_paths_for(self, key: NameKey) -> list[CategoryPath]:
        return [
            path
            for breakdown in self.variable_breakdowns.get(key, ())
            for path in self.layouts[breakdown].leaf_paths
        ]

    def row_for(self, key: NameKey, path: CategoryPath) -> CategoryRow | None:
        for breakdown in self.variable_breakdowns.get(key, ()):
            if (row := self.layouts[breakdown].row(path)) is not None:
                return row
        return None

    def instance_count(self) -> int:
        """Number of (variable, row, period) instances in the grid."""
        return sum(len(self.rows_for(k)) for k in self.variable_breakdowns) * (
            self.period_count
        )


def _hierarchy_rows(hierarchy: CategoryHierarchy) -> list[CategoryRow]:
    rows: list[CategoryRow] = []
    total = hierarchy.grand_label

    def visit(node: CategoryNode, prefix: CategoryPath) -> None:
        path = (*prefix, node.name)
        level = node.depth - 1
        if node.is_leaf:
            rows.append(CategoryRow("leaf", node.name, path, level, (path,)))
            return
        rows.append(CategoryRow("header", node.name, path, level))
        for child in node.children:
            visit(child, path)
        rows.append(
            CategoryRow(
                "rollup",
                f"{node.name}, {total}",
                (*path, total),
                level,
                tuple(node.leaf_paths(prefix)),
            )
        )

    for root in hierarchy.roots:
        visit(root, ())
    rows.append(
        CategoryRow("grand", total, (total,), 0, tuple(hierarchy.leaf_paths()))
    )
    return rows


def _combined_kind(outer: CategoryRow, inner: CategoryRow) -> RowKind:
    if inner.kind == "header":
        return "header"
    if outer.kind == "leaf" and inner.kind == "leaf":
        return "leaf"
    if outer.kind == "grand" and inner.kind == "grand":
        return "grand"
    return "rollup"


def _nest(outer_rows: list[CategoryRow], inner_rows: list[CategoryRow]) -> list[CategoryRow]:
    rows: list[CategoryRow] = []
    for outer in outer_rows:
        rows.append(CategoryRow("header", outer.label, outer.path, outer.level))
        if not outer.is_instance:
            continue
        offset = outer.level + 1
        for inner in inner_rows:
            rows.append(
                CategoryRow(
                    _combined_kind(outer, inner),
                    inner.label,
                    outer.path + inner.path,
                    inner.level + offset,
                    tuple(
                        o + i
                        for o, i in itertools.product(outer.members, inner.members)
                    ),
                )
            )
    return rows


def layout_breakdown(model: SemanticModel, breakdown: Breakdown) -> BreakdownLayout:
    """Lay out the category rows of one breakdown.

    Raises:
        AnalysisError: If two instance rows end up with the same category path
    """
    if not breakdown:
        return BreakdownLayout((), (CategoryRow("single", "", (), -1, ((),)),))

    rows = _hierarchy_rows(model.hierarchy(breakdown[-1]))
    for title in reversed(breakdown[:-1]):
        rows = _nest(_hierarchy_rows(model.hierarchy(title)), rows)

    paths = [r.path for r in rows if r.is_instance]
    if len(set(paths)) != len(paths):
        raise AnalysisError(
            f"Breakdown by {', '.join(breakdown)} produces ambiguous category paths"
        )
    return BreakdownLayout(breakdown, tuple(rows))


def _check_distinct_paths(
    info: VariableInfo, layouts: dict[Breakdown, BreakdownLayout]
) -> None:
    seen: set[CategoryPath] = set()
    for breakdown in info.breakdowns:
        for row in layouts[breakdown].instance_rows:
            if row.path in seen:
                raise AnalysisError(
                    f"'{info.name}' has two rows for category "
                    f"'{';'.join(row.path)}' across its breakdowns"
                )
            seen.add(row.path)


def expand(model: SemanticModel) -> InstanceGrid:
    """Expand every variable over its breakdowns' category rows and the periods.

    Raises:
        AnalysisError: If a variable's rows are not distinguishable by path
    """
    layouts = {b: layout_breakdown(model, b) for b in model.breakdowns}
    for breakdown in model.report_breakdowns:
        layouts.setdefault(breakdown, layout_breakdown(model, breakdown))
    for info in model.variables.values():
        _check_distinct_paths(info, layouts)

    reports = []
    for index, (report, breakdown) in enumerate(
        zip(model.document.reports, model.report_breakdowns)
    ):
        mentioned: dict[NameKey, None] = {}
        for formula in report.formulas:
            mentioned.setdefault(formula.key, None)
            for key in model.graph.dependencies(formula.key):
                mentioned.setdefault(key, None)
        reports.append(
            ReportGrid(report.name, index, layouts[breakdown], tuple(mentioned))
        )

    return InstanceGrid(
        period_labels=tuple(model.time_frame.period_labels()),
        layouts=layouts,
        reports=tuple(reports),
        variable_breakdowns={k: v.breakdowns for k, v in model.variables.items()},
    )
