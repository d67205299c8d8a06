"""Backend-neutral workbook model and its construction from an InstanceGrid.

Every variable row's period cells form one defined-name region. Formulas refer
to regions by name only and rely on same-column correspondence: a name used in
column C denotes the region's value in column C.
"""

import logging
from dataclasses import dataclass, field
from typing import TypeAlias

from bamkit.language.ast import BinaryOp, Expr, VariableRef, strip_parens
from bamkit.language.expressions import format_expression
from bamkit.model.grid import BreakdownLayout, CategoryRow, InstanceGrid
from bamkit.model.semantic import SemanticModel, VariableInfo
from bamkit.shadow.cube import UNDEFINED, ValueCube
from bamkit.utils.config import RollupMode, StyleConfig
from bamkit.utils.types import Breakdown, CategoryPath, DefinedNameText, NameKey

from .names import mangle_name

logger = logging.getLogger(__name__)

SHEET_NAME_LIMIT = 31
_SHEET_NAME_FORBIDDEN = str.maketrans({c: "_" for c in "[]:*?/\\"})

HEADER_ROWS = 3


@dataclass(frozen=True)
class LiteralCell:
    value: float | str


@dataclass(frozen=True)
class NamedFormula:
    """Formula text over defined names, without the leading '='."""

    expression: str
    names: tuple[DefinedNameText, ...] = ()


@dataclass(frozen=True)
class BlankCell:
    pass


CellContent: TypeAlias = LiteralCell | NamedFormula | BlankCell


@dataclass(frozen=True)
class Cell:
    content: CellContent
    style: str
    locked: bool = True


@dataclass(frozen=True)
class SheetRow:
    cells: tuple[Cell, ...]
    outline_level: int = 0


@dataclass(frozen=True)
class Sheet:
    name: str
    rows: tuple[SheetRow, ...]
    protected: bool = True


@dataclass(frozen=True)
class CellStyle:
    fill: str | None = None
    number_format: str | None = None
    bold: bool = False


@dataclass(frozen=True)
class DefinedName:
    """A row region: period columns first_column..last_column of one sheet row.

    Rows and columns are 0-based; column 0 holds labels.
    """

    name: DefinedNameText
    sheet: str
    row: int
    first_column: int
    last_column: int
    variable: str
    category_path: CategoryPath


@dataclass(frozen=True)
class WorkbookModel:
    sheets: tuple[Sheet, ...]
    defined_names: tuple[DefinedName, ...] = ()
    styles: dict[str, CellStyle] = field(default_factory=dict)
    period_count: int = 0
    label_column_width: float = 36

    def sheet(self, name: str) -> Sheet:
        for sheet in self.sheets:
            if sheet.name == name:
                return sheet
        raise KeyError(name)

    def defined_name(self, name: str) -> DefinedName | None:
        wanted = name.casefold()
        for defined in self.defined_names:
            if defined.name.casefold() == wanted:
                return defined
        return None

    def formulas(self) -> list[NamedFormula]:
        return [
            cell.content
            for sheet in self.sheets
            for row in sheet.rows
            for cell in row.cells
            if isinstance(cell.content, NamedFormula)
        ]


def build_styles(style: StyleConfig) -> dict[str, CellStyle]:
    """Resolve the named cell styles used by the builder."""
    return {
        "header": CellStyle(bold=style.header_bold),
        "category": CellStyle(bold=style.header_bold),
        "label": CellStyle(),
        "input": CellStyle(fill=style.input_fill, number_format=style.number_format),
        "calculated": CellStyle(number_format=style.number_format),
        "ratio": CellStyle(number_format=style.ratio_number_format),
    }


def sheet_names(wanted: list[str]) -> list[str]:
    """Make sheet names valid and unique: 31 characters, no []:*?/\\ characters."""
    result: list[str] = []
    taken: set[str] = set()
    for raw in wanted:
        base = raw.translate(_SHEET_NAME_FORBIDDEN).strip().strip("'") or "Sheet"
        base = base[:SHEET_NAME_LIMIT]
        name, k = base, 1
        while name.casefold() in taken:
            k += 1
            suffix = f" ({k})"
            name = base[: SHEET_NAME_LIMIT - len(suffix)] + suffix
        taken.add(name.casefold())
        result.append(name)
    return result


def is_ratio(info: VariableInfo) -> bool:
    """Calculated variable whose formula is a division at the top level."""
    if info.definition is None:
        return False
    body = strip_parens(info.definition.body)
    return isinstance(body, BinaryOp) and body.op == "/"


@dataclass
class _SheetPlan:
    name: str
    # one group per breakdown: layout and the variables shown on it
    groups: list[tuple[BreakdownLayout, list[VariableInfo]]] = field(
        default_factory=list
    )


class _Builder:
    def __init__(
        self,
        grid: InstanceGrid,
        model: SemanticModel,
        style: StyleConfig,
        rollup: RollupMode,
        seed: ValueCube | None,
    ):
        self.grid = grid
        self.model = model
        self.style = style
        self.rollup = rollup
        self.seed = seed
        self.names: dict[tuple[NameKey, CategoryPath], DefinedNameText] = {}
        self.defined: list[DefinedName] = []

    # -- planning -------------------------------------------------------

    def plan(self) -> list[_SheetPlan]:
        names = sheet_names(
            [self.style.assumptions_sheet_name]
            + [report.name for report in self.grid.reports]
        )
        assumptions = _SheetPlan(names[0])
        for breakdown in self.model.breakdowns:
            inputs = [v for v in self.model.inputs if breakdown in v.breakdowns]
            if inputs:
                assumptions.groups.append((self.grid.layouts[breakdown], inputs))

        reports = [_SheetPlan(name) for name in names[1:]]
        placed: dict[Breakdown, dict[NameKey, int]] = {}
        for index, report in enumerate(self.grid.reports):
            for key in report.variables:
                info = self.model.variables[key]
                if info.is_calculated:
                    placed.setdefault(report.breakdown, {}).setdefault(key, index)
        # operands pulled onto a breakdown by a dependent formula
        for info in self.model.calculated:
            for breakdown in info.breakdowns:
                if info.key in placed.get(breakdown, {}):
                    continue
                index = next(
                    i
                    for i, r in enumerate(self.grid.reports)
                    if r.breakdown == breakdown
                )
                placed.setdefault(breakdown, {})[info.key] = index

        for breakdown, assignments in placed.items():
            for index, plan in enumerate(reports):
                shown = [
                    self.model.variables[k] for k, i in assignments.items() if i == index
                ]
                if shown:
                    plan.groups.append((self.grid.layouts[breakdown], shown))
        return [assumptions, *reports]

    def assign_names(self, plans: list[_SheetPlan]) -> None:
        periods = self.grid.period_count
        for plan in plans:
            row_index = HEADER_ROWS
            for layout, variables in plan.groups:
                for category in layout.rows:
                    if category.label:
                        row_index += 1
                    if not category.is_instance:
                        continue
                    for info in variables:
                        name = mangle_name(
                            info.name,
                            category.path,
                            existing=[d.name for d in self.defined],
                        )
                        self.names[(info.key, category.path)] = name
                        self.defined.append(
                            DefinedName(
                                name=name,
                                sheet=plan.name,
                                row=row_index,
                                first_column=1,
                                last_column=periods,
                                variable=info.name,
                                category_path=category.path,
                            )
                        )
                        row_index += 1

    # -- cells ----------------------------------------------------------

    def name_of(self, key: NameKey, path: CategoryPath) -> DefinedNameText:
        return self.names[(key, path)]

    def translate(self, expr: Expr, path: CategoryPath) -> NamedFormula:
        used: dict[DefinedNameText, None] = {}

        def name_of(ref: VariableRef) -> str:
            name = self.name_of(ref.key, path)
            used.setdefault(name, None)
            return name

        text = format_expression(expr, name_of)
        return NamedFormula(text, tuple(used))

    def sum_of(self, info: VariableInfo, row: CategoryRow) -> NamedFormula:
        names = [self.name_of(info.key, member) for member in row.members]
        return NamedFormula(" + ".join(names), tuple(dict.fromkeys(names)))

    def header_rows(self) -> list[SheetRow]:
        periods = self.grid.period_count
        locked = self.style.locked_calculated
        blank = Cell(BlankCell(), "header", locked)
        years = [blank] + [
            Cell(LiteralCell("Years"), "header", locked) if c == 0 else blank
            for c in range(periods)
        ]
        labels = [blank] + [
            Cell(LiteralCell(label), "header", locked)
            for label in self.grid.period_labels
        ]
        indices = [blank] + [
            Cell(LiteralCell(float(i)), "header", locked) for i in range(periods)
        ]
        return [SheetRow(tuple(years)), SheetRow(tuple(labels)), SheetRow(tuple(indices))]

    def variable_row(self, info: VariableInfo, category: CategoryRow) -> SheetRow:
        cells = [Cell(LiteralCell(info.name), "label", self.style.locked_calculated)]
        for period in range(self.grid.period_count):
            cells.append(self.value_cell(info, category, period))
        return SheetRow(tuple(cells), category.variable_level)

    def value_cell(self, info: VariableInfo, category: CategoryRow, period: int) -> Cell:
        locked = self.style.locked_calculated
        if info.is_input:
            if category.is_aggregate:
                return Cell(self.sum_of(info, category), "calculated", locked)
            seeded = self.seed.get(info.name, category.path, period) if self.seed else None
            if seeded is None or seeded is UNDEFINED:
                return Cell(BlankCell(), "input", locked=False)
            return Cell(LiteralCell(seeded), "input", locked=False)  # type: ignore[arg-type]

        style = "ratio" if is_ratio(info) else "calculated"
        assert info.definition is not None
        if category.is_aggregate and self.rollup is RollupMode.SUM:
            return Cell(self.sum_of(info, category), style, locked)
        return Cell(self.translate(info.definition.body, category.path), style, locked)

    def sheet(self, plan: _SheetPlan) -> Sheet:
        rows = self.header_rows()
        locked = self.style.locked_calculated
        blank_tail = tuple(
            Cell(BlankCell(), "category", locked) for _ in range(self.grid.period_count)
        )
        for layout, variables in plan.groups:
            for category in layout.rows:
                if category.label:
                    rows.append(
                        SheetRow(
                            (Cell(LiteralCell(category.label), "category", locked), *blank_tail),
                            category.label_level,
                        )
                    )
                if category.is_instance:
                    rows.extend(self.variable_row(info, category) for info in variables)
        return Sheet(plan.name, tuple(rows), protected=self.style.locked_calculated)

    def build(self) -> WorkbookModel:
        plans = self.plan()
        self.assign_names(plans)
        sheets = tuple(self.sheet(plan) for plan in plans)
        logger.debug(
            "Built %d sheets with %d defined names", len(sheets), len(self.defined)
        )
        return WorkbookModel(
            sheets=sheets,
            defined_names=tuple(sorted(self.defined, key=lambda d: d.name)),
            styles=build_styles(self.style),
            period_count=self.grid.period_count,
            label_column_width=self.style.label_column_width,
        )


def build_workbook(
    grid: InstanceGrid,
    model: SemanticModel,
    style: StyleConfig | None = None,
    *,
    rollup: RollupMode = RollupMode.RECOMPUTE,
    seed: ValueCube | None = None,
) -> WorkbookModel:
    """Lay out the grid as sheets of named-reference formulas.

    The first sheet holds every input variable; each report gets a sheet with
    the calculated variables it introduces. With ``seed``, input cells hold the
    seeded values as literals.

    Raises:
        NameCapacityExceededError: If a unique defined name cannot be produced
    """
    return _Builder(grid, model, style or StyleConfig(), rollup, seed).build()
