"""Spreadsheet generation: workbook layout, defined names and renderers."""

from .interpreter import evaluate_workbook
from .names import find_cell_references, is_cell_address, mangle_name
from .portable import render_portable
from .validation import validate_workbook
from .workbook import (
    BlankCell,
    Cell,
    CellStyle,
    DefinedName,
    LiteralCell,
    NamedFormula,
    Sheet,
    SheetRow,
    WorkbookModel,
    build_workbook,
)
from .xlsx import render_xlsx

__all__ = [
    "BlankCell",
    "Cell",
    "CellStyle",
    "DefinedName",
    "LiteralCell",
    "NamedFormula",
    "Sheet",
    "SheetRow",
    "WorkbookModel",
    "build_workbook",
    "evaluate_workbook",
    "find_cell_references",
    "is_cell_address",
    "mangle_name",
    "render_portable",
    "render_xlsx",
    "validate_workbook",
]
