"""Named-reference invariants of a WorkbookModel."""

import re

from bamkit.ports.exceptions import WorkbookInvariantError

from .names import DEFINED_NAME, find_cell_references, is_cell_address
from .workbook import NamedFormula, WorkbookModel

_IDENTIFIER = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")


def formula_names(formula: NamedFormula) -> list[str]:
    """Identifiers appearing in a formula's text."""
    return _IDENTIFIER.findall(formula.expression)


def validate_workbook(wb: WorkbookModel) -> None:
    """Check that formulas use defined names only.

    Raises:
        WorkbookInvariantError: If a formula contains a cell reference or an
            undefined name, or a defined name is duplicated or malformed
    """
    seen: set[str] = set()
    for defined in wb.defined_names:
        if not DEFINED_NAME.match(defined.name) or is_cell_address(defined.name):
            raise WorkbookInvariantError(f"Invalid defined name '{defined.name}'")
        if defined.name.casefold() in seen:
            raise WorkbookInvariantError(f"Duplicate defined name '{defined.name}'")
        seen.add(defined.name.casefold())

    for formula in wb.formulas():
        references = find_cell_references(formula.expression)
        if references:
            raise WorkbookInvariantError(
                f"Formula '{formula.expression}' contains cell references: "
                f"{', '.join(references)}"
            )
        for name in [*formula.names, *formula_names(formula)]:
            if name.casefold() not in seen:
                raise WorkbookInvariantError(
                    f"Formula '{formula.expression}' uses undefined name '{name}'"
                )
