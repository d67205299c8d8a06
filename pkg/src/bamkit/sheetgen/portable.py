"""Portable ``.bamwb`` serialization of a WorkbookModel.

The document is JSON with a fixed key order, two-space indentation and defined
names sorted by name, so equal workbooks serialize to identical bytes. The
layout is described in docs/portable-format.md.
"""

import json
from typing import Any

from .validation import validate_workbook
from .workbook import BlankCell, Cell, LiteralCell, NamedFormula, WorkbookModel

FORMAT_NAME = "bamwb"
FORMAT_VERSION = 1


def _cell(cell: Cell) -> dict[str, Any]:
    content = cell.content
    data: dict[str, Any]
    if isinstance(content, NamedFormula):
        data = {"type": "formula", "formula": content.expression}
    elif isinstance(content, LiteralCell) and isinstance(content.value, str):
        data = {"type": "text", "value": content.value}
    elif isinstance(content, LiteralCell):
        data = {"type": "number", "value": content.value}
    else:
        assert isinstance(content, BlankCell)
        data = {"type": "blank"}
    data["style"] = cell.style
    data["locked"] = cell.locked
    return data


def to_document(wb: WorkbookModel) -> dict[str, Any]:
    return {
        "format": FORMAT_NAME,
        "version": FORMAT_VERSION,
        "period_count": wb.period_count,
        "label_column_width": wb.label_column_width,
        "styles": {
            name: {
                "fill": style.fill,
                "number_format": style.number_format,
                "bold": style.bold,
            }
            for name, style in sorted(wb.styles.items())
        },
        "sheets": [
            {
                "name": sheet.name,
                "protected": sheet.protected,
                "rows": [
                    {
                        "outline_level": row.outline_level,
                        "cells": [_cell(cell) for cell in row.cells],
                    }
                    for row in sheet.rows
                ],
            }
            for sheet in wb.sheets
        ],
        "defined_names": [
            {
                "name": d.name,
                "sheet": d.sheet,
                "row": d.row,
                "first_column": d.first_column,
                "last_column": d.last_column,
                "variable": d.variable,
                "category_path": list(d.category_path),
            }
            for d in sorted(wb.defined_names, key=lambda d: d.name)
        ],
    }


def render_portable(wb: WorkbookModel) -> str:
    """Serialize a workbook canonically.

    Raises:
        WorkbookInvariantError: If the workbook breaks a named-reference invariant
    """
    validate_workbook(wb)
    return json.dumps(to_document(wb), indent=2, ensure_ascii=False) + "\n"
