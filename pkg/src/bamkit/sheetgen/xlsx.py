"""Office Open XML rendering of a WorkbookModel with openpyxl."""

import io
import logging
from datetime import datetime

from openpyxl import Workbook
from openpyxl.styles import Font, PatternFill, Protection
from openpyxl.utils import absolute_coordinate, get_column_letter, quote_sheetname
from openpyxl.workbook.defined_name import DefinedName as XlsxDefinedName
from openpyxl.worksheet.worksheet import Worksheet

from bamkit.ports.exceptions import WorkbookInvariantError

from .validation import validate_workbook
from .workbook import BlankCell, CellStyle, LiteralCell, NamedFormula, Sheet, WorkbookModel

logger = logging.getLogger(__name__)

# fixed document properties keep repeated renders comparable
_EPOCH = datetime(2000, 1, 1)
# sheet size limits of the file format
MAX_COLUMNS = 16384
MAX_ROWS = 1048576


def _check_limits(wb: WorkbookModel) -> None:
    columns = wb.period_count + 1
    if columns > MAX_COLUMNS:
        raise WorkbookInvariantError(
            f"{wb.period_count} periods need {columns} columns; "
            f"xlsx sheets hold at most {MAX_COLUMNS}"
        )
    for sheet in wb.sheets:
        if len(sheet.rows) > MAX_ROWS:
            raise WorkbookInvariantError(
                f"Sheet '{sheet.name}' needs {len(sheet.rows)} rows; "
                f"xlsx sheets hold at most {MAX_ROWS}"
            )


def _region(sheet: str, row: int, first_column: int, last_column: int) -> str:
    first = f"{get_column_letter(first_column + 1)}{row + 1}"
    last = f"{get_column_letter(last_column + 1)}{row + 1}"
    return f"{quote_sheetname(sheet)}!{absolute_coordinate(f'{first}:{last}')}"


def _write_sheet(ws: Worksheet, sheet: Sheet, wb: WorkbookModel) -> None:
    fills: dict[str, PatternFill] = {}
    for r, row in enumerate(sheet.rows, start=1):
        if row.outline_level:
            ws.row_dimensions[r].outlineLevel = row.outline_level
        for c, cell in enumerate(row.cells, start=1):
            target = ws.cell(row=r, column=c)
            content = cell.content
            if isinstance(content, NamedFormula):
                target.value = f"={content.expression}"
            elif isinstance(content, LiteralCell):
                target.value = content.value
                if isinstance(content.value, str) and content.value.startswith("="):
                    target.data_type = "s"
            else:
                assert isinstance(content, BlankCell)

            style: CellStyle = wb.styles.get(cell.style, CellStyle())
            if style.fill:
                if style.fill not in fills:
                    fills[style.fill] = PatternFill(
                        start_color=style.fill, end_color=style.fill, fill_type="solid"
                    )
                target.fill = fills[style.fill]
            if style.number_format:
                target.number_format = style.number_format
            if style.bold:
                target.font = Font(bold=True)
            target.protection = Protection(locked=cell.locked)

    ws.column_dimensions["A"].width = wb.label_column_width
    ws.protection.sheet = sheet.protected


def render_xlsx(wb: WorkbookModel) -> bytes:
    """Render the workbook to .xlsx bytes.

    Raises:
        WorkbookInvariantError: If the workbook breaks a named-reference invariant
            or exceeds the sheet size limits of the format
    """
    validate_workbook(wb)
    _check_limits(wb)
    book = Workbook()
    book.properties.creator = "bamkit"
    book.properties.created = _EPOCH
    book.properties.modified = _EPOCH

    for index, sheet in enumerate(wb.sheets):
        ws = book.active if index == 0 else book.create_sheet()
        assert ws is not None
        ws.title = sheet.name
        _write_sheet(ws, sheet, wb)

    for defined in wb.defined_names:
        ref = _region(
            defined.sheet, defined.row, defined.first_column, defined.last_column
        )
        book.defined_names.add(XlsxDefinedName(defined.name, attr_text=ref))

    buffer = io.BytesIO()
    book.save(buffer)
    logger.debug("Rendered %d sheets to xlsx", len(wb.sheets))
    return buffer.getvalue()
