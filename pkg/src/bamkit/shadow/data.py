"""CSV documents of instance values.

Every document has the header ``variable,category,period,value``. The category
is a semicolon-joined path of node names (empty without a breakdown); the period
is a period label such as "2005" or a 0-based index.
"""

import csv
import io
import logging
import re

from bamkit.language.ast import name_key
from bamkit.language.expressions import format_number, parse_number
from bamkit.model.grid import InstanceGrid, expand
from bamkit.model.semantic import SemanticModel
from bamkit.ports.exceptions import (
    DataSchemaError,
    DuplicateEntryError,
    MalformedNumberError,
    PeriodOutOfRangeError,
    UnknownCategoryPathError,
    UnknownVariableError,
    VariableNotInputError,
)
from bamkit.utils.types import CategoryPath, PeriodIndex

from .cube import UNDEFINED, InstanceKey, Value, ValueCube

logger = logging.getLogger(__name__)

HEADER = ["variable", "category", "period", "value"]

_SIGN = re.compile(r"^([+-]?)\s*(.*)$")


def parse_value(text: str, line: int | None = None) -> float:
    """Parse a signed decimal number; thousands separators are allowed.

    Raises:
        MalformedNumberError: If the text is not a decimal number
    """
    match = _SIGN.match(text.strip())
    assert match is not None
    sign, digits = match.groups()
    value = parse_number(digits)
    if value is None:
        raise MalformedNumberError(f"'{text}' is not a decimal number", line=line)
    return -value if sign == "-" else value


def parse_category(text: str) -> CategoryPath:
    if not text.strip():
        return ()
    return tuple(" ".join(part.split()) for part in text.split(";"))


def resolve_period(text: str, grid: InstanceGrid, line: int | None = None) -> PeriodIndex:
    """Resolve a period label first, then a 0-based index.

    Raises:
        PeriodOutOfRangeError: If neither interpretation names a period
    """
    wanted = name_key(text)
    for index, label in enumerate(grid.period_labels):
        if name_key(label) == wanted:
            return index
    stripped = text.strip()
    if stripped.isdigit() and int(stripped) < grid.period_count:
        return int(stripped)
    raise PeriodOutOfRangeError(
        f"Period '{text}' is neither a period label nor an index below "
        f"{grid.period_count}",
        line=line,
    )


def resolve_path(
    key: str, path: CategoryPath, grid: InstanceGrid, *, leaves_only: bool
) -> CategoryPath | None:
    """Row path of a variable matching ``path`` case- and space-insensitively."""
    wanted = tuple(name_key(p) for p in path)
    for _, row in grid.rows_for(key):
        if leaves_only and row.is_aggregate:
            continue
        if tuple(name_key(p) for p in row.path) == wanted:
            return row.path
    return None


def _read(
    text: str,
    model: SemanticModel,
    grid: InstanceGrid,
    *,
    inputs_only: bool,
) -> ValueCube:
    if text.startswith("\ufeff"):
        text = text[1:]
    reader = csv.reader(io.StringIO(text))
    header = next(reader, None)
    if header is None or [h.strip().lower() for h in header] != HEADER:
        raise DataSchemaError(f"Header must be exactly '{','.join(HEADER)}'", line=1)

    cube = ValueCube()
    for fields in reader:
        line = reader.line_num
        if not fields or all(not f.strip() for f in fields):
            continue
        if len(fields) != len(HEADER):
            raise DataSchemaError(
                f"Expected {len(HEADER)} fields, got {len(fields)}", line=line
            )
        name, category, period_text, value_text = fields

        if not model.has_variable(name):
            raise UnknownVariableError(name.strip(), line=line)
        info = model.variable(name)
        if inputs_only and not info.is_input:
            raise VariableNotInputError(
                f"'{info.name}' is calculated; data can only be given for inputs",
                line=line,
            )

        path = resolve_path(
            info.key, parse_category(category), grid, leaves_only=inputs_only
        )
        if path is None:
            raise UnknownCategoryPathError(
                f"'{category}' is not a {'leaf ' if inputs_only else ''}category "
                f"of '{info.name}'",
                line=line,
            )
        period = resolve_period(period_text, grid, line=line)

        value: Value
        if not value_text.strip() and not inputs_only:
            value = UNDEFINED
        else:
            value = parse_value(value_text, line=line)

        key = InstanceKey(info.name, path, period)
        if key in cube:
            raise DuplicateEntryError(
                f"Second value for '{info.name}' at '{category}' in period "
                f"'{period_text}'",
                line=line,
            )
        cube[key] = value

    logger.debug("Read %d values", len(cube))
    return cube


def load_inputs(
    text: str, model: SemanticModel, grid: InstanceGrid | None = None
) -> ValueCube:
    """Read input data for leaf instances of input variables.

    Raises:
        DataSchemaError: On a wrong header or field count
        UnknownVariableError: For a name that is not a model variable
        VariableNotInputError: For data given for a calculated variable
        UnknownCategoryPathError: For a path that is not a leaf of the variable
        PeriodOutOfRangeError: For an unknown period
        MalformedNumberError: For a value that is not a number
        DuplicateEntryError: For a repeated instance
    """
    return _read(text, model, grid or expand(model), inputs_only=True)


def read_observations(
    text: str, model: SemanticModel, grid: InstanceGrid | None = None
) -> ValueCube:
    """Read externally observed values of any variable at any row.

    An empty value stands for UNDEFINED.
    """
    return _read(text, model, grid or expand(model), inputs_only=False)


def dump_cube(
    model: SemanticModel, cube: ValueCube, grid: InstanceGrid | None = None
) -> str:
    """Write a cube in variable table order, then row order, then period order."""
    grid = grid or expand(model)
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(HEADER)
    for info in model.variables.values():
        for _, row in grid.rows_for(info.key):
            for period, label in enumerate(grid.period_labels):
                value = cube.get(info.name, row.path, period)
                if value is None:
                    continue
                text = "" if value is UNDEFINED else format_number(value)
                writer.writerow([info.name, ";".join(row.path), label, text])
    return buffer.getvalue()
