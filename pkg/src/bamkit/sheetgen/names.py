"""Defined-name mangling and A1 cell-reference detection."""

import re
from collections.abc import Collection

from bamkit.ports.exceptions import NameCapacityExceededError
from bamkit.utils.types import DefinedNameText

MAX_NAME_LENGTH = 255
MAX_COLUMN = 16384  # XFD
MAX_ROW = 1048576
_MAX_SUFFIX_ATTEMPTS = 10000

_NON_ALNUM = re.compile(r"[^0-9A-Za-z]+")
_A1 = re.compile(r"^\$?([A-Za-z]{1,3})\$?([0-9]+)$")
_R1C1 = re.compile(r"^[Rr]([0-9]*)[Cc]?([0-9]*)$|^[Cc]([0-9]*)$")
_A1_TOKEN = re.compile(r"(?<![A-Za-z0-9_.$])\$?([A-Za-z]{1,3})\$?([0-9]+)(?![A-Za-z0-9_(])")
DEFINED_NAME = re.compile(r"^[A-Za-z_][A-Za-z0-9_]*$")


def column_number(letters: str) -> int:
    number = 0
    for char in letters.upper():
        number = number * 26 + (ord(char) - ord("A") + 1)
    return number


def _valid_address(letters: str, digits: str) -> bool:
    return column_number(letters) <= MAX_COLUMN and 1 <= int(digits) <= MAX_ROW


def is_cell_address(text: str) -> bool:
    """True if text reads as an A1 or R1C1 cell address (e.g. "C38", "R2C3")."""
    if match := _A1.match(text):
        return _valid_address(*match.groups())
    return bool(_R1C1.match(text))


def find_cell_references(formula: str) -> list[str]:
    """All A1-style cell references in a formula text, in order of appearance."""
    return [
        match.group(0)
        for match in _A1_TOKEN.finditer(formula)
        if _valid_address(match.group(1), match.group(2))
    ]


def _segment(text: str) -> str:
    return _NON_ALNUM.sub("_", text).strip("_") or "_"


def mangle_name(
    variable: str,
    category_path: tuple[str, ...] | list[str] = (),
    existing: Collection[DefinedNameText] = (),
) -> DefinedNameText:
    """Derive a defined name for one variable row.

    Non-alphanumeric runs become one underscore, path segments are appended
    with a double underscore and a leading digit gets an underscore prefix.
    A result that reads as a cell address or collides (case-insensitively)
    with an existing name gets the smallest free "_v<k>" suffix.

    Raises:
        NameCapacityExceededError: If no free suffix is found
    """
    base = "__".join(_segment(part) for part in (variable, *category_path))
    if base[0].isdigit():
        base = f"_{base}"
    base = base[:MAX_NAME_LENGTH]

    taken = {name.casefold() for name in existing}

    def free(candidate: str) -> bool:
        return candidate.casefold() not in taken and not is_cell_address(candidate)

    if free(base):
        return base
    for k in range(1, _MAX_SUFFIX_ATTEMPTS + 1):
        suffix = f"_v{k}"
        candidate = base[: MAX_NAME_LENGTH - len(suffix)] + suffix
        if free(candidate):
            return candidate
    raise NameCapacityExceededError(f"No unique defined name available for '{base}'")
