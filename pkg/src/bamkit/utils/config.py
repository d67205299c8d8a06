"""Configuration for bamkit: presentation style and per-run settings.

Style documents are JSON objects; every key is optional and falls back to the
defaults below. Unknown keys are rejected so that typos do not silently revert
to a default.
"""

import json
import os
import re
from dataclasses import dataclass, fields
from enum import Enum
from typing import Any

from bamkit.ports.exceptions import StyleConfigError

STYLE_ENV_VAR = "BAM_STYLE"

_HEX_COLOR = re.compile(r"^[0-9A-Fa-f]{6}$")


class RollupMode(str, Enum):
    """How calculated variables are aggregated on roll-up rows."""

    SUM = "sum"
    RECOMPUTE = "recompute"


class Backend(str, Enum):
    """Output format of the generate command."""

    XLSX = "xlsx"
    PORTABLE = "portable"
    CSV_VALUES = "csv-values"


class EvalFormat(str, Enum):
    """Output format of the eval command."""

    CSV = "csv"


BACKEND_EXTENSIONS = {
    ".xlsx": Backend.XLSX,
    ".bamwb": Backend.PORTABLE,
    ".csv": Backend.CSV_VALUES,
}


@dataclass(frozen=True)
class StyleConfig:
    """Look-and-feel of generated workbooks, kept apart from the model text."""

    input_fill: str = "FFFF00"
    locked_calculated: bool = True
    period_order: str = "left_to_right"
    number_format: str = "#,##0"
    ratio_number_format: str = "0.00"
    assumptions_sheet_name: str = "Assumptions"
    label_column_width: float = 36
    header_bold: bool = True

    def __post_init__(self) -> None:
        if not _HEX_COLOR.match(self.input_fill):
            raise StyleConfigError(
                f"input_fill must be a 6-hex-digit RGB color, got '{self.input_fill}'"
            )
        if self.period_order != "left_to_right":
            raise StyleConfigError(
                f"Unsupported period_order '{self.period_order}' (only left_to_right)"
            )
        if not self.assumptions_sheet_name.strip():
            raise StyleConfigError("assumptions_sheet_name must not be empty")
        if self.label_column_width <= 0:
            raise StyleConfigError("label_column_width must be positive")


_STYLE_TYPES: dict[str, tuple[type, ...]] = {
    "input_fill": (str,),
    "locked_calculated": (bool,),
    "period_order": (str,),
    "number_format": (str,),
    "ratio_number_format": (str,),
    "assumptions_sheet_name": (str,),
    "label_column_width": (int, float),
    "header_bold": (bool,),
}


def parse_style_config(text: str) -> StyleConfig:
    """Parse a JSON style document.

    Raises:
        StyleConfigError: If the document is not a JSON object, has unknown keys
            or values of the wrong type
    """
    try:
        raw: Any = json.loads(text)
    except json.JSONDecodeError as e:
        raise StyleConfigError(f"Style configuration is not valid JSON: {e}") from e
    if not isinstance(raw, dict):
        raise StyleConfigError("Style configuration must be a JSON object")

    known = {f.name for f in fields(StyleConfig)}
    unknown = sorted(set(raw) - known)
    if unknown:
        raise StyleConfigError(f"Unknown style keys: {', '.join(unknown)}")

    for key, value in raw.items():
        expected = _STYLE_TYPES[key]
        # bool is an int subclass; a number key must not accept true/false
        if isinstance(value, bool) and bool not in expected:
            raise StyleConfigError(f"Style key '{key}' has the wrong type")
        if not isinstance(value, expected):
            raise StyleConfigError(f"Style key '{key}' has the wrong type")

    if isinstance(raw.get("input_fill"), str):
        raw["input_fill"] = raw["input_fill"].lstrip("#").upper()
    return StyleConfig(**raw)


def resolve_style_path(explicit: str | None) -> str | None:
    """Return the style path to use: the explicit one, else $BAM_STYLE, else None."""
    if explicit:
        return explicit
    return os.environ.get(STYLE_ENV_VAR) or None


def infer_backend(output_path: str) -> Backend:
    """Pick a backend from the output file extension, defaulting to xlsx."""
    lowered = output_path.lower()
    for extension, backend in BACKEND_EXTENSIONS.items():
        if lowered.endswith(extension):
            return backend
    return Backend.XLSX


@dataclass(frozen=True)
class RunConfig:
    """Settings of one CLI invocation."""

    subcommand: str
    model_path: str
    data_path: str | None = None
    style_path: str | None = None
    output_path: str | None = None
    observed_path: str | None = None
    backend: Backend = Backend.XLSX
    eval_format: EvalFormat = EvalFormat.CSV
    rollup: RollupMode = RollupMode.RECOMPUTE
    strict: bool = False
    tolerance: float = 0.0

    def input_paths(self) -> list[str]:
        """Paths that must exist before the pipeline starts."""
        return [
            p
            for p in (self.model_path, self.data_path, self.style_path, self.observed_path)
            if p
        ]
