"""Line-oriented parser for Business Algebra Model documents.

The language is a fixed set of tolerant sentence patterns:

    Each period is one year.
    The number of periods is 3.
    The first period starts on 2005.

    Categories:
    Markets =
    - 1 North America
     - 1.1 Canada

    Report: Profit And Loss
    Breakdown by Markets
    Gross Profit = Turnover – Cost of Sales

Keywords are case-insensitive, trailing sentence periods are optional and
lines whose first non-blank character is '#' are comments.
"""

import logging
import re
from dataclasses import dataclass, field

from bamkit.ports.exceptions import (
    DuplicateHierarchyTitleError,
    MalformedFormulaError,
    MalformedOutlineError,
    MalformedReportError,
    MalformedTimeFrameError,
    MissingTimeFrameError,
    UnrecognizedLineError,
)

from .ast import (
    CategoryHierarchy,
    CategoryNode,
    FormulaDef,
    ModelDocument,
    ReportDef,
    TimeFrame,
    TimeUnit,
    name_key,
)
from .expressions import normalize_operators, parse_expression, parse_number

logger = logging.getLogger(__name__)

_UNIT_SENTENCE = re.compile(
    r"^(?:the\s+)?(?:each\s+)?period\s+(?:length\s+)?is\s+(.+)$",
    re.IGNORECASE,
)
_COUNT_SENTENCE = re.compile(
    r"^(?:the\s+)?number\s+of\s+periods\s+is\s+(.+)$", re.IGNORECASE
)
_START_SENTENCE = re.compile(
    r"^(?:the\s+)?first\s+period\s+(?:starts|begins)\s+(?:in|on)\s+(.+)$",
    re.IGNORECASE,
)
_CATEGORIES = re.compile(r"^categor(?:y|ies)\s*:?$", re.IGNORECASE)
_REPORT = re.compile(r"^report\s*:(.*)$", re.IGNORECASE)
_BREAKDOWN = re.compile(r"(?:^|\s)breakdown\s+by\b\s*:?(.*)$", re.IGNORECASE)
_HIERARCHY_TITLE = re.compile(r"^([^=]+?)\s*=$")
_OUTLINE_ITEM = re.compile(r"^(?:[-*•]\s*)?(\d+(?:\.\d+)*)\.?\s+(.+)$")

_UNITS: dict[str, TimeUnit] = {
    "year": "year",
    "years": "year",
    "quarter": "quarter",
    "quarters": "quarter",
    "month": "month",
    "months": "month",
}


def _clean(line: str) -> str:
    """Strip surrounding blanks and one trailing sentence period."""
    text = line.strip()
    if text.endswith("."):
        text = text[:-1].rstrip()
    return text


def _collapse(text: str) -> str:
    return " ".join(text.split())


@dataclass
class _OutlineBuilder:
    """Accumulates one hierarchy from numbered outline lines."""

    title: str
    line: int
    # (depth, name, children) frames of the currently open path
    stack: list[tuple[int, str, list]] = field(default_factory=list)
    roots: list = field(default_factory=list)
    seen: set[str] = field(default_factory=set)

    def add(self, depth: int, name: str, line: int) -> None:
        if not self.stack and depth != 1:
            raise MalformedOutlineError(
                f"First category of '{self.title}' must be at the top outline level",
                line=line,
            )
        if self.stack and depth > self.stack[-1][0] + 1:
            raise MalformedOutlineError(
                f"Outline level {depth} of '{name}' skips a level", line=line
            )
        key = name_key(name)
        if key in self.seen:
            raise MalformedOutlineError(
                f"Duplicate category '{name}' in '{self.title}'", line=line
            )
        self.seen.add(key)

        while self.stack and self.stack[-1][0] >= depth:
            self.stack.pop()
        children: list = []
        siblings = self.stack[-1][2] if self.stack else self.roots
        siblings.append((name, depth, children))
        self.stack.append((depth, name, children))

    def build(self) -> CategoryHierarchy:
        if not self.roots:
            raise MalformedOutlineError(
                f"Hierarchy '{self.title}' has no categories", line=self.line
            )

        def node(entry: tuple[str, int, list]) -> CategoryNode:
            name, depth, children = entry
            return CategoryNode(name, depth, tuple(node(c) for c in children))

        return CategoryHierarchy(self.title, tuple(node(r) for r in self.roots))


@dataclass
class _ReportBuilder:
    name: str
    line: int
    breakdown: tuple[str, ...] = ()
    breakdown_line: int = 0
    formulas: list[FormulaDef] = field(default_factory=list)

    def build(self) -> ReportDef:
        return ReportDef(
            name=self.name,
            breakdown=self.breakdown,
            formulas=tuple(self.formulas),
            source_line=self.line,
            breakdown_line=self.breakdown_line,
        )


class _DocumentParser:
    def __init__(self) -> None:
        self.unit: TimeUnit | None = None
        self.count: int | None = None
        self.start: int | None = None
        self.in_categories = False
        self.outline: _OutlineBuilder | None = None
        self.hierarchies: list[CategoryHierarchy] = []
        self.reports: list[_ReportBuilder] = []

    def parse(self, text: str) -> ModelDocument:
        lines = text.splitlines()
        for number, raw in enumerate(lines, start=1):
            if not raw.strip() or raw.lstrip().startswith("#"):
                continue
            self.line(_clean(raw), number)
        self.close_outline()

        last_line = max(len(lines), 1)
        if self.unit is None or self.count is None or self.start is None:
            missing = [
                label
                for label, value in (
                    ("period length", self.unit),
                    ("number of periods", self.count),
                    ("first period", self.start),
                )
                if value is None
            ]
            raise MissingTimeFrameError(
                f"Incomplete time frame, missing: {', '.join(missing)}",
                line=last_line,
            )

        document = ModelDocument(
            time_frame=TimeFrame(self.unit, self.count, self.start),
            hierarchies=tuple(self.hierarchies),
            reports=tuple(r.build() for r in self.reports),
        )
        logger.debug(
            "Parsed %d hierarchies and %d reports",
            len(document.hierarchies),
            len(document.reports),
        )
        return document

    def line(self, text: str, number: int) -> None:
        if self.reports:
            self.report_line(text, number)
            return
        if self.time_frame_line(text, number):
            return
        if match := _REPORT.match(text):
            self.close_outline()
            self.in_categories = False
            self.start_report(match.group(1), number)
            return
        if _CATEGORIES.match(text):
            self.close_outline()
            self.in_categories = True
            return
        if self.in_categories:
            self.category_line(text, number)
            return
        if "=" in text:
            raise MalformedFormulaError(
                "Formula appears before any 'Report:' line", line=number
            )
        raise UnrecognizedLineError(f"Unrecognized line '{text}'", line=number)

    def time_frame_line(self, text: str, number: int) -> bool:
        if match := _UNIT_SENTENCE.match(text):
            words = match.group(1).lower().split()
            if len(words) == 2 and words[0] in ("one", "a", "an", "1"):
                words = words[1:]
            word = words[0] if len(words) == 1 else ""
            if word not in _UNITS:
                raise MalformedTimeFrameError(
                    f"Unsupported period length '{match.group(1)}' "
                    "(expected one year, quarter or month)",
                    line=number,
                )
            if self.unit is not None:
                raise MalformedTimeFrameError("Period length given twice", line=number)
            self.unit = _UNITS[word]
            return True
        if match := _COUNT_SENTENCE.match(text):
            if self.count is not None:
                raise MalformedTimeFrameError(
                    "Number of periods given twice", line=number
                )
            value = match.group(1)
            if not value.isdigit() or int(value) < 1:
                raise MalformedTimeFrameError(
                    f"Number of periods must be a positive integer, got '{value}'",
                    line=number,
                )
            self.count = int(value)
            return True
        if match := _START_SENTENCE.match(text):
            if self.start is not None:
                raise MalformedTimeFrameError("First period given twice", line=number)
            value = match.group(1)
            if not re.fullmatch(r"\d{1,4}", value):
                raise MalformedTimeFrameError(
                    f"First period must be a calendar year, got '{value}'",
                    line=number,
                )
            self.start = int(value)
            return True
        return False

    def category_line(self, text: str, number: int) -> None:
        if match := _HIERARCHY_TITLE.match(text):
            self.close_outline()
            title = _collapse(match.group(1))
            if any(name_key(h.title) == name_key(title) for h in self.hierarchies):
                raise DuplicateHierarchyTitleError(
                    f"Hierarchy '{title}' is defined twice", line=number
                )
            self.outline = _OutlineBuilder(title, number)
            return
        if match := _OUTLINE_ITEM.match(text):
            if self.outline is None:
                raise MalformedOutlineError(
                    "Category listed before any hierarchy title", line=number
                )
            depth = len(match.group(1).split("."))
            self.outline.add(depth, _collapse(match.group(2)), number)
            return
        raise MalformedOutlineError(
            f"Expected a hierarchy title or numbered category, got '{text}'",
            line=number,
        )

    def close_outline(self) -> None:
        if self.outline is not None:
            self.hierarchies.append(self.outline.build())
            self.outline = None

    def start_report(self, name: str, number: int) -> None:
        name = _collapse(name)
        if not name:
            raise MalformedReportError("Report name is empty", line=number)
        self.reports.append(_ReportBuilder(name, number))

    def report_line(self, text: str, number: int) -> None:
        if match := _REPORT.match(text):
            self.start_report(match.group(1), number)
            return
        report = self.reports[-1]
        # "breakdown by" may appear anywhere in a line that is not a formula
        if "=" not in text and (match := _BREAKDOWN.search(text)):
            if report.breakdown_line:
                raise MalformedReportError(
                    f"Report '{report.name}' has more than one breakdown line",
                    line=number,
                )
            titles = [_collapse(t) for t in match.group(1).split(",")]
            if any(not t for t in titles):
                raise MalformedReportError("Empty hierarchy title in breakdown", line=number)
            keys = [name_key(t) for t in titles]
            if len(set(keys)) != len(keys):
                raise MalformedReportError(
                    "A hierarchy is named twice in one breakdown", line=number
                )
            report.breakdown = tuple(titles)
            report.breakdown_line = number
            return
        report.formulas.append(parse_formula(text, number))


def parse_formula(text: str, line: int = 0) -> FormulaDef:
    """Parse one "Target = expression" line.

    Raises:
        MalformedFormulaError: If there is no '=', a side is empty or the target
            is not a plain variable name
    """
    if "=" not in text:
        raise MalformedFormulaError(f"Expected a formula, got '{text}'", line=line)
    left, right = text.split("=", 1)
    target = _collapse(left)
    if not target:
        raise MalformedFormulaError("Formula has no target variable", line=line)
    if parse_number(target) is not None:
        raise MalformedFormulaError(
            f"Formula target '{target}' is a number", line=line
        )
    if re.search(r"[-+*/()]", normalize_operators(target)):
        raise MalformedFormulaError(
            f"Formula target '{target}' must be a single variable name", line=line
        )
    if not right.strip():
        raise MalformedFormulaError(
            f"Formula for '{target}' has an empty right-hand side", line=line
        )
    return FormulaDef(target, parse_expression(right, line=line), line)


def parse_model(text: str) -> ModelDocument:
    """Parse a Business Algebra Model document.

    Accepts LF and CRLF line endings.

    Raises:
        ParseError: A subclass naming the offending line
    """
    if text.startswith("\ufeff"):
        text = text[1:]
    return _DocumentParser().parse(text)
