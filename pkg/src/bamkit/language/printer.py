"""Canonical pretty-printer for ModelDocument.

The output is accepted by parse_model and parses back to an equal document.
Outline items are renumbered by position, so the original numbering values are
not preserved (only depth is significant to the parser).
"""

from .ast import CategoryNode, FormulaDef, ModelDocument, ReportDef
from .expressions import format_expression

_UNIT_WORDS = {"year": "one year", "quarter": "one quarter", "month": "one month"}


def outline_lines(nodes: tuple[CategoryNode, ...], prefix: str = "") -> list[str]:
    lines: list[str] = []
    for position, node in enumerate(nodes, start=1):
        number = f"{prefix}.{position}" if prefix else str(position)
        indent = "  " * (node.depth - 1)
        lines.append(f"{indent}- {number} {node.name}")
        lines.extend(outline_lines(node.children, number))
    return lines


def print_formula(formula: FormulaDef) -> str:
    """Render one formula line, e.g. "Gross Profit = Turnover - Cost of Sales"."""
    return f"{formula.target} = {format_expression(formula.body)}"


def _report_lines(report: ReportDef) -> list[str]:
    lines = [f"Report: {report.name}"]
    if report.breakdown:
        lines.append(f"Breakdown by {', '.join(report.breakdown)}")
    lines.extend(print_formula(f) for f in report.formulas)
    return lines


def print_model(doc: ModelDocument) -> str:
    """Render a document in canonical form, sections separated by blank lines."""
    frame = doc.time_frame
    sections: list[list[str]] = [
        [
            f"Each period is {_UNIT_WORDS[frame.unit]}.",
            f"The number of periods is {frame.period_count}.",
            f"The first period starts in {frame.start_year}.",
        ]
    ]

    if doc.hierarchies:
        categories = ["Categories:"]
        for hierarchy in doc.hierarchies:
            categories.append(f"{hierarchy.title} =")
            categories.extend(outline_lines(hierarchy.roots))
        sections.append(categories)

    sections.extend(_report_lines(report) for report in doc.reports)
    return "\n\n".join("\n".join(section) for section in sections) + "\n"
