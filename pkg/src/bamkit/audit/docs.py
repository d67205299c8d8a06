"""Markdown documentation of a model.

The document ends with the model itself in canonical form inside a fenced
``bam`` block, so a reader can hand it straight back to the parser.
"""

import re

from bamkit.language.printer import outline_lines, print_formula, print_model
from bamkit.model.semantic import SemanticModel

from .census import formula_census

_MODEL_BLOCK = re.compile(r"^```bam\n(.*?)^```$", re.MULTILINE | re.DOTALL)


def _table(rows: list[tuple[str, ...]]) -> list[str]:
    header, *body = rows
    lines = ["| " + " | ".join(header) + " |", "|" + "---|" * len(header)]
    lines.extend("| " + " | ".join(row) + " |" for row in body)
    return lines


def export_docs(model: SemanticModel) -> str:
    """Render the model as a markdown document.

    Sections: time frame, category outlines, one section per report with its
    breakdown, formulas and variable classification, a formula census, and
    the model source.
    """
    doc = model.document
    frame = doc.time_frame
    labels = frame.period_labels()
    lines = [
        "# Model documentation",
        "",
        f"{len(doc.hierarchies)} hierarchies, {len(doc.reports)} reports, "
        f"{len(model.calculated)} formulas, {len(model.inputs)} inputs.",
        "",
        "## Time frame",
        "",
        f"- Period: one {frame.unit}",
        f"- Number of periods: {frame.period_count}",
        f"- Periods: {labels[0]} to {labels[-1]}" if labels else "- Periods: none",
    ]

    if doc.hierarchies:
        lines += ["", "## Categories"]
        for hierarchy in doc.hierarchies:
            lines += ["", f"### {hierarchy.title}", ""]
            lines += outline_lines(hierarchy.roots)

    for report, breakdown in zip(doc.reports, model.report_breakdowns):
        lines += ["", f"## Report: {report.name}", ""]
        lines.append(
            f"Breakdown by {', '.join(breakdown)}" if breakdown else "No breakdown"
        )
        lines += ["", "Formulas:", ""]
        lines += [f"- `{print_formula(f)}`" for f in report.formulas]

        mentioned: dict[str, None] = {}
        for formula in report.formulas:
            mentioned.setdefault(formula.key, None)
            for dep in model.graph.dependencies(formula.key):
                mentioned.setdefault(dep, None)
        rows = [("Variable", "Kind")]
        rows += [
            (model.variables[k].name, model.variables[k].kind) for k in mentioned
        ]
        lines += [""] + _table(rows)

    census = formula_census(model)
    if census.count:
        lines += ["", "## Formula census", "", f"{census.count} distinct formulas.", ""]
        rows = [("Formula", "Reports")]
        rows += [(f"`{e.formula}`", ", ".join(e.reports)) for e in census.entries]
        lines += _table(rows)

    lines += ["", "## Model source", "", "```bam", print_model(doc).rstrip("\n"), "```"]
    return "\n".join(lines) + "\n"


def extract_model_source(document: str) -> str | None:
    """Model text inside the first fenced ``bam`` block, or None."""
    match = _MODEL_BLOCK.search(document)
    return match.group(1) if match else None
