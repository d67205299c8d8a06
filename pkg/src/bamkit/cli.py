"""
bamkit - compile Business Algebra Models into named-reference workbooks
and audit them against an independent shadow evaluation.
"""

import typer

from bamkit import __version__
from bamkit.commands.audit import audit_census, audit_deps, audit_docs, audit_sensitivity
from bamkit.commands.check import check_model
from bamkit.commands.evaluate import evaluate_model
from bamkit.commands.generate import generate_workbook
from bamkit.commands.verify import verify_model
from bamkit.utils.config import STYLE_ENV_VAR, Backend, EvalFormat, RollupMode
from bamkit.utils.logging import configure_logging


# Reusable options
JSON_OPTION = typer.Option(False, "--json", help="Output machine-readable JSON")
ROLLUP_OPTION = typer.Option(
    RollupMode.RECOMPUTE,
    "--rollup",
    help="Aggregate calculated variables by summing leaves or recomputing the formula",
)
STRICT_OPTION = typer.Option(
    False, "--strict", help="Fail on the first instance that evaluates to UNDEFINED"
)

app = typer.Typer(
    name="bam",
    help="bamkit - Business Algebra Model compiler and audit toolkit",
    rich_markup_mode="rich",
    context_settings={"help_option_names": ["-h", "--help"]},
    add_completion=False,
    no_args_is_help=True,
)
audit_app = typer.Typer(
    help="Audit artifacts: dependency trees, census, sensitivity, documentation",
    no_args_is_help=True,
)
app.add_typer(audit_app, name="audit")


def _version_callback(value: bool) -> None:
    if value:
        typer.echo(f"bamkit {__version__}")
        raise typer.Exit()


@app.callback()
def root(
    verbose: bool = typer.Option(
        False, "--verbose", "-v", help="Show debug logging on stderr"
    ),
    version: bool = typer.Option(
        False,
        "--version",
        callback=_version_callback,
        is_eager=True,
        help="Show the version and exit",
    ),
):
    """Compile plain-language business models into spreadsheets."""
    configure_logging(verbose)


@app.command()
def check(
    model: str = typer.Argument(..., help="Model file (.bam)"),
    json: bool = JSON_OPTION,
):
    """Parse and analyze a model and print a summary."""
    check_model(model, json_output=json)


@app.command()
def generate(
    model: str = typer.Argument(..., help="Model file (.bam)"),
    output: str = typer.Option(..., "--output", "-o", help="Output file"),
    style: str | None = typer.Option(
        None, "--style", help=f"Style JSON file (default: ${STYLE_ENV_VAR})"
    ),
    data: str | None = typer.Option(
        None, "--data", help="Input data CSV used to seed input cells"
    ),
    backend: Backend | None = typer.Option(
        None, "--backend", help="Output format (default: from the output extension)"
    ),
    rollup: RollupMode = ROLLUP_OPTION,
    strict: bool = STRICT_OPTION,
):
    """Generate a workbook from a model."""
    generate_workbook(
        model,
        output,
        style_path=style,
        data_path=data,
        backend=backend,
        rollup=rollup,
        strict=strict,
    )


@app.command(name="eval")
def eval_command(
    model: str = typer.Argument(..., help="Model file (.bam)"),
    data: str = typer.Option(..., "--data", help="Input data CSV"),
    format: EvalFormat = typer.Option(EvalFormat.CSV, "--format", help="Output format"),
    output: str | None = typer.Option(
        None, "--output", "-o", help="Write to a file instead of stdout"
    ),
    rollup: RollupMode = ROLLUP_OPTION,
    strict: bool = STRICT_OPTION,
):
    """Evaluate every variable instance and print the values as CSV."""
    evaluate_model(
        model, data, output_path=output, eval_format=format, rollup=rollup, strict=strict
    )


@app.command()
def verify(
    model: str = typer.Argument(..., help="Model file (.bam)"),
    data: str = typer.Option(..., "--data", help="Input data CSV"),
    observed: str = typer.Option(..., "--observed", help="Observed values CSV"),
    tolerance: float = typer.Option(
        0.0, "--tolerance", help="Largest accepted absolute difference"
    ),
    rollup: RollupMode = ROLLUP_OPTION,
    json: bool = JSON_OPTION,
):
    """Check observed values against an independent evaluation of the model."""
    verify_model(
        model,
        data,
        observed,
        tolerance=tolerance,
        rollup=rollup,
        json_output=json,
    )


@audit_app.command()
def deps(
    model: str = typer.Argument(..., help="Model file (.bam)"),
    variable: str = typer.Argument(..., help="Variable to explain"),
    json: bool = JSON_OPTION,
):
    """Show the dependency tree of a variable."""
    audit_deps(model, variable, json_output=json)


@audit_app.command()
def census(
    model: str = typer.Argument(..., help="Model file (.bam)"),
    json: bool = JSON_OPTION,
):
    """List the distinct formulas of a model."""
    audit_census(model, json_output=json)


@audit_app.command()
def sensitivity(
    model: str = typer.Argument(..., help="Model file (.bam)"),
    data: str = typer.Option(..., "--data", help="Input data CSV"),
    target: str = typer.Option(..., "--target", help="Calculated variable to observe"),
    period: str | None = typer.Option(
        None, "--period", help="Period label or index (default: first period)"
    ),
    category: str | None = typer.Option(
        None, "--category", help="Category path, e.g. 'European Union;United Kingdom'"
    ),
    rollup: RollupMode = ROLLUP_OPTION,
    json: bool = JSON_OPTION,
):
    """Rank inputs by the effect of a +1% change on a target value."""
    audit_sensitivity(
        model,
        data,
        target,
        period=period,
        category=category,
        rollup=rollup,
        json_output=json,
    )


@audit_app.command()
def docs(
    model: str = typer.Argument(..., help="Model file (.bam)"),
    output: str | None = typer.Option(
        None, "--output", "-o", help="Write to a file instead of stdout"
    ),
):
    """Export markdown documentation of a model."""
    audit_docs(model, output_path=output)


def main():
    """Main entry point for the bamkit CLI."""
    app()


if __name__ == "__main__":
    main()
