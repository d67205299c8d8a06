"""Commands producing audit artifacts: dependency trees, census, sensitivity, docs.

Uses dependency injection for testability.
Core logic is pure - no sys.exit, no direct filesystem calls.
"""

from bamkit.audit import (
    dependency_tree,
    export_docs,
    formula_census,
    render_tree,
    sensitivity_rank,
)
from bamkit.language import format_number
from bamkit.model import expand
from bamkit.ports import (
    CensusResult,
    DepsResult,
    DocsResult,
    FilesystemPort,
    JsonUI,
    RealFilesystem,
    RealUI,
    SensitivityResult,
    UIPort,
    emit_json_success,
    load_cube,
    load_model,
    run_command,
    validate_paths,
)
from bamkit.shadow.data import parse_category, resolve_period
from bamkit.utils.config import RollupMode, RunConfig


def deps_core(
    fs: FilesystemPort, ui: UIPort, config: RunConfig, variable: str
) -> DepsResult:
    """Print the dependency tree of one variable.

    This is the pure core logic that can be tested without mocking.

    Raises:
        UnknownVariableError: If the model has no such variable (exit 1)
    """
    validate_paths(fs, config)
    model = load_model(fs, config.model_path)
    tree = dependency_tree(model, variable)
    ui.print_result("\n".join(render_tree(tree)))
    return DepsResult(
        variable=tree.name,
        tree=tree,
        inputs=[v.name for v in model.input_dependencies(tree.name)],
    )


def census_core(fs: FilesystemPort, ui: UIPort, config: RunConfig) -> CensusResult:
    """Print every distinct formula with the reports carrying it.

    This is the pure core logic that can be tested without mocking.
    """
    validate_paths(fs, config)
    census = formula_census(load_model(fs, config.model_path))
    lines = [f"{e.formula}    [{', '.join(e.reports)}]" for e in census.entries]
    lines.append(f"{census.count} distinct formulas")
    ui.print_result("\n".join(lines))
    return CensusResult(count=census.count, entries=list(census.entries))


def sensitivity_core(
    fs: FilesystemPort,
    ui: UIPort,
    config: RunConfig,
    target: str,
    period: str | None = None,
    category: str | None = None,
) -> SensitivityResult:
    """Rank the inputs of a target by the effect of a +1% change.

    This is the pure core logic that can be tested without mocking.

    Args:
        fs: Filesystem interface
        ui: User interaction interface
        config: Run settings (model, data, rollup)
        target: Calculated variable to observe
        period: Period label or 0-based index (first period if None)
        category: Semicolon-separated category path (grand total if None)

    Raises:
        UnknownVariableError: If the target does not exist (exit 1)
        TargetNotCalculatedError: If the target is an input variable
        UndefinedBaseError: If the target instance is UNDEFINED
    """
    assert config.data_path is not None
    validate_paths(fs, config)
    model = load_model(fs, config.model_path)
    grid = expand(model)
    inputs = load_cube(fs, config.data_path, model, grid)
    index = resolve_period(period, grid) if period is not None else 0
    path = parse_category(category) if category is not None else None

    entries = sensitivity_rank(
        model, inputs, target, index, path, rollup=config.rollup
    )
    width = max((len(e.variable) for e in entries), default=0)
    ui.print_result(
        "\n".join(
            f"{e.rank:>3}  {e.variable:<{width}}  "
            f"{'UNDEFINED' if e.delta is None else format_number(round(e.delta, 9))}"
            for e in entries
        )
    )
    return SensitivityResult(
        target=model.variable(target, exit_code=1).name,
        category=category or "",
        period=grid.period_labels[index],
        entries=entries,
    )


def docs_core(fs: FilesystemPort, ui: UIPort, config: RunConfig) -> DocsResult:
    """Export the model documentation to a file or standard output.

    This is the pure core logic that can be tested without mocking.
    """
    validate_paths(fs, config)
    model = load_model(fs, config.model_path)
    text = export_docs(model)
    if config.output_path:
        fs.write_text(config.output_path, text)
        ui.print_success(f"Wrote documentation to {config.output_path}")
    else:
        ui.print_result(text)
    return DocsResult(formulas=len(model.calculated), output_path=config.output_path)


def audit_deps(model_path: str, variable: str, *, json_output: bool = False) -> None:
    """CLI entrypoint that wraps core logic with real implementations.

    This thin wrapper:
    1. Instantiates real dependencies
    2. Calls the core logic
    3. Converts exceptions to sys.exit via run_command
    """
    fs = RealFilesystem()
    ui = JsonUI() if json_output else RealUI()
    config = RunConfig(subcommand="audit deps", model_path=model_path)

    def core() -> DepsResult:
        return deps_core(fs=fs, ui=ui, config=config, variable=variable)

    result = run_command(ui, core, json_output=json_output, command="audit deps")
    if json_output and result is not None:
        emit_json_success("audit deps", result)


def audit_census(model_path: str, *, json_output: bool = False) -> None:
    """CLI entrypoint for the formula census."""
    fs = RealFilesystem()
    ui = JsonUI() if json_output else RealUI()
    config = RunConfig(subcommand="audit census", model_path=model_path)

    def core() -> CensusResult:
        return census_core(fs=fs, ui=ui, config=config)

    result = run_command(ui, core, json_output=json_output, command="audit census")
    if json_output and result is not None:
        emit_json_success("audit census", result)


def audit_sensitivity(
    model_path: str,
    data_path: str,
    target: str,
    *,
    period: str | None = None,
    category: str | None = None,
    rollup: RollupMode = RollupMode.RECOMPUTE,
    json_output: bool = False,
) -> None:
    """CLI entrypoint for the sensitivity ranking."""
    fs = RealFilesystem()
    ui = JsonUI() if json_output else RealUI()
    config = RunConfig(
        subcommand="audit sensitivity",
        model_path=model_path,
        data_path=data_path,
        rollup=rollup,
    )

    def core() -> SensitivityResult:
        return sensitivity_core(
            fs=fs,
            ui=ui,
            config=config,
            target=target,
            period=period,
            category=category,
        )

    result = run_command(
        ui, core, json_output=json_output, command="audit sensitivity"
    )
    if json_output and result is not None:
        emit_json_success("audit sensitivity", result)


def audit_docs(model_path: str, *, output_path: str | None = None) -> None:
    """CLI entrypoint for the documentation export."""
    fs = RealFilesystem()
    ui = RealUI()
    config = RunConfig(
        subcommand="audit docs", model_path=model_path, output_path=output_path
    )

    def core() -> DocsResult:
        return docs_core(fs=fs, ui=ui, config=config)

    run_command(ui, core, command="audit docs")
