"""Command for checking that a model parses and analyzes.

Uses dependency injection for testability.
Core logic is pure - no sys.exit, no direct filesystem calls.
"""

from bamkit.model import expand
from bamkit.ports import (
    CheckResult,
    FilesystemPort,
    JsonUI,
    RealFilesystem,
    RealUI,
    UIPort,
    emit_json_success,
    load_model,
    run_command,
    validate_paths,
)
from bamkit.utils.config import RunConfig


def check_core(fs: FilesystemPort, ui: UIPort, config: RunConfig) -> CheckResult:
    """Parse and analyze a model, then report its shape.

    This is the pure core logic that can be tested without mocking.

    Args:
        fs: Filesystem interface
        ui: User interaction interface
        config: Run settings; only the model path is used

    Returns:
        CheckResult with the hierarchy, report and variable counts

    Raises:
        BamIOError: If the model file is missing or unreadable
        ModelError: On the first parse or analysis error
    """
    validate_paths(fs, config)
    model = load_model(fs, config.model_path)
    grid = expand(model)

    result = CheckResult(
        model_path=config.model_path,
        hierarchies=len(model.document.hierarchies),
        reports=len(model.document.reports),
        inputs=[v.name for v in model.inputs],
        calculated=[v.name for v in model.calculated],
    )
    ui.print_muted(
        f"{grid.instance_count()} instances over {grid.period_count} periods"
    )
    ui.print_result(result.summary)
    return result


def check_model(model_path: str, *, json_output: bool = False) -> None:
    """CLI entrypoint that wraps core logic with real implementations.

    This thin wrapper:
    1. Instantiates real dependencies
    2. Calls the core logic
    3. Converts exceptions to sys.exit via run_command
    """
    fs = RealFilesystem()
    ui = JsonUI() if json_output else RealUI()
    config = RunConfig(subcommand="check", model_path=model_path)

    def core() -> CheckResult:
        return check_core(fs=fs, ui=ui, config=config)

    result = run_command(ui, core, json_output=json_output, command="check")
    if json_output and result is not None:
        emit_json_success("check", result)
