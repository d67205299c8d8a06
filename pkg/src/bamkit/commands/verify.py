"""Command for verifying observed spreadsheet values against the shadow model.

Uses dependency injection for testability.
Core logic is pure - no sys.exit, no direct filesystem calls.
"""

from bamkit.language import format_number
from bamkit.model import expand
from bamkit.ports import (
    FilesystemPort,
    JsonUI,
    RealFilesystem,
    RealUI,
    UIPort,
    VerificationFailedError,
    VerifyResult,
    emit_json_success,
    load_cube,
    load_model,
    run_command,
    validate_paths,
)
from bamkit.shadow import Mismatch, verify_against
from bamkit.utils.config import RollupMode, RunConfig


def _describe(mismatch: Mismatch) -> str:
    def show(value: float | None) -> str:
        return "UNDEFINED" if value is None else format_number(value)

    category = ";".join(mismatch.category) or "(no category)"
    return (
        f"{mismatch.variable} [{category}] {mismatch.period}: "
        f"expected {show(mismatch.expected)}, observed {show(mismatch.observed)}"
    )


def verify_core(fs: FilesystemPort, ui: UIPort, config: RunConfig) -> VerifyResult:
    """Compare observed values with an evaluation of the model.

    This is the pure core logic that can be tested without mocking.

    Args:
        fs: Filesystem interface
        ui: User interaction interface
        config: Run settings (model, data, observed, tolerance, rollup)

    Returns:
        VerifyResult when every observed value agrees

    Raises:
        VerificationFailedError: If any observed value disagrees
        DataError: If a data document is invalid or the tolerance is negative
    """
    assert config.data_path is not None and config.observed_path is not None
    validate_paths(fs, config)
    model = load_model(fs, config.model_path)
    grid = expand(model)
    inputs = load_cube(fs, config.data_path, model, grid)
    report = verify_against(
        model,
        inputs,
        fs.read_text(config.observed_path),
        config.tolerance,
        grid=grid,
        rollup=config.rollup,
    )

    for mismatch in report.mismatches:
        ui.print_warning(_describe(mismatch))
    if report.missing:
        ui.print_muted(f"{report.missing} instances not observed")
    ui.print_result(f"{len(report.mismatches)} mismatches")

    if not report.passed:
        raise VerificationFailedError(len(report.mismatches))
    return VerifyResult(compared=report.compared, missing=report.missing)


def verify_model(
    model_path: str,
    data_path: str,
    observed_path: str,
    *,
    tolerance: float = 0.0,
    rollup: RollupMode = RollupMode.RECOMPUTE,
    json_output: bool = False,
) -> None:
    """CLI entrypoint that wraps core logic with real implementations.

    This thin wrapper:
    1. Instantiates real dependencies
    2. Calls the core logic
    3. Converts exceptions to sys.exit via run_command
    """
    fs = RealFilesystem()
    ui = JsonUI() if json_output else RealUI()
    config = RunConfig(
        subcommand="verify",
        model_path=model_path,
        data_path=data_path,
        observed_path=observed_path,
        rollup=rollup,
        tolerance=tolerance,
    )

    def core() -> VerifyResult:
        return verify_core(fs=fs, ui=ui, config=config)

    result = run_command(ui, core, json_output=json_output, command="verify")
    if json_output and result is not None:
        emit_json_success("verify", result)
