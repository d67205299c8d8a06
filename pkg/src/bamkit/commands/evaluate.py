"""Command for evaluating a model over input data.

Uses dependency injection for testability.
Core logic is pure - no sys.exit, no direct filesystem calls.
"""

from bamkit.model import expand
from bamkit.ports import (
    EvalResult,
    FilesystemPort,
    RealFilesystem,
    RealUI,
    UIPort,
    load_cube,
    load_model,
    run_command,
    validate_paths,
)
from bamkit.shadow import dump_cube, evaluate
from bamkit.utils.config import EvalFormat, RollupMode, RunConfig

_WRITERS = {EvalFormat.CSV: dump_cube}


def evaluate_core(fs: FilesystemPort, ui: UIPort, config: RunConfig) -> EvalResult:
    """Evaluate every instance of the model and emit the cube as CSV.

    This is the pure core logic that can be tested without mocking.

    Args:
        fs: Filesystem interface
        ui: User interaction interface
        config: Run settings; the values go to ``output_path`` or standard output
            in ``eval_format``

    Returns:
        EvalResult with instance and defaulted-input counts

    Raises:
        DataError: If the data document is invalid, or an instance is UNDEFINED
            in strict mode
    """
    assert config.data_path is not None
    validate_paths(fs, config)
    model = load_model(fs, config.model_path)
    grid = expand(model)
    inputs = load_cube(fs, config.data_path, model, grid)
    cube = evaluate(model, inputs, grid=grid, rollup=config.rollup, strict=config.strict)

    text = _WRITERS[config.eval_format](model, cube, grid)
    if config.output_path:
        fs.write_text(config.output_path, text)
        ui.print_success(f"Wrote {len(cube)} values to {config.output_path}")
    else:
        ui.print_result(text)

    return EvalResult(
        instances=len(cube),
        defaulted=len(cube.defaulted),
        output_path=config.output_path,
    )


def evaluate_model(
    model_path: str,
    data_path: str,
    *,
    output_path: str | None = None,
    eval_format: EvalFormat = EvalFormat.CSV,
    rollup: RollupMode = RollupMode.RECOMPUTE,
    strict: bool = False,
) -> None:
    """CLI entrypoint that wraps core logic with real implementations.

    This thin wrapper:
    1. Instantiates real dependencies
    2. Calls the core logic
    3. Converts exceptions to sys.exit via run_command
    """
    fs = RealFilesystem()
    ui = RealUI()
    config = RunConfig(
        subcommand="eval",
        model_path=model_path,
        data_path=data_path,
        output_path=output_path,
        eval_format=eval_format,
        rollup=rollup,
        strict=strict,
    )

    def core() -> EvalResult:
        return evaluate_core(fs=fs, ui=ui, config=config)

    run_command(ui, core, command="eval")
