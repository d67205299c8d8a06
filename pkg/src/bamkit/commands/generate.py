"""Command for generating a workbook (or a value file) from a model.

Uses dependency injection for testability.
Core logic is pure - no sys.exit, no direct filesystem calls.
"""

from bamkit.model import expand
from bamkit.ports import (
    FilesystemPort,
    GenerateResult,
    RealFilesystem,
    RealUI,
    UIPort,
    load_cube,
    load_model,
    load_style,
    run_command,
    validate_paths,
)
from bamkit.shadow import ValueCube, dump_cube, evaluate
from bamkit.sheetgen import build_workbook, render_portable, render_xlsx
from bamkit.utils.config import Backend, RollupMode, RunConfig, infer_backend, resolve_style_path


def generate_core(fs: FilesystemPort, ui: UIPort, config: RunConfig) -> GenerateResult:
    """Build the workbook for a model and write it with the selected backend.

    This is the pure core logic that can be tested without mocking.

    With a data path, input cells are seeded with the data values; for the
    csv-values backend the evaluated cube is written instead of a workbook.

    Args:
        fs: Filesystem interface
        ui: User interaction interface
        config: Run settings (model, output, style, data, backend, rollup)

    Returns:
        GenerateResult describing the written file

    Raises:
        BamIOError: If an input file is missing or the output cannot be written
        ModelError: If the model is invalid
        DataError: If the style or data document is invalid
    """
    assert config.output_path is not None
    validate_paths(fs, config)
    model = load_model(fs, config.model_path)
    style = load_style(fs, config.style_path)
    grid = expand(model)
    seed = load_cube(fs, config.data_path, model, grid) if config.data_path else None

    if config.backend is Backend.CSV_VALUES:
        cube = evaluate(
            model,
            seed or ValueCube(),
            grid=grid,
            rollup=config.rollup,
            strict=config.strict,
        )
        fs.write_text(config.output_path, dump_cube(model, cube, grid))
        result = GenerateResult(
            output_path=config.output_path,
            backend=config.backend.value,
            sheets=0,
            defined_names=0,
            seeded=seed is not None,
        )
        ui.print_success(f"Wrote {len(cube)} values to {config.output_path}")
        return result

    wb = build_workbook(grid, model, style, rollup=config.rollup, seed=seed)
    if config.backend is Backend.XLSX:
        fs.write_bytes(config.output_path, render_xlsx(wb))
    else:
        fs.write_text(config.output_path, render_portable(wb))

    ui.print_success(
        f"Wrote {config.output_path} "
        f"({len(wb.sheets)} sheets, {len(wb.defined_names)} defined names)"
    )
    return GenerateResult(
        output_path=config.output_path,
        backend=config.backend.value,
        sheets=len(wb.sheets),
        defined_names=len(wb.defined_names),
        seeded=seed is not None,
    )


def generate_workbook(
    model_path: str,
    output_path: str,
    *,
    style_path: str | None = None,
    data_path: str | None = None,
    backend: Backend | None = None,
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
        subcommand="generate",
        model_path=model_path,
        data_path=data_path,
        style_path=resolve_style_path(style_path),
        output_path=output_path,
        backend=backend or infer_backend(output_path),
        rollup=rollup,
        strict=strict,
    )

    def core() -> GenerateResult:
        return generate_core(fs=fs, ui=ui, config=config)

    run_command(ui, core, command="generate")
