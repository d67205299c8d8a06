"""Control-around verification: compare observed spreadsheet values to the shadow model."""

import logging
from dataclasses import dataclass

from bamkit.model.grid import InstanceGrid, expand
from bamkit.model.semantic import SemanticModel
from bamkit.ports.exceptions import DataError
from bamkit.utils.config import RollupMode
from bamkit.utils.types import CategoryPath, VariableName

from .cube import UNDEFINED, Value, ValueCube
from .data import read_observations
from .evaluate import evaluate

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Mismatch:
    """One observed value that disagrees with the shadow model.

    ``expected``/``observed`` are None for UNDEFINED; ``difference`` is None
    when only one side is UNDEFINED.
    """

    variable: VariableName
    category: CategoryPath
    period: str
    expected: float | None
    observed: float | None
    difference: float | None


@dataclass(frozen=True)
class MismatchReport:
    mismatches: tuple[Mismatch, ...]
    compared: int
    missing: int

    @property
    def passed(self) -> bool:
        return not self.mismatches


def _number(value: Value) -> float | None:
    return None if value is UNDEFINED else value  # type: ignore[return-value]


def compare_cubes(
    expected: ValueCube,
    observed: ValueCube,
    tolerance: float,
    grid: InstanceGrid,
) -> MismatchReport:
    """Compare every observed instance against the expected cube."""
    mismatches: list[Mismatch] = []
    for key, seen in observed.items():
        wanted = expected[key]
        difference: float | None = None
        if wanted is UNDEFINED and seen is UNDEFINED:
            continue
        if wanted is not UNDEFINED and seen is not UNDEFINED:
            difference = abs(wanted - seen)  # type: ignore[operator]
            if difference <= tolerance:
                continue
        mismatches.append(
            Mismatch(
                variable=key.variable,
                category=key.path,
                period=grid.period_labels[key.period],
                expected=_number(wanted),
                observed=_number(seen),
                difference=difference,
            )
        )
    missing = sum(1 for key in expected if key not in observed)
    return MismatchReport(tuple(mismatches), compared=len(observed), missing=missing)


def verify_against(
    model: SemanticModel,
    inputs: ValueCube,
    observed: str,
    tolerance: float = 0.0,
    *,
    grid: InstanceGrid | None = None,
    rollup: RollupMode = RollupMode.RECOMPUTE,
) -> MismatchReport:
    """Evaluate the model and compare the observed CSV document with the result.

    Raises:
        DataError: For a negative tolerance, or any schema error of the observed
            document (as for load_inputs, calculated variables allowed)
    """
    if tolerance < 0:
        raise DataError(f"Tolerance must not be negative, got {tolerance}")
    grid = grid or expand(model)
    observations = read_observations(observed, model, grid)
    expected = evaluate(model, inputs, grid=grid, rollup=rollup)
    report = compare_cubes(expected, observations, tolerance, grid)
    logger.debug(
        "Compared %d values: %d mismatches, %d not observed",
        report.compared,
        len(report.mismatches),
        report.missing,
    )
    return report
