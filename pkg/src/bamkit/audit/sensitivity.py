"""One-at-a-time sensitivity ranking of a target instance over its inputs."""

import logging
from dataclasses import dataclass

from bamkit.model.grid import InstanceGrid, expand
from bamkit.model.semantic import SemanticModel
from bamkit.ports.exceptions import (
    PeriodOutOfRangeError,
    TargetNotCalculatedError,
    UndefinedBaseError,
    UnknownCategoryPathError,
)
from bamkit.shadow.cube import UNDEFINED, InstanceKey, ValueCube
from bamkit.shadow.data import resolve_path
from bamkit.shadow.evaluate import describe_instance, evaluate
from bamkit.utils.config import RollupMode
from bamkit.utils.types import CategoryPath, PeriodIndex, VariableName

logger = logging.getLogger(__name__)

PERTURBATION = 1.01
ZERO_STEP = 1.0


@dataclass(frozen=True)
class SensitivityEntry:
    """Change of the target when one input is perturbed by +1% everywhere.

    ``delta`` is signed; it is None when the perturbed target is UNDEFINED.
    """

    variable: VariableName
    delta: float | None
    rank: int


def perturb(inputs: ValueCube, grid: InstanceGrid, model: SemanticModel, name: str) -> ValueCube:
    """Copy of ``inputs`` with every leaf instance of one input scaled by 1.01.

    Zero or missing values move by +1 instead.
    """
    info = model.variable(name)
    cube = inputs.copy()
    for path in grid.leaf_paths_for(info.key):
        for period in range(grid.period_count):
            key = InstanceKey(info.name, path, period)
            value = inputs.values.get(key, 0.0)
            if value is UNDEFINED:
                continue
            cube[key] = value * PERTURBATION if value != 0 else value + ZERO_STEP
    return cube


def _target_key(
    model: SemanticModel,
    grid: InstanceGrid,
    target: str,
    period: PeriodIndex,
    category_path: CategoryPath | None,
) -> InstanceKey:
    info = model.variable(target, exit_code=1)
    if not info.is_calculated:
        raise TargetNotCalculatedError(f"'{info.name}' is an input variable")
    if not 0 <= period < grid.period_count:
        raise PeriodOutOfRangeError(
            f"Period {period} is outside 0..{grid.period_count - 1}"
        )
    if category_path is None:
        # whole-model figure: the closing row of the first breakdown
        category_path = grid.layouts[info.breakdowns[0]].instance_rows[-1].path
    else:
        resolved = resolve_path(info.key, category_path, grid, leaves_only=False)
        if resolved is None:
            raise UnknownCategoryPathError(
                f"'{info.name}' has no category '{';'.join(category_path)}'"
            )
        category_path = resolved
    return InstanceKey(info.name, category_path, period)


def sensitivity_rank(
    model: SemanticModel,
    inputs: ValueCube,
    target: str,
    period: PeriodIndex = 0,
    category_path: CategoryPath | None = None,
    *,
    rollup: RollupMode = RollupMode.RECOMPUTE,
) -> list[SensitivityEntry]:
    """Rank the inputs of a calculated target by their effect on one instance.

    Only inputs the target transitively depends on are ranked. Entries are
    ordered by descending absolute delta, ties alphabetically, undefined
    deltas last. Without ``category_path`` the target's grand total row is used.

    Raises:
        UnknownVariableError: If the target does not exist
        TargetNotCalculatedError: If the target is an input variable
        UndefinedBaseError: If the unperturbed target instance is UNDEFINED
    """
    grid = expand(model)
    key = _target_key(model, grid, target, period, category_path)
    base = evaluate(model, inputs, grid=grid, rollup=rollup)[key]
    if base is UNDEFINED:
        raise UndefinedBaseError(f"{describe_instance(key, grid)} is UNDEFINED")

    deltas: list[tuple[VariableName, float | None]] = []
    for info in model.input_dependencies(target):
        perturbed = evaluate(
            model, perturb(inputs, grid, model, info.name), grid=grid, rollup=rollup
        )[key]
        delta = None if perturbed is UNDEFINED else perturbed - base
        logger.debug("Perturbed %s: delta %s", info.name, delta)
        deltas.append((info.name, delta))

    deltas.sort(key=lambda d: (d[1] is None, -abs(d[1] or 0.0), d[0]))
    return [
        SensitivityEntry(name, delta, rank)
        for rank, (name, delta) in enumerate(deltas, start=1)
    ]
