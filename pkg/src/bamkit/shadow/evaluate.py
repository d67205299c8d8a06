"""Shadow evaluation of a model over input data."""

import logging

from bamkit.language.ast import VariableRef
from bamkit.model.grid import CategoryRow, InstanceGrid, expand
from bamkit.model.semantic import SemanticModel, VariableInfo
from bamkit.ports.exceptions import EvaluationError
from bamkit.utils.config import RollupMode

from .cube import UNDEFINED, InstanceKey, Value, ValueCube, add_all, evaluate_expression

logger = logging.getLogger(__name__)


def describe_instance(key: InstanceKey, grid: InstanceGrid) -> str:
    """Human-readable instance text, e.g. "Turnover [Europe;UK] 2005"."""
    category = ";".join(key.path) or "(no category)"
    return f"{key.variable} [{category}] {grid.period_labels[key.period]}"


class _Evaluator:
    def __init__(
        self,
        model: SemanticModel,
        grid: InstanceGrid,
        inputs: ValueCube,
        rollup: RollupMode,
        strict: bool,
    ):
        self.model = model
        self.grid = grid
        self.inputs = inputs
        self.rollup = rollup
        self.strict = strict
        self.cube = ValueCube()

    def set(self, key: InstanceKey, value: Value) -> None:
        if value is UNDEFINED and self.strict:
            raise EvaluationError(
                f"{describe_instance(key, self.grid)} evaluates to UNDEFINED"
            )
        self.cube[key] = value

    def leaf(self, info: VariableInfo, row: CategoryRow, period: int) -> Value:
        if info.is_input:
            key = InstanceKey(info.name, row.path, period)
            value = self.inputs.values.get(key)
            if value is None:
                self.cube.defaulted.append(key)
                return 0.0
            return value
        return self.formula(info, row, period)

    def formula(self, info: VariableInfo, row: CategoryRow, period: int) -> Value:
        assert info.definition is not None

        def lookup(ref: VariableRef) -> Value:
            name = self.model.variables[ref.key].name
            return self.cube[InstanceKey(name, row.path, period)]

        return evaluate_expression(info.definition.body, lookup)

    def aggregate(self, info: VariableInfo, row: CategoryRow, period: int) -> Value:
        if info.is_calculated and self.rollup is RollupMode.RECOMPUTE:
            return self.formula(info, row, period)
        return add_all(
            [self.cube[InstanceKey(info.name, member, period)] for member in row.members]
        )

    def run(self) -> ValueCube:
        periods = range(self.grid.period_count)
        for info in self.model.in_order():
            rows = [row for _, row in self.grid.rows_for(info.key)]
            for row in rows:
                if not row.is_aggregate:
                    for period in periods:
                        key = InstanceKey(info.name, row.path, period)
                        self.set(key, self.leaf(info, row, period))
            for row in rows:
                if row.is_aggregate:
                    for period in periods:
                        key = InstanceKey(info.name, row.path, period)
                        self.set(key, self.aggregate(info, row, period))
        return self.cube


def evaluate(
    model: SemanticModel,
    inputs: ValueCube,
    *,
    grid: InstanceGrid | None = None,
    rollup: RollupMode = RollupMode.RECOMPUTE,
    strict: bool = False,
) -> ValueCube:
    """Compute every instance of every variable.

    Missing input values default to 0 and are listed in ``defaulted`` of the
    result. Variables are visited in topological order; within a variable all
    leaf rows are computed before roll-up rows.

    Raises:
        EvaluationError: In strict mode, for the first instance that is UNDEFINED
    """
    grid = grid or expand(model)
    cube = _Evaluator(model, grid, inputs, rollup, strict).run()
    if cube.defaulted:
        logger.warning(
            "%d missing input values defaulted to 0: %s",
            len(cube.defaulted),
            "; ".join(describe_instance(key, grid) for key in cube.defaulted),
        )
    return cube
