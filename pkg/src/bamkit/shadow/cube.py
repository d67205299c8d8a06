"""Value cube of the shadow model and the arithmetic shared by its evaluators."""

import math
from collections.abc import Callable, Iterator
from dataclasses import dataclass, field
from enum import Enum

from bamkit.language.ast import BinaryOp, Expr, NumberLiteral, Paren, VariableRef
from bamkit.utils.types import CategoryPath, PeriodIndex, VariableName


class Undefined(Enum):
    """Result of a division by zero; propagates through every operation."""

    UNDEFINED = "UNDEFINED"

    def __repr__(self) -> str:
        return "UNDEFINED"


UNDEFINED = Undefined.UNDEFINED

Value = float | Undefined


def apply_operator(op: str, left: Value, right: Value) -> Value:
    """Apply one arithmetic operator with UNDEFINED propagation."""
    if left is UNDEFINED or right is UNDEFINED:
        return UNDEFINED
    assert isinstance(left, float) and isinstance(right, float)
    if op == "+":
        result = left + right
    elif op == "-":
        result = left - right
    elif op == "*":
        result = left * right
    elif op == "/":
        if right == 0:
            return UNDEFINED
        result = left / right
    else:
        raise ValueError(f"Unknown operator '{op}'")
    return result if math.isfinite(result) else UNDEFINED


def add_all(values: list[Value]) -> Value:
    """Left-to-right sum: ((v0 + v1) + v2) + ..."""
    if not values:
        return 0.0
    total = values[0]
    for value in values[1:]:
        total = apply_operator("+", total, value)
    return total


def evaluate_expression(expr: Expr, lookup: Callable[[VariableRef], Value]) -> Value:
    match expr:
        case NumberLiteral(value=value):
            return float(value)
        case VariableRef():
            return lookup(expr)
        case Paren(child=child):
            return evaluate_expression(child, lookup)
        case BinaryOp(op=op, left=left, right=right):
            return apply_operator(
                op,
                evaluate_expression(left, lookup),
                evaluate_expression(right, lookup),
            )
    raise TypeError(f"Not an expression node: {expr!r}")


@dataclass(frozen=True, order=True)
class InstanceKey:
    """Address of one value: variable display name, category path and period."""

    variable: VariableName
    path: CategoryPath
    period: PeriodIndex


@dataclass
class ValueCube:
    """Mapping of instance keys to values.

    ``defaulted`` lists the input instances that had no data and were set to 0.
    """

    values: dict[InstanceKey, Value] = field(default_factory=dict)
    defaulted: list[InstanceKey] = field(default_factory=list)

    def __getitem__(self, key: InstanceKey) -> Value:
        return self.values[key]

    def __setitem__(self, key: InstanceKey, value: Value) -> None:
        self.values[key] = value

    def __contains__(self, key: object) -> bool:
        return key in self.values

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self) -> Iterator[InstanceKey]:
        return iter(self.values)

    def get(
        self, variable: VariableName, path: CategoryPath, period: PeriodIndex
    ) -> Value | None:
        return self.values.get(InstanceKey(variable, tuple(path), period))

    def items(self) -> list[tuple[InstanceKey, Value]]:
        return list(self.values.items())

    def copy(self) -> "ValueCube":
        return ValueCube(dict(self.values), list(self.defaulted))
