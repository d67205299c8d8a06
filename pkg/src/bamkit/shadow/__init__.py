"""Shadow model: numeric evaluation over input data and verification of outputs."""

from .cube import (
    UNDEFINED,
    InstanceKey,
    Undefined,
    Value,
    ValueCube,
    add_all,
    apply_operator,
    evaluate_expression,
)
from .data import dump_cube, load_inputs, parse_value, read_observations
from .evaluate import describe_instance, evaluate
from .verify import Mismatch, MismatchReport, compare_cubes, verify_against

__all__ = [
    "UNDEFINED",
    "InstanceKey",
    "Mismatch",
    "MismatchReport",
    "Undefined",
    "Value",
    "ValueCube",
    "add_all",
    "apply_operator",
    "compare_cubes",
    "describe_instance",
    "dump_cube",
    "evaluate",
    "evaluate_expression",
    "load_inputs",
    "parse_value",
    "read_observations",
    "verify_against",
]
