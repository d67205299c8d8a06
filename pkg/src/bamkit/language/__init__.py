"""Business Algebra Model language: syntax tree, parser and canonical printer."""

from .ast import (
    BinaryOp,
    CategoryHierarchy,
    CategoryNode,
    Expr,
    FormulaDef,
    ModelDocument,
    NumberLiteral,
    Paren,
    ReportDef,
    TimeFrame,
    TimeUnit,
    VariableRef,
    iter_refs,
    name_key,
    normalized,
    strip_parens,
)
from .expressions import (
    format_expression,
    format_number,
    normalize_operators,
    parse_expression,
    parse_number,
    tokenize,
)
from .parser import parse_formula, parse_model
from .printer import outline_lines, print_formula, print_model

__all__ = [
    "BinaryOp",
    "CategoryHierarchy",
    "CategoryNode",
    "Expr",
    "FormulaDef",
    "ModelDocument",
    "NumberLiteral",
    "Paren",
    "ReportDef",
    "TimeFrame",
    "TimeUnit",
    "VariableRef",
    "format_expression",
    "format_number",
    "iter_refs",
    "name_key",
    "normalize_operators",
    "normalized",
    "outline_lines",
    "parse_expression",
    "parse_formula",
    "parse_model",
    "parse_number",
    "print_formula",
    "print_model",
    "strip_parens",
    "tokenize",
]
