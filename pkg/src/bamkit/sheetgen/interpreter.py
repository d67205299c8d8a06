"""Independent evaluator of a WorkbookModel's named-formula graph.

Formula text is tokenized and parsed here from scratch; a name resolves to its
region and then to the cell in the formula's own column. Blank cells read as 0.
The result is keyed like the shadow model's cube so both can be compared.
"""

import re
from dataclasses import dataclass

from bamkit.ports.exceptions import WorkbookInvariantError
from bamkit.shadow.cube import InstanceKey, Value, ValueCube, apply_operator

from .workbook import BlankCell, DefinedName, LiteralCell, NamedFormula, WorkbookModel

_TOKEN = re.compile(r"\s*(?:([0-9]+(?:\.[0-9]+)?)|([A-Za-z_][A-Za-z0-9_]*)|(.))")

CellAddress = tuple[str, int, int]


def tokenize_formula(text: str) -> list[str]:
    tokens = []
    for match in _TOKEN.finditer(text):
        token = match.group(1) or match.group(2) or match.group(3)
        if token and not token.isspace():
            tokens.append(token)
    return tokens


@dataclass
class _Parser:
    """Precedence climbing over + - * / with parentheses and signed numbers."""

    tokens: list[str]
    pos: int = 0

    def peek(self) -> str | None:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self) -> str:
        if self.pos >= len(self.tokens):
            raise WorkbookInvariantError("Formula ends unexpectedly")
        token = self.tokens[self.pos]
        self.pos += 1
        return token

    def parse(self) -> tuple:
        node = self.binary(0)
        if self.peek() is not None:
            raise WorkbookInvariantError(f"Unexpected token '{self.peek()}' in formula")
        return node

    def binary(self, min_precedence: int) -> tuple:
        left = self.operand()
        while (op := self.peek()) in ("+", "-", "*", "/"):
            precedence = 2 if op in ("*", "/") else 1
            if precedence <= min_precedence:
                break
            self.take()
            left = ("op", op, left, self.binary(precedence))
        return left

    def operand(self) -> tuple:
        token = self.take()
        if token == "(":
            node = self.binary(0)
            if self.take() != ")":
                raise WorkbookInvariantError("Unbalanced parentheses in formula")
            return node
        if token in ("+", "-") and (nxt := self.peek()) is not None and nxt[0].isdigit():
            value = float(self.take())
            return ("num", -value if token == "-" else value)
        if token[0].isdigit():
            return ("num", float(token))
        if token[0].isalpha() or token[0] == "_":
            return ("name", token)
        raise WorkbookInvariantError(f"Unexpected token '{token}' in formula")


class _WorkbookEvaluator:
    def __init__(self, wb: WorkbookModel):
        self.wb = wb
        self.names = {d.name.casefold(): d for d in wb.defined_names}
        self.sheets = {s.name: s for s in wb.sheets}
        self.parsed: dict[str, tuple] = {}
        self.values: dict[CellAddress, Value] = {}
        self.active: set[CellAddress] = set()

    def cell_value(self, address: CellAddress) -> Value:
        if address in self.values:
            return self.values[address]
        if address in self.active:
            raise WorkbookInvariantError(f"Circular reference at {address}")
        self.active.add(address)

        sheet, row, column = address
        content = self.sheets[sheet].rows[row].cells[column].content
        if isinstance(content, BlankCell):
            value: Value = 0.0
        elif isinstance(content, LiteralCell):
            if isinstance(content.value, str):
                raise WorkbookInvariantError(f"Text cell {address} used as a number")
            value = float(content.value)
        else:
            assert isinstance(content, NamedFormula)
            value = self.formula_value(content, column)

        self.active.discard(address)
        self.values[address] = value
        return value

    def formula_value(self, formula: NamedFormula, column: int) -> Value:
        tree = self.parsed.get(formula.expression)
        if tree is None:
            tree = _Parser(tokenize_formula(formula.expression)).parse()
            self.parsed[formula.expression] = tree
        return self.node_value(tree, column)

    def node_value(self, node: tuple, column: int) -> Value:
        kind = node[0]
        if kind == "num":
            return node[1]
        if kind == "name":
            region = self.names.get(node[1].casefold())
            if region is None:
                raise WorkbookInvariantError(f"Undefined name '{node[1]}'")
            if not region.first_column <= column <= region.last_column:
                raise WorkbookInvariantError(
                    f"Name '{node[1]}' does not intersect column {column}"
                )
            return self.cell_value((region.sheet, region.row, column))
        _, op, left, right = node
        return apply_operator(op, self.node_value(left, column), self.node_value(right, column))

    def region_values(self, region: DefinedName) -> list[Value]:
        return [
            self.cell_value((region.sheet, region.row, column))
            for column in range(region.first_column, region.last_column + 1)
        ]


def evaluate_workbook(wb: WorkbookModel) -> ValueCube:
    """Evaluate every defined-name region of the workbook.

    Raises:
        WorkbookInvariantError: On undefined names, text operands or cycles
    """
    evaluator = _WorkbookEvaluator(wb)
    cube = ValueCube()
    for region in wb.defined_names:
        for period, value in enumerate(evaluator.region_values(region)):
            cube[InstanceKey(region.variable, region.category_path, period)] = value
    return cube
