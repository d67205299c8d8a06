"""Syntax tree of a Business Algebra Model document.

These are immutable dataclasses. Source line numbers are kept for diagnostics
but excluded from equality, so two documents compare equal when they are
structurally identical.
"""

from dataclasses import dataclass, field
from typing import Literal, TypeAlias

from bamkit.utils.types import HierarchyTitle, NameKey, ReportName, VariableName

TimeUnit = Literal["year", "quarter", "month"]

_MONTHS = (
    "Jan",
    "Feb",
    "Mar",
    "Apr",
    "May",
    "Jun",
    "Jul",
    "Aug",
    "Sep",
    "Oct",
    "Nov",
    "Dec",
)


def name_key(name: str) -> NameKey:
    """Normalize a name for comparison: collapse whitespace, ignore case."""
    return " ".join(name.split()).casefold()


@dataclass(frozen=True)
class TimeFrame:
    """Period length, period count and calendar year of the first period."""

    unit: TimeUnit
    period_count: int
    start_year: int

    def period_label(self, index: int) -> str:
        """Display label of a period: "2005", "Q1 2005" or "Jan 2005"."""
        if self.unit == "year":
            return str(self.start_year + index)
        if self.unit == "quarter":
            return f"Q{index % 4 + 1} {self.start_year + index // 4}"
        return f"{_MONTHS[index % 12]} {self.start_year + index // 12}"

    def period_labels(self) -> list[str]:
        return [self.period_label(i) for i in range(self.period_count)]


@dataclass(frozen=True)
class CategoryNode:
    """A node of a category outline; a leaf iff it has no children."""

    name: str
    depth: int
    children: tuple["CategoryNode", ...] = ()

    @property
    def is_leaf(self) -> bool:
        return not self.children

    def leaf_paths(self, prefix: tuple[str, ...] = ()) -> list[tuple[str, ...]]:
        """Paths from this node down to each of its leaves, in outline order."""
        path = (*prefix, self.name)
        if self.is_leaf:
            return [path]
        return [leaf for child in self.children for leaf in child.leaf_paths(path)]


@dataclass(frozen=True)
class CategoryHierarchy:
    """A titled category outline such as Markets or Products."""

    title: HierarchyTitle
    roots: tuple[CategoryNode, ...]

    def leaf_paths(self) -> list[tuple[str, ...]]:
        return [leaf for root in self.roots for leaf in root.leaf_paths()]

    def iter_nodes(self) -> list[CategoryNode]:
        """All nodes in depth-first declaration order."""
        nodes: list[CategoryNode] = []

        def visit(node: CategoryNode) -> None:
            nodes.append(node)
            for child in node.children:
                visit(child)

        for root in self.roots:
            visit(root)
        return nodes

    @property
    def grand_label(self) -> str:
        return f"All {self.title}"


@dataclass(frozen=True)
class VariableRef:
    """Reference to a variable by its (whitespace-collapsed) name."""

    name: VariableName

    @property
    def key(self) -> NameKey:
        return name_key(self.name)


@dataclass(frozen=True)
class NumberLiteral:
    value: float


@dataclass(frozen=True)
class BinaryOp:
    """Arithmetic on two operands; op is one of + - * /."""

    op: Literal["+", "-", "*", "/"]
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Paren:
    child: "Expr"


Expr: TypeAlias = VariableRef | NumberLiteral | BinaryOp | Paren


def iter_refs(expr: Expr) -> list[VariableRef]:
    """Variable references of an expression, left to right, with repeats."""
    match expr:
        case VariableRef():
            return [expr]
        case NumberLiteral():
            return []
        case BinaryOp(left=left, right=right):
            return iter_refs(left) + iter_refs(right)
        case Paren(child=child):
            return iter_refs(child)
    raise TypeError(f"Not an expression node: {expr!r}")


def normalized(expr: Expr) -> Expr:
    """Copy of an expression with every name replaced by its comparison key."""
    match expr:
        case VariableRef():
            return VariableRef(expr.key)
        case NumberLiteral():
            return expr
        case BinaryOp(op=op, left=left, right=right):
            return BinaryOp(op, normalized(left), normalized(right))
        case Paren(child=child):
            return Paren(normalized(child))
    raise TypeError(f"Not an expression node: {expr!r}")


def strip_parens(expr: Expr) -> Expr:
    while isinstance(expr, Paren):
        expr = expr.child
    return expr


@dataclass(frozen=True)
class FormulaDef:
    """One formula line: target variable and its defining expression."""

    target: VariableName
    body: Expr
    source_line: int = field(default=0, compare=False)

    @property
    def key(self) -> NameKey:
        return name_key(self.target)


@dataclass(frozen=True)
class ReportDef:
    name: ReportName
    breakdown: tuple[HierarchyTitle, ...] = ()
    formulas: tuple[FormulaDef, ...] = ()
    source_line: int = field(default=0, compare=False)
    breakdown_line: int = field(default=0, compare=False)


@dataclass(frozen=True)
class ModelDocument:
    """Syntactic result of parsing a Business Algebra Model."""

    time_frame: TimeFrame
    hierarchies: tuple[CategoryHierarchy, ...] = ()
    reports: tuple[ReportDef, ...] = ()

    def hierarchy(self, title: str) -> CategoryHierarchy | None:
        key = name_key(title)
        for hierarchy in self.hierarchies:
            if name_key(hierarchy.title) == key:
                return hierarchy
        return None
