"""Dependency trees of a variable's formula network."""

from dataclasses import dataclass, field

from bamkit.model.semantic import SemanticModel, VariableKind
from bamkit.utils.types import NameKey, VariableName


@dataclass
class DependencyNode:
    """A variable in a dependency tree.

    A calculated variable already expanded earlier in the tree appears again
    with ``repeated`` set and no children.
    """

    name: VariableName
    kind: VariableKind
    children: list["DependencyNode"] = field(default_factory=list)
    repeated: bool = False

    def leaves(self) -> set[VariableName]:
        """Names of the input variables reachable from this node."""
        if self.kind == "input":
            return {self.name}
        found: set[VariableName] = set()
        for child in self.children:
            found |= child.leaves()
        return found


def dependency_tree(model: SemanticModel, name: str) -> DependencyNode:
    """Build the tree of variables the named variable depends on.

    Raises:
        UnknownVariableError: If the model has no such variable
    """
    root = model.variable(name, exit_code=1)
    expanded: set[NameKey] = set()

    def build(key: NameKey) -> DependencyNode:
        info = model.variables[key]
        if info.is_input:
            return DependencyNode(info.name, info.kind)
        if key in expanded:
            return DependencyNode(info.name, info.kind, repeated=True)
        expanded.add(key)
        return DependencyNode(
            info.name,
            info.kind,
            children=[build(dep) for dep in model.graph.dependencies(key)],
        )

    return build(root.key)


def render_tree(node: DependencyNode) -> list[str]:
    """Text lines of the tree, drawn with box connectors."""
    output: list[str] = []

    def render(current: DependencyNode, indent: str, is_last: bool) -> None:
        connector = "└── " if indent and is_last else "├── " if indent else ""
        label = f"{current.name} (see above)" if current.repeated else current.name
        output.append(f"{indent}{connector}{label}")

        child_indent = indent + ("    " if is_last else "│   ")
        for i, child in enumerate(current.children):
            render(child, child_indent, i == len(current.children) - 1)

    render(node, "", True)
    return output
