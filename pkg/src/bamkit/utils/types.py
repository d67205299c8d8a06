"""Type aliases for model concepts used across the bamkit packages."""

from typing import TypeAlias

# Display spelling of a variable (first-seen spelling, whitespace collapsed)
VariableName: TypeAlias = str
# Case-folded, whitespace-collapsed lookup key for a name
NameKey: TypeAlias = str
HierarchyTitle: TypeAlias = str
# Node names from a hierarchy root down to a node, concatenated across nested hierarchies
CategoryPath: TypeAlias = tuple[str, ...]
# Ordered hierarchy titles of a report breakdown; empty for no breakdown
Breakdown: TypeAlias = tuple[HierarchyTitle, ...]
PeriodIndex: TypeAlias = int
ReportName: TypeAlias = str
DefinedNameText: TypeAlias = str
