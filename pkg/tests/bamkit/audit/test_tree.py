"""Tests for audit/tree.py."""

import pytest

from bamkit.audit import dependency_tree, render_tree
from bamkit.language import parse_model
from bamkit.model import analyze
from bamkit.ports.exceptions import UnknownVariableError

PROFIT_TREE = """\
Profit
    ├── Profit Before Taxes
    │   ├── Operating Profit
    │   │   ├── Gross Profit
    │   │   │   ├── Turnover
    │   │   │   └── Cost of Sales
    │   │   └── Selling and Administrative Expenses
    │   │       ├── Selling and Distributions
    │   │       └── Administrative Expenses
    │   ├── Other Income
    │   └── Interest
    └── Taxes"""

SHARED_OPERAND = (
    "Each period is one year.\nThe number of periods is 1.\n"
    "The first period starts in 2020.\nReport: R\n"
    "A = B + C\nB = C * 2\nC = D + 1\n"
)


class TestDependencyTree:
    """Tests for dependency_tree."""

    def test_profit(self, sample_model):
        tree = dependency_tree(sample_model, "Profit")

        assert tree.kind == "calculated"
        assert [c.name for c in tree.children] == ["Profit Before Taxes", "Taxes"]

    def test_leaves(self, sample_model):
        tree = dependency_tree(sample_model, "profit")

        assert tree.leaves() == {
            "Turnover",
            "Cost of Sales",
            "Selling and Distributions",
            "Administrative Expenses",
            "Other Income",
            "Interest",
            "Taxes",
        }

    def test_leaves_agree_with_the_graph(self, sample_model):
        for info in sample_model.calculated:
            expected = {v.name for v in sample_model.input_dependencies(info.name)}

            assert dependency_tree(sample_model, info.name).leaves() == expected

    def test_input_variable(self, sample_model):
        tree = dependency_tree(sample_model, "Cash")

        assert tree.kind == "input"
        assert tree.children == []

    def test_unknown_variable(self, sample_model):
        with pytest.raises(UnknownVariableError, match="Revenue") as exc_info:
            dependency_tree(sample_model, "Revenue")

        assert exc_info.value.exit_code == 1

    def test_shared_operand_is_expanded_once(self):
        tree = dependency_tree(analyze(parse_model(SHARED_OPERAND)), "A")

        assert tree.children[1].name == "C"
        assert tree.children[1].repeated
        assert tree.children[1].children == []


class TestRenderTree:
    """Tests for render_tree."""

    def test_profit(self, sample_model):
        assert "\n".join(render_tree(dependency_tree(sample_model, "Profit"))) == PROFIT_TREE

    def test_single_node(self, sample_model):
        assert render_tree(dependency_tree(sample_model, "Turnover")) == ["Turnover"]

    def test_repeated_node(self):
        lines = render_tree(dependency_tree(analyze(parse_model(SHARED_OPERAND)), "A"))

        assert lines == [
            "A",
            "    ├── B",
            "    │   └── C",
            "    │       └── D",
            "    └── C (see above)",
        ]
