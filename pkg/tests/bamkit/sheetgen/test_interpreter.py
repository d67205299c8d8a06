"""Tests for sheetgen/interpreter.py."""

import pytest

from bamkit.ports.exceptions import WorkbookInvariantError
from bamkit.shadow import UNDEFINED, evaluate
from bamkit.sheetgen import (
    Cell,
    DefinedName,
    LiteralCell,
    NamedFormula,
    Sheet,
    SheetRow,
    WorkbookModel,
    build_workbook,
    evaluate_workbook,
)
from bamkit.sheetgen.interpreter import tokenize_formula
from bamkit.utils.config import RollupMode

UK = ("European Union", "United Kingdom")


def one_column_workbook(*rows) -> WorkbookModel:
    """A single-period sheet whose rows are (name, cell content) pairs."""
    sheet_rows = tuple(
        SheetRow((Cell(LiteralCell(name), "label"), Cell(content, "calculated")))
        for name, content in rows
    )
    defined = tuple(
        DefinedName(name, "S", index, 1, 1, name, ()) for index, (name, _) in enumerate(rows)
    )
    return WorkbookModel(sheets=(Sheet("S", sheet_rows),), defined_names=defined, period_count=1)


class TestTokenize:
    """Tests for tokenize_formula."""

    def test_tokens(self):
        assert tokenize_formula("(Cash + Short_Term)/ Liabilities * 2.5") == [
            "(",
            "Cash",
            "+",
            "Short_Term",
            ")",
            "/",
            "Liabilities",
            "*",
            "2.5",
        ]


class TestEvaluateWorkbook:
    """Tests for evaluating workbooks directly."""

    def test_precedence_and_parentheses(self):
        wb = one_column_workbook(
            ("A", LiteralCell(2.0)),
            ("B", NamedFormula("A + A * 3 - (A - 1) / 2")),
        )

        assert evaluate_workbook(wb).get("B", (), 0) == 7.5

    def test_signed_literal(self):
        wb = one_column_workbook(("A", LiteralCell(2.0)), ("B", NamedFormula("A * -1")))

        assert evaluate_workbook(wb).get("B", (), 0) == -2

    def test_division_by_zero(self):
        wb = one_column_workbook(("A", LiteralCell(0.0)), ("B", NamedFormula("1 / A")))

        assert evaluate_workbook(wb).get("B", (), 0) is UNDEFINED

    def test_cycle(self):
        wb = one_column_workbook(("A", NamedFormula("B + 1")), ("B", NamedFormula("A")))

        with pytest.raises(WorkbookInvariantError, match="Circular"):
            evaluate_workbook(wb)

    def test_undefined_name(self):
        wb = one_column_workbook(("A", NamedFormula("Missing")))

        with pytest.raises(WorkbookInvariantError, match="Undefined name 'Missing'"):
            evaluate_workbook(wb)

    def test_text_operand(self):
        wb = one_column_workbook(("A", LiteralCell("n/a")), ("B", NamedFormula("A")))

        with pytest.raises(WorkbookInvariantError, match="used as a number"):
            evaluate_workbook(wb)

    def test_unbalanced_parentheses(self):
        wb = one_column_workbook(("A", LiteralCell(1.0)), ("B", NamedFormula("(A + 1")))

        with pytest.raises(WorkbookInvariantError):
            evaluate_workbook(wb)


class TestBackendAgreement:
    """The workbook computes what the shadow model computes."""

    @pytest.mark.parametrize("rollup", list(RollupMode))
    def test_sample(self, sample_grid, sample_model, uk_inputs, rollup):
        wb = build_workbook(sample_grid, sample_model, rollup=rollup, seed=uk_inputs)

        computed = evaluate_workbook(wb)
        expected = evaluate(sample_model, uk_inputs, grid=sample_grid, rollup=rollup)

        assert computed.values == expected.values

    def test_unseeded_workbook_reads_blank_as_zero(self, sample_grid, sample_model):
        cube = evaluate_workbook(build_workbook(sample_grid, sample_model))

        assert cube.get("Profit", UK, 0) == 0
        assert cube.get("Current Ratio", UK, 0) is UNDEFINED
