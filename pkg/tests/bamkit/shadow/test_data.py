"""Tests for shadow/data.py."""

import pytest

from bamkit.ports.exceptions import (
    DataSchemaError,
    DuplicateEntryError,
    MalformedNumberError,
    PeriodOutOfRangeError,
    UnknownCategoryPathError,
    UnknownVariableError,
    VariableNotInputError,
)
from bamkit.shadow import (
    UNDEFINED,
    InstanceKey,
    dump_cube,
    evaluate,
    load_inputs,
    parse_value,
    read_observations,
)
from bamkit.shadow.data import parse_category, resolve_period

HEADER = "variable,category,period,value\n"
UK = ("European Union", "United Kingdom")


class TestLoadInputs:
    """Tests for load_inputs."""

    def test_single_row(self, sample_model):
        cube = load_inputs(
            HEADER + "Turnover,European Union;United Kingdom,2005,51514\n", sample_model
        )

        assert cube.items() == [(InstanceKey("Turnover", UK, 0), 51514.0)]

    def test_fixture(self, uk_inputs):
        assert len(uk_inputs) == 14 * 3
        assert uk_inputs.get("Cash Flow from Operations", UK, 2) == 8265

    def test_header_only(self, sample_model):
        assert len(load_inputs(HEADER, sample_model)) == 0

    def test_period_index_and_label(self, sample_model):
        cube = load_inputs(
            HEADER
            + "Turnover,European Union;United Kingdom,1,10\n"
            + "Taxes,European Union;United Kingdom,2007,20\n",
            sample_model,
        )

        assert cube.get("Turnover", UK, 1) == 10
        assert cube.get("Taxes", UK, 2) == 20

    def test_names_and_paths_are_matched_loosely(self, sample_model):
        cube = load_inputs(
            HEADER + "cost  of SALES, european union ;United   Kingdom,2005,5\n",
            sample_model,
        )

        assert cube.get("Cost of Sales", UK, 0) == 5

    def test_quoted_thousands(self, sample_model):
        cube = load_inputs(
            HEADER + 'Turnover,European Union;United Kingdom,2005,"51,514"\n',
            sample_model,
        )

        assert cube.get("Turnover", UK, 0) == 51514

    def test_byte_order_mark(self, sample_model):
        cube = load_inputs(
            "\ufeff" + HEADER + "Cash,European Union;France,2005,7\n", sample_model
        )

        assert cube.get("Cash", ("European Union", "France"), 0) == 7

    def test_calculated_variable(self, sample_model):
        with pytest.raises(VariableNotInputError, match="line 2"):
            load_inputs(
                HEADER + "Gross Profit,European Union;United Kingdom,2005,1\n",
                sample_model,
            )

    def test_unknown_variable(self, sample_model):
        with pytest.raises(UnknownVariableError, match="Revenue") as exc_info:
            load_inputs(HEADER + "Revenue,European Union;France,2005,1\n", sample_model)

        assert exc_info.value.exit_code == 2

    @pytest.mark.parametrize(
        "category", ["European Union", "European Union;All Markets", "Europe;France", ""]
    )
    def test_not_a_leaf_path(self, sample_model, category):
        with pytest.raises(UnknownCategoryPathError):
            load_inputs(HEADER + f"Cash,{category},2005,1\n", sample_model)

    @pytest.mark.parametrize("period", ["2010", "3", "-1", "Q1 2005"])
    def test_period_out_of_range(self, sample_model, period):
        with pytest.raises(PeriodOutOfRangeError):
            load_inputs(HEADER + f"Cash,European Union;France,{period},1\n", sample_model)

    def test_malformed_number(self, sample_model):
        with pytest.raises(MalformedNumberError, match="line 3"):
            load_inputs(
                HEADER
                + "Cash,European Union;France,2005,1\n"
                + "Cash,European Union;France,2006,1.2.3\n",
                sample_model,
            )

    def test_duplicate_entry(self, sample_model):
        with pytest.raises(DuplicateEntryError):
            load_inputs(
                HEADER
                + "Cash,European Union;France,2005,1\n"
                + "cash,European Union;France,0,2\n",
                sample_model,
            )

    def test_wrong_header(self, sample_model):
        with pytest.raises(DataSchemaError, match="line 1"):
            load_inputs("name,category,period,value\n", sample_model)

    def test_wrong_field_count(self, sample_model):
        with pytest.raises(DataSchemaError, match="Expected 4 fields"):
            load_inputs(HEADER + "Cash,European Union;France,2005\n", sample_model)


class TestReadObservations:
    """Tests for read_observations."""

    def test_calculated_and_rollup_rows(self, sample_model):
        cube = read_observations(
            HEADER
            + "Gross Profit,European Union;All Markets,2005,100\n"
            + "Current Ratio,European Union;France,2005,\n",
            sample_model,
        )

        assert cube.get("Gross Profit", ("European Union", "All Markets"), 0) == 100
        assert cube.get("Current Ratio", ("European Union", "France"), 0) is UNDEFINED


class TestDumpCube:
    """Tests for dump_cube."""

    def test_header_and_order(self, sample_model, uk_inputs):
        lines = dump_cube(sample_model, evaluate(sample_model, uk_inputs)).splitlines()

        assert lines[0] == "variable,category,period,value"
        assert lines[1] == "Gross Profit,North America;Canada,2005,0"
        assert "Gross Profit,European Union;United Kingdom,2005,24419" in lines
        assert "Gross Profit,All Markets,2007,26922" in lines
        assert len(lines) == 1 + 23 * 7 * 3

    def test_undefined_is_an_empty_value(self, sample_model, uk_inputs):
        text = dump_cube(sample_model, evaluate(sample_model, uk_inputs))

        assert "Current Ratio,North America;Canada,2005,\n" in text

    def test_dump_reads_back(self, sample_model, uk_inputs):
        cube = evaluate(sample_model, uk_inputs)

        assert read_observations(dump_cube(sample_model, cube), sample_model).values == cube.values


class TestValueParsing:
    """Tests for the small parsing helpers."""

    @pytest.mark.parametrize(
        ("text", "value"),
        [("51514", 51514.0), ("-1,234.5", -1234.5), ("+ 3", 3.0), (" 0.25 ", 0.25)],
    )
    def test_parse_value(self, text, value):
        assert parse_value(text) == value

    @pytest.mark.parametrize("text", ["", "abc", "1e5", "--3"])
    def test_parse_value_rejects(self, text):
        with pytest.raises(MalformedNumberError):
            parse_value(text)

    def test_parse_category(self):
        assert parse_category("European  Union ; France") == ("European Union", "France")
        assert parse_category("  ") == ()

    def test_resolve_period(self, sample_grid):
        assert resolve_period("2006", sample_grid) == 1
        assert resolve_period("2", sample_grid) == 2
