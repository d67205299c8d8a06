"""Tests for config.py module."""

import pytest

from bamkit.ports import StyleConfigError
from bamkit.utils.config import (
    STYLE_ENV_VAR,
    Backend,
    RunConfig,
    StyleConfig,
    infer_backend,
    parse_style_config,
    resolve_style_path,
)


class TestParseStyleConfig:
    """Tests for parse_style_config."""

    def test_empty_object_is_the_default(self):
        assert parse_style_config("{}") == StyleConfig()

    def test_all_keys(self):
        style = parse_style_config(
            '{"input_fill": "#c6efce", "locked_calculated": false,'
            ' "period_order": "left_to_right", "number_format": "0.0",'
            ' "ratio_number_format": "0.000", "assumptions_sheet_name": "Inputs",'
            ' "label_column_width": 40, "header_bold": false}'
        )

        assert style.input_fill == "C6EFCE"
        assert not style.locked_calculated
        assert style.assumptions_sheet_name == "Inputs"
        assert style.label_column_width == 40

    def test_not_json(self):
        with pytest.raises(StyleConfigError, match="not valid JSON"):
            parse_style_config("input_fill = yellow")

    def test_unknown_keys(self):
        with pytest.raises(StyleConfigError, match="Unknown style keys: colour, font"):
            parse_style_config('{"font": "Arial", "colour": "red"}')

    @pytest.mark.parametrize(
        "text",
        [
            '{"locked_calculated": "yes"}',
            '{"label_column_width": true}',
            '{"number_format": 3}',
        ],
    )
    def test_wrong_types(self, text):
        with pytest.raises(StyleConfigError, match="wrong type"):
            parse_style_config(text)

    @pytest.mark.parametrize(
        ("text", "message"),
        [
            ('{"input_fill": "yellow"}', "6-hex-digit"),
            ('{"period_order": "right_to_left"}', "only left_to_right"),
            ('{"assumptions_sheet_name": "  "}', "must not be empty"),
            ('{"label_column_width": 0}', "must be positive"),
        ],
    )
    def test_invalid_values(self, text, message):
        with pytest.raises(StyleConfigError, match=message) as exc_info:
            parse_style_config(text)

        assert exc_info.value.exit_code == 2


class TestResolveStylePath:
    """Tests for resolve_style_path."""

    def test_explicit_path_wins(self, monkeypatch):
        monkeypatch.setenv(STYLE_ENV_VAR, "env.json")

        assert resolve_style_path("cli.json") == "cli.json"

    def test_environment(self, monkeypatch):
        monkeypatch.setenv(STYLE_ENV_VAR, "env.json")

        assert resolve_style_path(None) == "env.json"

    def test_neither(self, monkeypatch):
        monkeypatch.delenv(STYLE_ENV_VAR, raising=False)

        assert resolve_style_path(None) is None


class TestInferBackend:
    """Tests for infer_backend."""

    @pytest.mark.parametrize(
        ("path", "backend"),
        [
            ("model.xlsx", Backend.XLSX),
            ("MODEL.XLSX", Backend.XLSX),
            ("model.bamwb", Backend.PORTABLE),
            ("values.csv", Backend.CSV_VALUES),
            ("model.out", Backend.XLSX),
        ],
    )
    def test_extensions(self, path, backend):
        assert infer_backend(path) is backend


def test_run_config_input_paths():
    config = RunConfig(
        "verify",
        "model.bam",
        data_path="inputs.csv",
        output_path="out.xlsx",
        observed_path="observed.csv",
    )

    assert config.input_paths() == ["model.bam", "inputs.csv", "observed.csv"]
