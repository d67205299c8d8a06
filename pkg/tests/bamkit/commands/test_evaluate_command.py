"""Tests for evaluate.py command module using fakes."""

import pytest

from bamkit.commands.evaluate import evaluate_core
from bamkit.model import expand
from bamkit.ports import DataError, EvaluationError
from bamkit.shadow import dump_cube, evaluate, load_inputs
from bamkit.testing import FakeUI
from bamkit.utils.config import EvalFormat, RunConfig


class TestEvaluateCore:
    """Tests for evaluate_core function."""

    def test_prints_csv(self, sample_fs):
        """Without an output path the cube goes to the result stream."""
        ui = FakeUI()

        result = evaluate_core(
            sample_fs, ui, RunConfig("eval", "model.bam", data_path="inputs.csv")
        )

        lines = ui.output.splitlines()
        assert lines[0] == "variable,category,period,value"
        assert "Gross Profit,European Union;United Kingdom,2005,24419" in lines
        assert result.instances == 483
        assert result.defaulted == 126

    def test_csv_format_matches_dump(self, sample_fs, sample_model):
        """The csv format writes the same document as dump_cube."""
        ui = FakeUI()

        evaluate_core(
            sample_fs,
            ui,
            RunConfig(
                "eval", "model.bam", data_path="inputs.csv", eval_format=EvalFormat.CSV
            ),
        )

        grid = expand(sample_model)
        inputs = load_inputs(sample_fs.files["inputs.csv"], sample_model, grid)
        cube = evaluate(sample_model, inputs, grid=grid)
        assert ui.results == [dump_cube(sample_model, cube, grid)]

    def test_writes_file(self, sample_fs):
        """With an output path the cube is written to the file."""
        ui = FakeUI()

        evaluate_core(
            sample_fs,
            ui,
            RunConfig("eval", "model.bam", data_path="inputs.csv", output_path="out.csv"),
        )

        assert sample_fs.writes == ["out.csv"]
        assert ui.results == []
        assert ui.success_messages == ["Wrote 483 values to out.csv"]

    def test_strict(self, sample_fs):
        """Strict mode fails on the first UNDEFINED instance."""
        with pytest.raises(EvaluationError, match="UNDEFINED") as exc_info:
            evaluate_core(
                sample_fs,
                FakeUI(),
                RunConfig("eval", "model.bam", data_path="inputs.csv", strict=True),
            )

        assert exc_info.value.exit_code == 2

    def test_data_error(self, sample_fs):
        """Data for a calculated variable is rejected."""
        sample_fs.files["inputs.csv"] = (
            "variable,category,period,value\nProfit,European Union;France,2005,1\n"
        )

        with pytest.raises(DataError, match="line 2"):
            evaluate_core(
                sample_fs, FakeUI(), RunConfig("eval", "model.bam", data_path="inputs.csv")
            )
