"""Tests for check.py command module using fakes."""

import pytest

from bamkit.commands.check import check_core
from bamkit.ports import BamIOError, ModelError
from bamkit.testing import FakeFilesystem, FakeUI
from bamkit.utils.config import RunConfig


class TestCheckCore:
    """Tests for check_core function."""

    def test_sample_summary(self, sample_fs):
        """Reports hierarchy, report and variable counts."""
        ui = FakeUI()

        result = check_core(sample_fs, ui, RunConfig("check", "model.bam"))

        assert result.summary == "2 hierarchies, 2 reports, 14 inputs, 9 calculated"
        assert ui.results == [result.summary]
        assert ui.muted_messages == ["483 instances over 3 periods"]

    def test_variables_listed(self, sample_fs):
        """Lists inputs and calculated variables by display name."""
        result = check_core(sample_fs, FakeUI(), RunConfig("check", "model.bam"))

        assert "Turnover" in result.inputs
        assert "Gross Profit" in result.calculated

    def test_missing_file(self):
        """Raises BamIOError when the model file does not exist."""
        with pytest.raises(BamIOError, match="File not found: 'absent.bam'") as exc_info:
            check_core(FakeFilesystem(), FakeUI(), RunConfig("check", "absent.bam"))

        assert exc_info.value.exit_code == 4

    def test_parse_error_has_line(self):
        """Surfaces the first parse error with its line number."""
        fs = FakeFilesystem(files={"bad.bam": "Each period is one year.\n"})

        with pytest.raises(ModelError) as exc_info:
            check_core(fs, FakeUI(), RunConfig("check", "bad.bam"))

        assert exc_info.value.exit_code == 1

    def test_cycle(self):
        """Cyclic formulas are a model error."""
        fs = FakeFilesystem(
            files={
                "cycle.bam": "Each period is one year.\nThe number of periods is 1.\n"
                "The first period starts in 2020.\nReport: R\nA = B + 1\nB = A - 1\n"
            }
        )

        with pytest.raises(ModelError, match="Cyclic dependency"):
            check_core(fs, FakeUI(), RunConfig("check", "cycle.bam"))
