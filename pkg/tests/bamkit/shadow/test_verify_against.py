"""Tests for shadow/verify.py."""

import pytest

from bamkit.ports.exceptions import DataError
from bamkit.shadow import dump_cube, evaluate, verify_against
from bamkit.utils.config import RollupMode

HEADER = "variable,category,period,value\n"


class TestVerifyAgainst:
    """Tests for control-around verification."""

    def test_self_comparison_passes(self, sample_model, uk_inputs):
        observed = dump_cube(sample_model, evaluate(sample_model, uk_inputs))

        report = verify_against(sample_model, uk_inputs, observed)

        assert report.passed
        assert report.compared == 23 * 7 * 3
        assert report.missing == 0

    def test_injected_fault(self, sample_model, uk_inputs):
        observed = HEADER + "Gross Profit,European Union;United Kingdom,2005,24424\n"

        report = verify_against(sample_model, uk_inputs, observed, tolerance=0)

        assert len(report.mismatches) == 1
        mismatch = report.mismatches[0]
        assert mismatch.variable == "Gross Profit"
        assert mismatch.category == ("European Union", "United Kingdom")
        assert mismatch.period == "2005"
        assert mismatch.expected == 24419
        assert mismatch.observed == 24424
        assert mismatch.difference == 5

    def test_displayed_figures_within_two(self, sample_model, uk_inputs, observed_text):
        assert verify_against(sample_model, uk_inputs, observed_text, tolerance=2).passed

    def test_displayed_figures_exact(self, sample_model, uk_inputs, observed_text):
        report = verify_against(sample_model, uk_inputs, observed_text, tolerance=0)

        assert {(m.variable, m.period) for m in report.mismatches} == {
            ("Selling and Administrative Expenses", "2006"),
            ("Operating Profit", "2006"),
            ("Profit Before Taxes", "2006"),
            ("Profit", "2006"),
        }
        assert max(m.difference for m in report.mismatches) == 2
        assert report.compared == 18
        assert report.missing == 23 * 7 * 3 - 18

    def test_tolerance_one_leaves_profit(self, sample_model, uk_inputs, observed_text):
        report = verify_against(sample_model, uk_inputs, observed_text, tolerance=1)

        assert [(m.variable, m.period) for m in report.mismatches] == [("Profit", "2006")]

    def test_undefined_on_one_side(self, sample_model, uk_inputs):
        observed = HEADER + "Current Ratio,North America;Canada,2005,1\n"

        report = verify_against(sample_model, uk_inputs, observed)

        assert report.mismatches[0].expected is None
        assert report.mismatches[0].observed == 1
        assert report.mismatches[0].difference is None

    def test_undefined_on_both_sides(self, sample_model, uk_inputs):
        observed = HEADER + "Current Ratio,North America;Canada,2005,\n"

        assert verify_against(sample_model, uk_inputs, observed).passed

    def test_rollup_mode_is_applied(self, sample_model, uk_inputs):
        observed = HEADER + "Current Ratio,European Union;All Markets,2005,\n"

        assert verify_against(sample_model, uk_inputs, observed, rollup=RollupMode.SUM).passed
        assert not verify_against(sample_model, uk_inputs, observed).passed

    def test_negative_tolerance(self, sample_model, uk_inputs):
        with pytest.raises(DataError, match="must not be negative"):
            verify_against(sample_model, uk_inputs, HEADER, tolerance=-1)

    def test_schema_errors_are_raised(self, sample_model, uk_inputs):
        with pytest.raises(DataError, match="line 2"):
            verify_against(sample_model, uk_inputs, HEADER + "Profit,Nowhere,2005,1\n")

    def test_calculated_variables_are_allowed(self, sample_model, uk_inputs):
        observed = HEADER + "Profit,All Markets,0,2969\n"

        assert verify_against(sample_model, uk_inputs, observed).passed
