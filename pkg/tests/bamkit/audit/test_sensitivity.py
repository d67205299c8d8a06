"""Tests for audit/sensitivity.py."""

import pytest

from bamkit.audit import perturb, sensitivity_rank
from bamkit.ports.exceptions import (
    PeriodOutOfRangeError,
    TargetNotCalculatedError,
    UndefinedBaseError,
    UnknownCategoryPathError,
    UnknownVariableError,
)
from bamkit.shadow import InstanceKey

UK = ("European Union", "United Kingdom")

UK_PROFIT_2005 = [
    ("Turnover", 515.14),
    ("Cost of Sales", -270.95),
    ("Selling and Distributions", -126.05),
    ("Administrative Expenses", -68.68),
    ("Interest", -16.46),
    ("Taxes", -3.43),
    ("Other Income", 0.12),
]


class TestPerturb:
    """Tests for perturb."""

    def test_scales_leaves(self, sample_model, sample_grid, uk_inputs):
        cube = perturb(uk_inputs, sample_grid, sample_model, "Turnover")

        assert cube.get("Turnover", UK, 0) == pytest.approx(51514 * 1.01)
        assert cube.get("Cost of Sales", UK, 0) == 27095

    def test_zero_moves_by_one(self, sample_model, sample_grid, uk_inputs):
        cube = perturb(uk_inputs, sample_grid, sample_model, "Turnover")

        assert cube.get("Turnover", ("European Union", "France"), 2) == 1

    def test_original_is_untouched(self, sample_model, sample_grid, uk_inputs):
        perturb(uk_inputs, sample_grid, sample_model, "Turnover")

        assert uk_inputs.get("Turnover", UK, 0) == 51514
        assert InstanceKey("Turnover", ("European Union", "France"), 0) not in uk_inputs.values


class TestSensitivityRank:
    """Tests for sensitivity_rank."""

    def test_uk_profit(self, sample_model, uk_inputs):
        entries = sensitivity_rank(sample_model, uk_inputs, "Profit", 0, UK)

        assert [e.variable for e in entries] == [name for name, _ in UK_PROFIT_2005]
        for entry, (_, delta) in zip(entries, UK_PROFIT_2005):
            assert entry.delta == pytest.approx(delta, abs=1e-6)
        assert [e.rank for e in entries] == list(range(1, 8))

    def test_unrelated_inputs_are_excluded(self, sample_model, uk_inputs):
        entries = sensitivity_rank(sample_model, uk_inputs, "Profit", 0, UK)

        assert "Cash" not in {e.variable for e in entries}

    def test_default_category_is_the_grand_total(self, sample_model, uk_inputs):
        entries = sensitivity_rank(sample_model, uk_inputs, "Profit")

        # zero-valued leaves of the other three markets move by one each
        assert entries[0].variable == "Turnover"
        assert entries[0].delta == pytest.approx(515.14 + 3, abs=1e-6)

    def test_linear_target_matches_the_slope(self, sample_model, uk_inputs):
        entries = {
            e.variable: e.delta
            for e in sensitivity_rank(sample_model, uk_inputs, "Gross Profit", 1, UK)
        }

        assert entries == pytest.approx({"Turnover": 540.90, "Cost of Sales": -284.50})

    def test_input_target(self, sample_model, uk_inputs):
        with pytest.raises(TargetNotCalculatedError):
            sensitivity_rank(sample_model, uk_inputs, "Turnover")

    def test_unknown_target(self, sample_model, uk_inputs):
        with pytest.raises(UnknownVariableError) as exc_info:
            sensitivity_rank(sample_model, uk_inputs, "Revenue")

        assert exc_info.value.exit_code == 1

    def test_undefined_base(self, sample_model, uk_inputs):
        with pytest.raises(UndefinedBaseError, match="UNDEFINED"):
            sensitivity_rank(
                sample_model, uk_inputs, "Current Ratio", 0, ("North America", "Canada")
            )

    def test_period_out_of_range(self, sample_model, uk_inputs):
        with pytest.raises(PeriodOutOfRangeError):
            sensitivity_rank(sample_model, uk_inputs, "Profit", 3, UK)

    def test_unknown_category(self, sample_model, uk_inputs):
        with pytest.raises(UnknownCategoryPathError):
            sensitivity_rank(sample_model, uk_inputs, "Profit", 0, ("Asia",))
