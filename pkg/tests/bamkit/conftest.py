"""Shared fixtures: the sample model and its United Kingdom figures."""

from pathlib import Path

import pytest

from bamkit.language import parse_model
from bamkit.model import analyze, expand
from bamkit.shadow import load_inputs
from bamkit.testing import FakeFilesystem

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


def fixture_text(name: str) -> str:
    return (FIXTURES / name).read_text(encoding="utf-8")


@pytest.fixture
def sample_text():
    """Text of the two-report sample model."""
    return fixture_text("sample.bam")


@pytest.fixture
def sample_model(sample_text):
    return analyze(parse_model(sample_text))


@pytest.fixture
def sample_grid(sample_model):
    return expand(sample_model)


@pytest.fixture
def uk_inputs_text():
    return fixture_text("uk_inputs.csv")


@pytest.fixture
def observed_text():
    return fixture_text("uk_pnl_observed.csv")


@pytest.fixture
def uk_inputs(sample_model, sample_grid, uk_inputs_text):
    return load_inputs(uk_inputs_text, sample_model, sample_grid)


@pytest.fixture
def sample_fs(sample_text, uk_inputs_text, observed_text):
    """In-memory filesystem holding the sample model and both CSV documents."""
    return FakeFilesystem(
        files={
            "model.bam": sample_text,
            "inputs.csv": uk_inputs_text,
            "observed.csv": observed_text,
        }
    )
