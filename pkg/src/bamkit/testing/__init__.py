"""Testing utilities for bamkit - fakes and property-test generators."""

from bamkit.testing.fakes import FakeFilesystem, FakeUI
from bamkit.testing.fuzz import random_inputs, random_model

__all__ = ["FakeFilesystem", "FakeUI", "random_inputs", "random_model"]
