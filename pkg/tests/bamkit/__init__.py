"""Tests for the bamkit package."""
