"""Tests for bamkit."""
