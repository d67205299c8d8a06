"""Utility modules for bamkit."""
