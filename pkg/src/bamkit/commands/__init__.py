"""Command implementations for bamkit."""
