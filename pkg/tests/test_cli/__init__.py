"""CLI tests for signbase."""
