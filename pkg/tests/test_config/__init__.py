"""Configuration tests for signbase."""
