"""Tests for signbase."""
