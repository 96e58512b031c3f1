"""Engine tests for signbase."""
