# ============================================================================
#  signbase
#  LICENSE: MIT
# ============================================================================
"""Command-line interface."""
