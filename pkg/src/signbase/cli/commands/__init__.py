# ============================================================================
#  signbase
#  LICENSE: MIT
# ============================================================================
"""CLI subcommands."""
