# ============================================================================
#  signbase
#  LICENSE: MIT
# ============================================================================
"""Entry point for python -m signbase."""

from signbase.cli.main import main

if __name__ == "__main__":
    main()
