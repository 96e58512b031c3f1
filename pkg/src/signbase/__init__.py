# ============================================================================
#  signbase
#  Exponents and local bases of primitive nonpowerful signed digraphs.
#
#  LICENSE: MIT
# ============================================================================
"""signbase - Exponents and local bases of primitive nonpowerful signed digraphs."""

__version__ = "1.0.0"
__author__ = "signbase developers"
__license__ = "MIT"

SCHEMA_VERSION = "signbase/1"
