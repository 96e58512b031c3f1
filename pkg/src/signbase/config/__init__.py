# ============================================================================
#  signbase
#  LICENSE: MIT
# ============================================================================
"""Configuration module for signbase."""

from signbase.config.loader import (
    get_bundled_profiles_path,
    get_user_profiles_path,
    list_available_profiles,
    load_engine_config,
    load_profile,
)
from signbase.config.models import EngineConfig, SuiteName, VerifyProfile

__all__ = [
    "EngineConfig",
    "SuiteName",
    "VerifyProfile",
    "load_engine_config",
    "load_profile",
    "list_available_profiles",
    "get_bundled_profiles_path",
    "get_user_profiles_path",
]
