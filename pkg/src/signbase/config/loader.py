# ============================================================================
#  signbase
#  LICENSE: MIT
# ============================================================================
"""YAML configuration loader with validation."""

import os
from pathlib import Path
from typing import Any

import yaml

from signbase.config.defaults import THREADS_ENV_VAR
from signbase.config.models import EngineConfig, VerifyProfile


def get_bundled_profiles_path() -> Path:
    """Get path to bundled verification profiles."""
    return Path(__file__).parent / "profiles"


def get_user_profiles_path() -> Path:
    """Get path to user verification profiles (in home directory)."""
    return Path.home() / ".signbase" / "profiles"


def _read_yaml(path: Path) -> dict[str, Any]:
    try:
        with open(path, encoding="utf-8") as f:
            data = yaml.safe_load(f)
    except yaml.YAMLError as e:
        raise ValueError(f"Invalid YAML syntax in {path}: {e}") from e

    if not data:
        raise ValueError(f"Empty configuration file: {path}")
    if not isinstance(data, dict):
        raise ValueError(f"Configuration file must contain a mapping: {path}")
    return data


def load_profile(name_or_path: str | Path) -> VerifyProfile:
    """Load and validate a verification profile.

    Args:
        name_or_path: Either a profile name (e.g., 'quick') or path to YAML file

    Returns:
        Validated VerifyProfile instance

    Raises:
        FileNotFoundError: If profile file not found
        ValueError: If YAML parsing or validation fails
    """
    path = Path(name_or_path)

    if not path.suffix:
        bundled_file = get_bundled_profiles_path() / f"{name_or_path}.yaml"
        user_file = get_user_profiles_path() / f"{name_or_path}.yaml"
        if bundled_file.exists():
            path = bundled_file
        elif user_file.exists():
            path = user_file
        else:
            raise FileNotFoundError(
                f"Profile '{name_or_path}' not found in bundled or user profiles. "
                f"Available bundled profiles: {list_profile_names()}"
            )

    if not path.exists():
        raise FileNotFoundError(f"Profile file not found: {path}")

    data = _read_yaml(path)
    try:
        return VerifyProfile(**data)
    except Exception as e:
        raise ValueError(f"Profile validation failed for {path}: {e}") from e


def load_engine_config(path: str | Path | None = None) -> EngineConfig:
    """Load engine configuration, applying the thread override from the environment.

    Args:
        path: Optional YAML file; defaults are used when omitted

    Returns:
        Validated EngineConfig instance
    """
    data: dict[str, Any] = {}
    if path is not None:
        config_path = Path(path)
        if not config_path.exists():
            raise FileNotFoundError(f"Engine config not found: {config_path}")
        data = _read_yaml(config_path)

    override = os.environ.get(THREADS_ENV_VAR)
    if override is not None:
        try:
            data["threads"] = int(override)
        except ValueError as e:
            raise ValueError(f"{THREADS_ENV_VAR} must be an integer, got {override!r}") from e

    try:
        return EngineConfig(**data)
    except Exception as e:
        raise ValueError(f"Engine configuration validation failed: {e}") from e


def list_profile_names() -> list[str]:
    """List names of all bundled profiles."""
    bundled = get_bundled_profiles_path()
    if not bundled.exists():
        return []
    return sorted(p.stem for p in bundled.glob("*.yaml"))


def list_available_profiles() -> list[dict[str, Any]]:
    """List all available profiles (bundled + user) with details."""
    profiles = []
    for location, directory in (
        ("bundled", get_bundled_profiles_path()),
        ("user", get_user_profiles_path()),
    ):
        if not directory.exists():
            continue
        for yaml_file in sorted(directory.glob("*.yaml")):
            try:
                profile = load_profile(yaml_file)
            except (ValueError, FileNotFoundError):
                continue
            profiles.append({
                "name": profile.name,
                "filename": yaml_file.stem,
                "description": profile.description,
                "location": location,
                "path": str(yaml_file),
                "suites": [s.value for s in profile.suites],
            })
    return profiles
