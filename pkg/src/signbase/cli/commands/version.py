# ============================================================================
#  signbase
#  LICENSE: MIT
# ============================================================================
"""Version command."""

import sys
from importlib.metadata import PackageNotFoundError
from importlib.metadata import version as get_version

import click

from signbase import SCHEMA_VERSION, __version__
from signbase.cli.console import console, create_branded_panel

_DEPENDENCIES = ("click", "rich", "pydantic", "pyyaml", "networkx", "numpy")


def _installed(package: str) -> str:
    try:
        return get_version(package)
    except PackageNotFoundError:
        return "not installed"


@click.command()
def version() -> None:
    """Show version information and dependency versions."""
    lines = [
        f"[bold]signbase[/bold] v{__version__}",
        f"[dim]report schema {SCHEMA_VERSION}[/dim]",
        "",
        "[bold]System Information:[/bold]",
        f"  {'Python:':<10}{sys.version.split()[0]}",
    ]
    lines.extend(f"  {name + ':':<10}{_installed(name)}" for name in _DEPENDENCIES)

    console.print(create_branded_panel("\n".join(lines), title="Version"))
