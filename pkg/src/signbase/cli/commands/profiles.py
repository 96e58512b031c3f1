# ============================================================================
#  signbase
#  LICENSE: MIT
# ============================================================================
"""Profiles listing command."""

import click

from signbase.cli.console import console, create_results_table, print_info
from signbase.config.loader import list_available_profiles


@click.command()
def profiles() -> None:
    """List available verification profiles."""
    available = list_available_profiles()

    if not available:
        print_info("No profiles found.")
        return

    table = create_results_table(title="Verification Profiles")
    table.add_column("Name", style="bold cyan", no_wrap=True)
    table.add_column("Filename", style="dim")
    table.add_column("Description", style="white")
    table.add_column("Location", style="dim")
    table.add_column("Suites", style="green")

    for profile in available:
        description = profile["description"]
        if len(description) > 60:
            description = description[:60] + "..."
        table.add_row(
            profile["name"],
            profile["filename"],
            description,
            profile["location"],
            ", ".join(profile["suites"]) or "-",
        )

    console.print()
    console.print(table)
    console.print()
    console.print("[dim]Use 'signbase verify --profile <filename>' to run a profile[/dim]")
    console.print()
