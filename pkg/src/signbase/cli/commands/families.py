# ============================================================================
#  signbase
#  LICENSE: MIT
# ============================================================================
"""Families listing command."""

import click
from rich.markup import escape

from signbase.cli.console import console, create_results_table
from signbase.families import FAMILY_RANGES, PRESET_FAMILIES, Family, Preset

_GENERIC_PRESETS = (Preset.SAME_SIGN, Preset.NONPOWERFUL)


@click.command()
def families() -> None:
    """List the digraph families, their parameter ranges and signed variants."""
    table = create_results_table(title="Digraph Families")
    table.add_column("Family", style="bold cyan", no_wrap=True)
    table.add_column("Range", style="white")
    table.add_column("Presets", style="green")

    for family in Family:
        named = [p.value for p, owner in PRESET_FAMILIES.items() if owner == family]
        generic = [p.value for p in _GENERIC_PRESETS]
        table.add_row(family.value, escape(FAMILY_RANGES[family]), ", ".join(named + generic))

    console.print()
    console.print(table)
    console.print()
    console.print("[dim]Use 'signbase family --name <family> --n <n> --preset <preset>' to build one[/dim]")
    console.print()
