# ============================================================================
#  signbase
#  LICENSE: MIT
# ============================================================================
"""Main CLI entry point for signbase."""

import click

from signbase import __version__
from signbase.cli.console import console, set_log_level, show_banner
from signbase.config.loader import load_engine_config


@click.group(invoke_without_command=True)
@click.option(
    "--config",
    "-c",
    type=click.Path(exists=True, dir_okay=False),
    help="Path to an engine configuration YAML file",
)
@click.option(
    "--verbose",
    "-v",
    is_flag=True,
    help="Print passing outcomes and debug messages too",
)
@click.pass_context
def main(ctx: click.Context, config: str | None, verbose: bool) -> None:
    """signbase - exponents and local bases of primitive nonpowerful signed digraphs

    \b
    Quick start:
      signbase analyze graph.txt                 # Full report for an edge list
      signbase family --name dki --n 7 --k 2 --i 1 --preset same-sign
      signbase verify --suite exponents --n 6..10
      signbase families                          # Named families and ranges
    """
    try:
        engine_config = load_engine_config(config)
    except (FileNotFoundError, ValueError) as e:
        raise click.ClickException(f"Invalid engine configuration: {e}") from e

    set_log_level("DEBUG" if verbose else engine_config.log_level)

    ctx.ensure_object(dict)
    ctx.obj["config"] = config
    ctx.obj["engine_config"] = engine_config
    ctx.obj["verbose"] = verbose
    ctx.obj["console"] = console

    if ctx.invoked_subcommand is None:
        show_banner(__version__)
        click.echo(ctx.get_help())


# Import and register subcommands (must be after main() definition)
from signbase.cli.commands.analyze import analyze  # noqa: E402
from signbase.cli.commands.families import families  # noqa: E402
from signbase.cli.commands.family import family  # noqa: E402
from signbase.cli.commands.profiles import profiles  # noqa: E402
from signbase.cli.commands.verify import verify  # noqa: E402
from signbase.cli.commands.version import version  # noqa: E402

main.add_command(version)
main.add_command(analyze)
main.add_command(family)
main.add_command(families)
main.add_command(verify)
main.add_command(profiles)


if __name__ == "__main__":
    main()
