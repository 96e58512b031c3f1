# ============================================================================
#  signbase
#  LICENSE: MIT
# ============================================================================
"""Family command: generate a named family member, print it and analyze it."""

from pathlib import Path

import click
from pydantic import ValidationError

from signbase.cli.commands.analyze import emit_analysis
from signbase.engine.digraph import to_edge_list
from signbase.errors import FamilyRangeError, InfeasibleSignsError
from signbase.families.generators import Family, FamilySpec, Preset, SignPolicy, generate


def _parse_arc(text: str) -> tuple[int, int]:
    try:
        u, v = (int(part) for part in text.split(","))
    except ValueError:
        raise click.BadParameter(f"expected 'u,v', got {text!r}", param_hint="--negative") from None
    return u, v


def _parse_cycle_sign(text: str) -> tuple[int, int]:
    length, _, symbol = text.partition(":")
    if not length.isdigit() or symbol not in ("+", "-"):
        raise click.BadParameter(f"expected 'length:+' or 'length:-', got {text!r}", param_hint="--cycle-sign")
    return int(length), 1 if symbol == "+" else -1


@click.command()
@click.option(
    "--name",
    type=click.Choice([f.value for f in Family], case_sensitive=False),
    required=True,
    help="Family name",
)
@click.option("--n", "n", type=int, required=True, help="Order of the digraph")
@click.option("--k", "k", type=int, default=None, help="Parameter k (dki)")
@click.option("--i", "i", type=int, default=None, help="Parameter i (dki, f-prime)")
@click.option(
    "--preset",
    type=click.Choice([p.value for p in Preset], case_sensitive=False),
    help="Named signed variant",
)
@click.option("--negative", multiple=True, help="Negative arc 'u,v' (repeatable)")
@click.option("--cycle-sign", multiple=True, help="Cycle-length sign 'p:+' or 'p:-' (repeatable)")
@click.option("--no-analyze", is_flag=True, help="Only print the edge list")
@click.option("--exp-only", is_flag=True, help="Skip the local-base computation")
@click.option("--json", "as_json", is_flag=True, help="Emit the canonical JSON report only")
@click.option("--timing", is_flag=True, help="Include wall-clock timing in the report")
@click.option(
    "--output",
    "-o",
    type=click.Path(dir_okay=False, path_type=Path),
    help="Write the JSON report to this file",
)
@click.pass_context
def family(
    ctx: click.Context,
    name: str,
    n: int,
    k: int | None,
    i: int | None,
    preset: str | None,
    negative: tuple[str, ...],
    cycle_sign: tuple[str, ...],
    no_analyze: bool,
    exp_only: bool,
    as_json: bool,
    timing: bool,
    output: Path | None,
) -> None:
    """Generate a member of a named family.

    Signs come from at most one of --preset, --negative or --cycle-sign;
    without any of them every arc is positive.

    Examples:

        \b
        signbase family --name dki --n 7 --k 2 --i 1 --preset same-sign
        signbase family --name b1 --n 8 --preset q1
        signbase family --name d2 --n 5 --cycle-sign 4:-
    """
    chosen = [flag for flag, given in (
        ("--preset", preset), ("--negative", negative), ("--cycle-sign", cycle_sign)
    ) if given]
    if len(chosen) > 1:
        raise click.UsageError(f"{' and '.join(chosen)} cannot be combined")

    policy = SignPolicy.ALL_POSITIVE
    if preset:
        policy = SignPolicy.PRESET
    elif negative:
        policy = SignPolicy.EXPLICIT
    elif cycle_sign:
        policy = SignPolicy.SOLVE

    try:
        spec = FamilySpec(
            family=Family(name.lower()),
            n=n,
            k=k,
            i=i,
            policy=policy,
            preset=Preset(preset.lower()) if preset else None,
            negative_arcs=[_parse_arc(text) for text in negative],
            cycle_signs=dict(_parse_cycle_sign(text) for text in cycle_sign),
        )
        digraph = generate(spec)
    except ValidationError as e:
        messages = "; ".join(err["msg"] for err in e.errors())
        raise click.ClickException(messages) from e
    except (FamilyRangeError, InfeasibleSignsError, ValueError) as e:
        raise click.ClickException(str(e)) from e

    descriptor = spec.descriptor()
    if not as_json or no_analyze:
        click.echo(to_edge_list(digraph, [descriptor]), nl=False)
    if no_analyze:
        return
    emit_analysis(ctx, digraph, f"family:{descriptor}", exp_only, as_json, timing, output)
