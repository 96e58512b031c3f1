# ============================================================================
#  signbase
#  LICENSE: MIT
# ============================================================================
"""Analyze command: full report for one edge-list file."""

from pathlib import Path

import click
from rich.markup import escape

from signbase.cli.console import (
    console,
    create_branded_panel,
    create_results_table,
    print_error,
    print_success,
)
from signbase.engine.analysis import AnalysisResult, DigraphAnalyzer
from signbase.engine.digraph import SignedDigraph, read_edge_list
from signbase.errors import (
    CycleCapExceededError,
    EdgeListParseError,
    NotPrimitiveError,
    PowerfulPatternError,
)
from signbase.reports.generator import ReportGenerator
from signbase.reports.json_report import canonical_json

EXIT_NOT_PRIMITIVE = 2
EXIT_POWERFUL = 3


@click.command()
@click.argument("file", type=click.Path(exists=True, dir_okay=False, path_type=Path))
@click.option("--exp-only", is_flag=True, help="Skip the local-base computation")
@click.option("--json", "as_json", is_flag=True, help="Emit the canonical JSON report")
@click.option("--timing", is_flag=True, help="Include wall-clock timing in the report")
@click.option(
    "--output",
    "-o",
    type=click.Path(dir_okay=False, path_type=Path),
    help="Write the JSON report to this file",
)
@click.pass_context
def analyze(
    ctx: click.Context,
    file: Path,
    exp_only: bool,
    as_json: bool,
    timing: bool,
    output: Path | None,
) -> None:
    """Analyze a signed digraph given as an edge list.

    Exit codes: 0 success, 1 parse error, 2 not primitive, 3 powerful.

    Examples:

        \b
        signbase analyze graph.txt
        signbase analyze graph.txt --exp-only --json
    """
    try:
        digraph = read_edge_list(file)
    except EdgeListParseError as e:
        raise click.ClickException(f"{file}: {e}") from e

    emit_analysis(ctx, digraph, f"file:{file.name}", exp_only, as_json, timing, output)


def emit_analysis(
    ctx: click.Context,
    digraph: SignedDigraph,
    descriptor: str,
    exp_only: bool,
    as_json: bool,
    timing: bool,
    output: Path | None,
) -> None:
    """Analyze, render and exit with the documented status codes."""
    analyzer = DigraphAnalyzer(ctx.obj["engine_config"])
    try:
        result = analyzer.analyze(digraph, exp_only=exp_only)
    except NotPrimitiveError as e:
        print_error(f"not primitive: {e.reason}")
        ctx.exit(EXIT_NOT_PRIMITIVE)
    except PowerfulPatternError as e:
        print_error(f"powerful: {e}")
        ctx.exit(EXIT_POWERFUL)
    except CycleCapExceededError as e:
        raise click.ClickException(str(e)) from e

    report = ReportGenerator().analysis_report(descriptor, result, include_timing=timing)
    text = canonical_json(report.to_dict())
    if output is not None:
        output.parent.mkdir(parents=True, exist_ok=True)
        output.write_text(text, encoding="utf-8")
    if as_json:
        click.echo(text, nl=False)
        return

    _print_result(result, descriptor, ctx.obj.get("verbose", False))
    if timing:
        console.print(
            "[muted]timing (ms): "
            + ", ".join(f"{stage}={ms}" for stage, ms in result.timing_ms.items())
            + "[/muted]"
        )
    if output is not None:
        print_success(f"Report written to {output}")


def _print_result(result: AnalysisResult, descriptor: str, verbose: bool) -> None:
    digraph = result.digraph
    pair = result.distinguished_pair
    pair_text = (
        " & ".join(f"{c.length}-cycle {c.vertices} ({'+' if c.sign > 0 else '-'})" for c in pair)
        if pair is not None
        else "none"
    )
    lines = [
        f"[bold]{escape(descriptor)}[/bold]",
        f"order: {digraph.n}   arcs: {len(digraph.arcs)}   negative: {len(digraph.negative_arcs)}",
        "primitive: yes",
        f"nonpowerful: {'yes' if result.nonpowerful else 'no'}",
        f"cycle lengths C(S): {list(result.catalog.lengths)}  ({len(result.catalog.cycles)} cycles)",
        f"distinguished pair: {pair_text}",
        f"exp(S) = {result.exponents.exponent}   "
        f"d(C(S)) + phi = {result.c_walks.value} + {result.bound.frobenius} = {result.bound.value}",
    ]
    if result.bases is not None:
        lines.append(
            f"l(S) = {result.bases.base}   all-# from t = {result.bases.stabilization_time}"
        )
    console.print(create_branded_panel("\n".join(lines), title="Analysis"))

    table = create_results_table(title="Per vertex")
    table.add_column("v", justify="right")
    table.add_column("exp(v)", justify="right")
    table.add_column("d_C(v)", justify="right")
    if result.bases is not None:
        table.add_column("l(v)", justify="right")
        table.add_column("r(v)", justify="right")
    table.add_column("k", justify="right", style="muted")
    table.add_column("exp(k)", justify="right")
    if result.bases is not None:
        table.add_column("l(k)", justify="right")

    for index in range(digraph.n):
        row = [
            str(index + 1),
            str(result.exponents.per_vertex[index]),
            str(result.c_walks.eccentricity[index]),
        ]
        if result.bases is not None and result.closed_sssd_times is not None:
            r = result.closed_sssd_times[index]
            row += [str(result.bases.per_vertex[index]), "-" if r is None else str(r)]
        row += [str(index + 1), str(result.exponents.ordered[index])]
        if result.bases is not None:
            row.append(str(result.bases.ordered[index]))
        table.add_row(*row)
    console.print(table)

    if verbose:
        _print_pairwise("exp(u, v)", result.exponents.pairwise)
        if result.bases is not None:
            _print_pairwise("l(u, v)", result.bases.pairwise)


def _print_pairwise(title: str, pairwise: tuple[tuple[int, ...], ...]) -> None:
    table = create_results_table(title=title)
    table.add_column("u\\v", style="muted")
    for v in range(1, len(pairwise) + 1):
        table.add_column(str(v), justify="right")
    for u, row in enumerate(pairwise, start=1):
        table.add_row(str(u), *(str(value) for value in row))
    console.print(table)
