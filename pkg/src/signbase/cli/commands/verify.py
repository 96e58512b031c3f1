# ============================================================================
#  signbase
#  LICENSE: MIT
# ============================================================================
"""Verify command: run the verification suites and report every outcome."""

from pathlib import Path
from typing import Any

import click
from pydantic import ValidationError
from rich.markup import escape
from rich.progress import BarColumn, Progress, SpinnerColumn, TaskProgressColumn, TextColumn

from signbase.cli.console import (
    console,
    create_results_table,
    print_error,
    print_info,
    print_success,
    print_warning,
)
from signbase.config.defaults import DEFAULT_PROFILE
from signbase.config.loader import load_profile
from signbase.config.models import SuiteName, VerifyProfile
from signbase.reports.generator import ReportGenerator
from signbase.reports.json_report import canonical_json
from signbase.reports.models import ReportFormat
from signbase.verify.outcomes import VerificationOutcome, VerificationSummary
from signbase.verify.suites import SuiteRunner

SUITE_CHOICES = [s.value for s in SuiteName] + ["battery", "all"]


class OrderRange(click.ParamType):
    """An order ``14`` or an inclusive range ``6..10``."""

    name = "range"

    def convert(self, value: Any, param: click.Parameter | None, ctx: click.Context | None) -> range:
        if isinstance(value, range):
            return value
        text = str(value).strip()
        low_text, sep, high_text = text.partition("..")
        try:
            low = int(low_text)
            high = int(high_text) if sep else low
        except ValueError:
            self.fail(f"expected N or LOW..HIGH, got {text!r}", param, ctx)
        if low < 1 or high < low:
            self.fail(f"empty or non-positive range {text!r}", param, ctx)
        return range(low, high + 1)


def _effective_profile(
    profile: VerifyProfile,
    suite: str | None,
    orders: range | None,
    samples: int | None,
    seed: int | None,
) -> VerifyProfile:
    """Apply command-line overrides to a profile, re-validating the result."""
    updates: dict[str, Any] = {}
    if suite == "battery":
        updates["suites"] = []
        if orders is not None:
            updates["battery_orders"] = list(orders)
    elif suite is not None and suite != "all":
        updates["suites"] = [SuiteName(suite)]
        updates["battery_orders"] = []
    elif suite == "all":
        updates["suites"] = list(SuiteName)

    if orders is not None:
        if suite == SuiteName.TINY.value:
            updates["tiny_n_max"] = orders.stop - 1
        elif suite in (SuiteName.GAPS.value, SuiteName.CHARACTERIZATIONS.value):
            updates["gap_orders"] = list(orders)
        elif suite != "battery":
            updates["n_min"] = orders.start
            updates["n_max"] = orders.stop - 1
    if samples is not None:
        updates["samples"] = samples
    if seed is not None:
        updates["seed"] = seed
    if not updates:
        return profile
    return VerifyProfile(**{**profile.model_dump(), **updates})


def _outcome_line(outcome: VerificationOutcome, verbose: bool) -> str:
    style = "success" if outcome.passed else "error"
    line = (
        f"[{style}]{outcome.status}[/{style}] {escape(outcome.suite)} "
        f"{escape(outcome.instance)} :: {escape(outcome.claim)}"
    )
    if verbose or not outcome.passed:
        line += escape(f"  expected={outcome.expected!r} computed={outcome.computed!r}")
    return line


@click.command()
@click.option(
    "--suite",
    type=click.Choice(SUITE_CHOICES, case_sensitive=False),
    help="Suite to run (default: the profile's suites)",
)
@click.option("--n", "orders", type=OrderRange(), help="Order N or range LOW..HIGH")
@click.option("--samples", type=click.IntRange(min=0), help="Random samples per order")
@click.option("--seed", type=click.IntRange(min=0), help="Sampler seed")
@click.option(
    "--profile",
    "-p",
    default=DEFAULT_PROFILE,
    show_default=True,
    help="Profile name or path to a profile YAML file",
)
@click.option("--workers", "-w", type=click.IntRange(1, 64), help="Worker threads")
@click.option("--json", "as_json", is_flag=True, help="Emit the canonical JSON report only")
@click.option(
    "--output",
    "-o",
    type=click.Path(dir_okay=False, path_type=Path),
    help="Write the JSON report to this file",
)
@click.option(
    "--csv",
    "csv_path",
    type=click.Path(dir_okay=False, path_type=Path),
    help="Write outcomes as CSV to this file",
)
@click.pass_context
def verify(
    ctx: click.Context,
    suite: str | None,
    orders: range | None,
    samples: int | None,
    seed: int | None,
    profile: str,
    workers: int | None,
    as_json: bool,
    output: Path | None,
    csv_path: Path | None,
) -> None:
    """Check the closed-form statements on generated and sampled digraphs.

    Exits with status 1 when any outcome fails.

    Examples:

        \b
        signbase verify --suite exponents --n 6..10
        signbase verify --suite tiny
        signbase verify --suite gaps --n 14 --samples 500 --seed 7
        signbase verify --profile acceptance --csv outcomes.csv
    """
    try:
        base_profile = load_profile(profile)
    except FileNotFoundError as e:
        raise click.ClickException(f"Profile not found: {e}") from e
    except ValueError as e:
        raise click.ClickException(f"Invalid profile: {e}") from e

    try:
        effective = _effective_profile(base_profile, suite, orders, samples, seed)
    except ValidationError as e:
        messages = "; ".join(err["msg"] for err in e.errors())
        raise click.BadParameter(messages, param_hint="--n") from e

    verbose = ctx.obj.get("verbose", False)
    config = ctx.obj["engine_config"]

    if as_json:
        summary = SuiteRunner(config, workers).run_profile(effective)
    else:
        suites_text = ", ".join(s.value for s in effective.suites) or "none"
        print_info(f"Profile: {escape(effective.name)}  suites: {suites_text}")
        with Progress(
            SpinnerColumn(),
            TextColumn("[progress.description]{task.description}"),
            BarColumn(),
            TaskProgressColumn(),
            console=console,
            transient=True,
        ) as progress:
            task = progress.add_task("[cyan]Verifying...", total=None)

            def update_progress(completed: int, total: int) -> None:
                progress.update(task, completed=completed, total=total)

            summary = SuiteRunner(config, workers, update_progress).run_profile(effective)

    generator = ReportGenerator()
    run = {
        "profile": effective.name,
        "suites": [s.value for s in effective.suites],
        "n_min": effective.n_min,
        "n_max": effective.n_max,
        "gap_orders": effective.gap_orders,
        "battery_orders": effective.battery_orders,
        "samples": effective.samples,
        "seed": effective.seed,
        "tiny_n_max": effective.tiny_n_max,
        "tiny_t_max": effective.tiny_t_max,
    }
    report = generator.verification_report(run, summary)
    outputs = {}
    if output is not None:
        outputs[ReportFormat.JSON] = output
    if csv_path is not None:
        outputs[ReportFormat.CSV] = csv_path
    written = generator.write(report, outputs)

    if as_json:
        click.echo(canonical_json(report.to_dict()), nl=False)
    else:
        _print_summary(summary, verbose)
        for path in written:
            print_success(f"Report written to {path}")

    if not summary.all_passed:
        ctx.exit(1)


def _print_summary(summary: VerificationSummary, verbose: bool) -> None:
    for outcome in summary.outcomes:
        console.print(_outcome_line(outcome, verbose), soft_wrap=True)
        if not outcome.passed and outcome.witness:
            console.print(escape(outcome.witness.rstrip()), style="muted", soft_wrap=True)

    for note in summary.notes:
        print_warning(note)

    table = create_results_table(title="Verification Summary")
    table.add_column("Suite", style="bold cyan")
    table.add_column("Passed", justify="right", style="green")
    table.add_column("Failed", justify="right")
    for name, counts in sorted(summary.per_suite.items()):
        failed = counts["failed"]
        table.add_row(name, str(counts["passed"]), f"[red]{failed}[/red]" if failed else "0")
    table.add_row("total", str(summary.passed), str(summary.failed))
    console.print(table)

    if summary.all_passed:
        print_success(f"All {summary.total} outcomes passed")
    else:
        print_error(f"{summary.failed} of {summary.total} outcomes failed")
