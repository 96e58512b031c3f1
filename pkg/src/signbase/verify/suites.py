# ============================================================================
#  signbase
#  LICENSE: MIT
# ============================================================================
"""
Verification suites.

Each suite turns a range of orders into independent jobs, runs them on a
thread pool and collects VerificationOutcome records into a
VerificationSummary. Outcomes are sorted on finalize, so worker count
never changes the report.
"""

from __future__ import annotations

from collections.abc import Callable, Iterable, Sequence
from concurrent.futures import ThreadPoolExecutor, as_completed
from dataclasses import dataclass, field
from itertools import product
from typing import Any, TypeVar

from signbase.config.defaults import GAP_MIN_ORDER
from signbase.config.models import EngineConfig, SuiteName, VerifyProfile
from signbase.engine.analysis import AnalysisResult, DigraphAnalyzer
from signbase.engine.bases import base_report, oracle_base_table, sssd_oracle, stabilizes
from signbase.engine.digraph import (
    SignedDigraph,
    cycle_catalog,
    find_distinguished_pair,
    is_isomorphic_underlying,
    is_primitive,
    is_strongly_connected,
    parse,
    signature_certificate,
)
from signbase.engine.exponents import exponent_oracle, exponent_report
from signbase.engine.semiring import power_stream
from signbase.errors import SignbaseError
from signbase.families.generators import (
    PRESET_FAMILIES,
    Family,
    FamilySpec,
    Preset,
    SignPolicy,
    build_underlying,
    check_range,
    generate,
    valid_parameters,
)
from signbase.verify.battery import lemma_battery, serialize_witness
from signbase.verify.formulas import (
    CHARACTERIZATIONS,
    Characterization,
    FormulaPoint,
    Member,
    base_formula,
    d2_split_bounds,
    exponent_formula,
    gap_intervals,
)
from signbase.verify.outcomes import VerificationOutcome, VerificationSummary, check
from signbase.verify.sampler import RandomSignedDigraphSampler, SampledDigraph

T = TypeVar("T")

ProgressCallback = Callable[[int, int], None]

RUNNING_EXAMPLE = "2\n1 1 +\n1 2 +\n2 1 -\n"

# Named variants checked by the base-formula suite, in report order
BASE_VARIANTS: tuple[Preset, ...] = (
    Preset.D1_SIGNED,
    Preset.D2_SAME,
    Preset.D2_SPLIT,
    Preset.SKI,
    Preset.T,
    Preset.S0,
    Preset.S1,
    Preset.S2,
    Preset.S3,
    Preset.S4,
    Preset.S5,
    Preset.S6,
    Preset.S7,
    Preset.SI,
    Preset.Q1,
    Preset.Q2,
    Preset.Q3,
    Preset.Q4,
)


def _compare_points(
    suite: str,
    instance: str,
    quantity: str,
    points: Sequence[FormulaPoint],
    ordered: Sequence[int],
    per_vertex: Sequence[int],
    digraph: SignedDigraph,
) -> list[VerificationOutcome]:
    """Ordered-sequence equality plus per-vertex equality where a vertex is named."""
    expected = [p.value for p in points]
    computed = list(ordered)
    mismatch = next((m for m, (e, c) in enumerate(zip(expected, computed), start=1) if e != c), None)
    outcomes = [
        check(
            suite,
            instance,
            f"ordered {quantity}(k)",
            expected,
            computed,
            witness=serialize_witness(digraph, f"first mismatch at k={mismatch}"),
        )
    ]
    pinned = {f"v{p.vertex}": p.value for p in points if p.vertex is not None}
    if pinned:
        observed = {f"v{p.vertex}": per_vertex[p.vertex - 1] for p in points if p.vertex is not None}
        outcomes.append(
            check(
                suite,
                instance,
                f"{quantity}(v_j)",
                dict(sorted(pinned.items())),
                dict(sorted(observed.items())),
                witness=serialize_witness(digraph),
            )
        )
    return outcomes


def _class_outcome(
    suite: str, instance: str, variant: Preset, result: AnalysisResult
) -> VerificationOutcome | None:
    """Re-check the sign-class hypotheses of a preset from its own catalog."""
    classes = {length: sorted(signs) for length, signs in result.class_signs.items()}
    if variant == Preset.NONPOWERFUL:
        return None
    n = result.digraph.n
    if variant == Preset.D2_SPLIT:
        passed = result.nonpowerful and len(classes.get(n - 1, [])) == 2 and len(classes[n]) == 1
        claim = "nonpowerful, (n-1)-cycles of both signs"
    else:
        passed = result.nonpowerful and all(len(signs) == 1 for signs in classes.values())
        claim = "nonpowerful, sign-constant cycle classes"
    return check(
        suite,
        instance,
        claim,
        True,
        passed,
        witness=serialize_witness(result.digraph, f"class signs {classes}"),
    )


def _preset_spec(variant: Preset, n: int, k: int | None, i: int | None) -> FamilySpec:
    return FamilySpec(
        family=PRESET_FAMILIES[variant], n=n, k=k, i=i, policy=SignPolicy.PRESET, preset=variant
    )


def _member_spec(member: Member, n: int) -> FamilySpec:
    variant = Preset.SKI if member.family == Family.DKI else Preset.SAME_SIGN
    return FamilySpec(
        family=member.family,
        n=n,
        k=member.k,
        i=member.i,
        policy=SignPolicy.PRESET,
        preset=variant,
    )


@dataclass
class _TinyTally:
    """Mismatch counts for one chunk of the exhaustive scan."""

    scanned: int = 0
    strongly_connected: int = 0
    primitive: int = 0
    nonpowerful: int = 0
    base_compared: int = 0
    mismatches: dict[str, int] = field(default_factory=dict)
    witnesses: dict[str, str] = field(default_factory=dict)
    running_example_base: int | None = None

    def miss(self, check_name: str, digraph: SignedDigraph, detail: str) -> None:
        self.mismatches[check_name] = self.mismatches.get(check_name, 0) + 1
        self.witnesses.setdefault(check_name, serialize_witness(digraph, detail))

    def merge(self, other: _TinyTally) -> None:
        self.scanned += other.scanned
        self.strongly_connected += other.strongly_connected
        self.primitive += other.primitive
        self.nonpowerful += other.nonpowerful
        self.base_compared += other.base_compared
        for name, count in other.mismatches.items():
            self.mismatches[name] = self.mismatches.get(name, 0) + count
        for name, witness in other.witnesses.items():
            self.witnesses.setdefault(name, witness)
        if other.running_example_base is not None:
            self.running_example_base = other.running_example_base


TINY_CHECKS = (
    "nonpowerful test agrees with stabilization",
    "signature certificate agrees with cycle test",
    "exponents agree with reach-set oracle",
    "bases agree with walk oracle",
    "power entries agree with walk oracle",
)


class SuiteRunner:
    """
    Runs verification suites against an engine configuration.

    Args:
        config: Engine configuration (cycle cap, oracle budget, sampler knobs)
        workers: Thread count; defaults to ``config.threads``
        progress_callback: Called with (completed, total) as jobs finish
    """

    def __init__(
        self,
        config: EngineConfig | None = None,
        workers: int | None = None,
        progress_callback: ProgressCallback | None = None,
    ):
        self.config = config or EngineConfig()
        self.workers = workers or self.config.threads
        self.progress_callback = progress_callback
        self.analyzer = DigraphAnalyzer(self.config)

    # ------------------------------------------------------------------ plumbing

    def _map(self, jobs: Sequence[Callable[[], T]]) -> list[T]:
        """Run jobs, returning results in submission order."""
        total = len(jobs)
        results: list[Any] = [None] * total
        if self.workers > 1 and total > 1:
            with ThreadPoolExecutor(max_workers=self.workers) as executor:
                futures = {executor.submit(job): index for index, job in enumerate(jobs)}
                for done, future in enumerate(as_completed(futures), start=1):
                    results[futures[future]] = future.result()
                    if self.progress_callback:
                        self.progress_callback(done, total)
        else:
            for done, job in enumerate(jobs, start=1):
                results[done - 1] = job()
                if self.progress_callback:
                    self.progress_callback(done, total)
        return results

    @staticmethod
    def _guarded(
        suite: str, instance: str, body: Callable[[], list[VerificationOutcome]]
    ) -> Callable[[], list[VerificationOutcome]]:
        """Turn a construction or analysis error into a failing outcome."""

        def job() -> list[VerificationOutcome]:
            try:
                return body()
            except SignbaseError as exc:
                return [check(suite, instance, "instance analyzes", "ok", f"{type(exc).__name__}: {exc}")]

        return job

    def _collect(
        self, jobs: Sequence[Callable[[], list[VerificationOutcome]]], summary: VerificationSummary
    ) -> None:
        for outcomes in self._map(jobs):
            summary.extend(outcomes)

    def _sample(self, n: int, count: int, seed: int, summary: VerificationSummary) -> list[SampledDigraph]:
        batch = RandomSignedDigraphSampler.from_config(n, seed, self.config).sample(count)
        if len(batch.samples) < count:
            summary.add_note(
                f"n={n} seed={seed}: only {len(batch.samples)} of {count} samples accepted "
                f"in {batch.attempts} attempts"
            )
        return batch.samples

    # ------------------------------------------------------------------ exponents

    def exponent_formulas(self, orders: Iterable[int], summary: VerificationSummary) -> None:
        """Ordered and per-vertex exponents of every all-positive family member."""
        suite = SuiteName.EXPONENTS.value
        jobs = []
        for n in orders:
            for family in Family:
                for k, i in valid_parameters(family, n):
                    spec = FamilySpec(family=family, n=n, k=k, i=i)
                    jobs.append(self._guarded(suite, spec.descriptor(), self._exponent_job(spec)))
        self._collect(jobs, summary)

    def _exponent_job(self, spec: FamilySpec) -> Callable[[], list[VerificationOutcome]]:
        def body() -> list[VerificationOutcome]:
            suite = SuiteName.EXPONENTS.value
            instance = spec.descriptor()
            result = self.analyzer.analyze(generate(spec), exp_only=True)
            points = exponent_formula(spec.family, spec.n, spec.k, spec.i)
            outcomes = _compare_points(
                suite, instance, "exp", points,
                result.exponents.ordered, result.exponents.per_vertex, result.digraph,
            )
            outcomes.extend(lemma_battery(suite, instance, result, family_instance=True))
            return outcomes

        return body

    # ------------------------------------------------------------------ bases

    def base_formulas(self, orders: Iterable[int], summary: VerificationSummary) -> None:
        """Ordered and per-vertex local bases of every named signed variant."""
        suite = SuiteName.BASES.value
        jobs = []
        for n in orders:
            for variant in BASE_VARIANTS:
                for k, i in valid_parameters(PRESET_FAMILIES[variant], n):
                    spec = _preset_spec(variant, n, k, i)
                    jobs.append(self._guarded(suite, spec.descriptor(), self._base_job(spec)))
        self._collect(jobs, summary)

    def _base_job(self, spec: FamilySpec) -> Callable[[], list[VerificationOutcome]]:
        def body() -> list[VerificationOutcome]:
            assert spec.preset is not None
            suite = SuiteName.BASES.value
            instance = spec.descriptor()
            result = self.analyzer.analyze(generate(spec))
            assert result.bases is not None
            if spec.preset == Preset.D2_SPLIT:
                bounds = d2_split_bounds(spec.n)
                over = [b.index for b, value in zip(bounds, result.bases.ordered) if value > b.value]
                outcomes = [
                    check(
                        suite,
                        instance,
                        "ordered l(k) within split bounds",
                        [b.value for b in bounds],
                        list(result.bases.ordered),
                        passed=not over,
                        witness=serialize_witness(result.digraph, f"over at k={over}"),
                    )
                ]
            else:
                points = base_formula(spec.preset, spec.n, spec.k, spec.i)
                outcomes = _compare_points(
                    suite, instance, "l", points,
                    result.bases.ordered, result.bases.per_vertex, result.digraph,
                )
            classes = _class_outcome(suite, instance, spec.preset, result)
            if classes is not None:
                outcomes.append(classes)
            outcomes.extend(lemma_battery(suite, instance, result, family_instance=True))
            return outcomes

        return body

    # ------------------------------------------------------------------ tiny

    def exhaustive_tiny(
        self,
        n_max: int,
        t_max: int,
        samples: dict[int, int],
        seed: int,
        summary: VerificationSummary,
    ) -> None:
        """Every signed digraph on n <= n_max vertices, plus sampled orders, against the oracles."""
        suite = SuiteName.TINY.value
        for n in range(1, n_max + 1):
            row_patterns = list(product((0, 1, -1), repeat=n))
            jobs = [self._tiny_chunk(n, t_max, first_row) for first_row in row_patterns]
            total = _TinyTally()
            for tally in self._map(jobs):
                total.merge(tally)
            summary.extend(self._tiny_outcomes(suite, f"exhaustive(n={n})", total, 3 ** (n * n)))
            if n == 1:
                summary.add(check(suite, "exhaustive(n=1)", "no nonpowerful instance", 0, total.nonpowerful))
            if n == 2:
                summary.add(
                    check(suite, "running-example", "l(S)", 4, total.running_example_base)
                )

        for n, count in sorted(samples.items()):
            drawn = self._sample(n, count, seed, summary)
            tallies = self._map([self._tiny_sampled(sample, t_max) for sample in drawn])
            total = _TinyTally()
            for tally in tallies:
                total.merge(tally)
            summary.extend(
                self._tiny_outcomes(suite, f"sampled(n={n},seed={seed})", total, len(drawn))
            )

    @staticmethod
    def _tiny_outcomes(
        suite: str, instance: str, tally: _TinyTally, expected_scanned: int
    ) -> list[VerificationOutcome]:
        outcomes = [check(suite, instance, "instances scanned", expected_scanned, tally.scanned)]
        for name in TINY_CHECKS:
            outcomes.append(
                check(
                    suite,
                    instance,
                    name,
                    0,
                    tally.mismatches.get(name, 0),
                    witness=tally.witnesses.get(name, ""),
                )
            )
        return outcomes

    def _tiny_chunk(self, n: int, t_max: int, first_row: tuple[int, ...]) -> Callable[[], _TinyTally]:
        def job() -> _TinyTally:
            tally = _TinyTally()
            example = parse(RUNNING_EXAMPLE) if n == 2 else None
            for rest in product((0, 1, -1), repeat=n * (n - 1)):
                entries = first_row + rest
                arcs = [
                    (index // n + 1, index % n + 1, sign)
                    for index, sign in enumerate(entries)
                    if sign
                ]
                digraph = SignedDigraph.from_arcs(n, arcs)
                tally.scanned += 1
                self._cross_check(digraph, t_max, tally)
                if example is not None and digraph == example:
                    tally.running_example_base = base_report(digraph).base
            return tally

        return job

    def _tiny_sampled(self, sample: SampledDigraph, t_max: int) -> Callable[[], _TinyTally]:
        def job() -> _TinyTally:
            tally = _TinyTally(scanned=1)
            self._cross_check(sample.digraph, t_max, tally)
            return tally

        return job

    def _cross_check(self, digraph: SignedDigraph, t_max: int, tally: _TinyTally) -> None:
        """Engine against oracles on one digraph; mismatches go into ``tally``."""
        if not digraph.arcs or not is_strongly_connected(digraph):
            return
        tally.strongly_connected += 1
        budget = self.config.oracle_budget

        for t, power in enumerate(power_stream(digraph.adjacency, t_max), start=1):
            for u in digraph.vertices:
                for v in digraph.vertices:
                    engine = power.entry(u - 1, v - 1)
                    oracle = sssd_oracle(digraph, u, v, t, budget)
                    if engine != oracle:
                        tally.miss(
                            TINY_CHECKS[4], digraph,
                            f"t={t} ({u},{v}) engine {engine.symbol} oracle {oracle.symbol}",
                        )

        catalog = cycle_catalog(digraph, self.config.max_cycles)
        if not is_primitive(digraph, catalog):
            return
        tally.primitive += 1
        nonpowerful = find_distinguished_pair(catalog) is not None
        if nonpowerful != stabilizes(digraph):
            tally.miss(TINY_CHECKS[0], digraph, f"cycle test says nonpowerful={nonpowerful}")
        if nonpowerful == (signature_certificate(digraph) is not None):
            tally.miss(TINY_CHECKS[1], digraph, f"cycle test says nonpowerful={nonpowerful}")

        exponents = exponent_report(digraph)
        oracle_table = tuple(
            tuple(exponent_oracle(digraph, u, v) for v in digraph.vertices) for u in digraph.vertices
        )
        if exponents.pairwise != oracle_table:
            tally.miss(TINY_CHECKS[2], digraph, f"engine {exponents.pairwise} oracle {oracle_table}")

        if nonpowerful:
            tally.nonpowerful += 1
            bases = base_report(digraph)
            if bases.stabilization_time <= t_max:
                tally.base_compared += 1
                oracle_bases = oracle_base_table(digraph, t_max, budget)
                if bases.pairwise != oracle_bases:
                    tally.miss(
                        TINY_CHECKS[3], digraph, f"engine {bases.pairwise} oracle {oracle_bases}"
                    )

    # ------------------------------------------------------------------ gaps

    def gap_scan(self, n: int, samples: int, seed: int, summary: VerificationSummary) -> None:
        """Presets flank the gaps; sampled instances never land inside one."""
        _require_gap_order(n)
        suite = SuiteName.GAPS.value
        jobs: list[Callable[[], list[VerificationOutcome]]] = []
        for variant in BASE_VARIANTS:
            for k, i in valid_parameters(PRESET_FAMILIES[variant], n):
                spec = _preset_spec(variant, n, k, i)
                jobs.append(self._guarded(suite, spec.descriptor(), self._gap_preset_job(spec)))
        for sample in self._sample(n, samples, seed, summary):
            jobs.append(self._guarded(suite, sample.descriptor, self._gap_sample_job(sample)))
        self._collect(jobs, summary)

    @staticmethod
    def _gap_hits(n: int, ordered: Sequence[int]) -> list[str]:
        hits = []
        for k, value in enumerate(ordered, start=1):
            for gap in gap_intervals(n, k):
                if gap.contains(value):
                    hits.append(f"l({k})={value} in {gap.label} [{gap.low},{gap.high}]")
        return hits

    def _gap_outcome(self, suite: str, instance: str, result: AnalysisResult) -> VerificationOutcome:
        assert result.bases is not None
        hits = self._gap_hits(result.digraph.n, result.bases.ordered)
        return check(
            suite,
            instance,
            "no l(k) inside a gap interval",
            [],
            hits,
            witness=serialize_witness(result.digraph, f"ordered bases {result.bases.ordered}"),
        )

    def _gap_preset_job(self, spec: FamilySpec) -> Callable[[], list[VerificationOutcome]]:
        def body() -> list[VerificationOutcome]:
            suite = SuiteName.GAPS.value
            instance = spec.descriptor()
            result = self.analyzer.analyze(generate(spec))
            assert result.bases is not None
            outcomes = [self._gap_outcome(suite, instance, result)]
            if spec.preset == Preset.D1_SIGNED:
                n = spec.n
                margins = [
                    value - max(gap.high for gap in gap_intervals(n, k))
                    for k, value in enumerate(result.bases.ordered, start=1)
                ]
                outcomes.append(
                    check(suite, instance, "l(k) sits 2 above the upper gap", [2] * n, margins)
                )
            return outcomes

        return body

    def _gap_sample_job(self, sample: SampledDigraph) -> Callable[[], list[VerificationOutcome]]:
        def body() -> list[VerificationOutcome]:
            suite = SuiteName.GAPS.value
            result = self.analyzer.analyze(sample.digraph)
            outcomes = [self._gap_outcome(suite, sample.descriptor, result)]
            outcomes.extend(lemma_battery(suite, sample.descriptor, result))
            return outcomes

        return body

    # ------------------------------------------------------------------ characterizations

    def characterization_check(
        self,
        n: int,
        summary: VerificationSummary,
        clause: str | None = None,
        samples: int = 0,
        seed: int = 0,
    ) -> None:
        """Named members attain each characterized value; sampled matches stay inside the members."""
        _require_gap_order(n)
        suite = SuiteName.CHARACTERIZATIONS.value
        clauses = [c for c in CHARACTERIZATIONS if clause is None or c.label == clause]
        if not clauses:
            raise KeyError(f"unknown characterization {clause!r}")

        jobs: list[Callable[[], list[VerificationOutcome]]] = []
        for item in clauses:
            if item.odd_only and n % 2 == 0:
                summary.add_note(f"{item.label}: stated for odd n only, skipped at n={n}")
                continue
            members = [m for m in item.members(n) if _exists(m, n)]
            if not members:
                summary.add_note(f"{item.label}: no named family exists at n={n}")
                continue
            for member in members:
                spec = _member_spec(member, n)
                jobs.append(
                    self._guarded(suite, spec.descriptor(), self._forward_job(item, spec))
                )
        self._collect(jobs, summary)

        if samples:
            drawn = self._sample(n, samples, seed, summary)
            results = self._map([self._converse_job(clauses, s) for s in drawn])
            violations = sorted(v for found in results for v in found)
            summary.add(
                check(
                    suite,
                    f"random(n={n},seed={seed},count={len(drawn)})",
                    "sampled matches lie in the named families",
                    [],
                    violations,
                )
            )

    def _forward_job(
        self, clause: Characterization, spec: FamilySpec
    ) -> Callable[[], list[VerificationOutcome]]:
        def body() -> list[VerificationOutcome]:
            suite = SuiteName.CHARACTERIZATIONS.value
            result = self.analyzer.analyze(generate(spec))
            assert result.bases is not None
            n = spec.n
            indices = clause.indices(n)
            return [
                check(
                    suite,
                    spec.descriptor(),
                    f"{clause.label}: l(k) = 2n^2{clause.a:+d}n{clause.b:+d}+k "
                    f"for k in {indices.start}..{indices.stop - 1}",
                    [clause.value(n, m) for m in indices],
                    [result.bases.ordered[m - 1] for m in indices],
                    witness=serialize_witness(result.digraph),
                )
            ]

        return body

    def _converse_job(
        self, clauses: Sequence[Characterization], sample: SampledDigraph
    ) -> Callable[[], list[str]]:
        def job() -> list[str]:
            try:
                result = self.analyzer.analyze(sample.digraph)
            except SignbaseError:
                return []
            assert result.bases is not None
            n = sample.digraph.n
            sign_constant = all(len(s) == 1 for s in result.class_signs.values())
            found = []
            for item in clauses:
                if item.odd_only and n % 2 == 0:
                    continue
                if not item.matches(n, result.bases.ordered):
                    continue
                members = [m for m in item.members(n) if _exists(m, n)]
                inside = sign_constant and any(
                    is_isomorphic_underlying(sample.digraph, build_underlying(m.family, n, m.k, m.i))
                    for m in members
                )
                if not inside:
                    found.append(f"{item.label}: {sample.descriptor}")
            return found

        return job

    # ------------------------------------------------------------------ battery

    def random_battery(
        self, orders: Iterable[int], samples: int, seed: int, summary: VerificationSummary
    ) -> None:
        """Lemma inequalities on sampled primitive nonpowerful instances."""
        suite = "battery"
        jobs = []
        for n in orders:
            for sample in self._sample(n, samples, seed, summary):
                jobs.append(self._guarded(suite, sample.descriptor, self._battery_job(suite, sample)))
        self._collect(jobs, summary)

    def _battery_job(
        self, suite: str, sample: SampledDigraph
    ) -> Callable[[], list[VerificationOutcome]]:
        def body() -> list[VerificationOutcome]:
            return lemma_battery(suite, sample.descriptor, self.analyzer.analyze(sample.digraph))

        return body

    # ------------------------------------------------------------------ profiles

    def run_profile(self, profile: VerifyProfile) -> VerificationSummary:
        """Every suite a profile names, in a single summary."""
        summary = VerificationSummary()
        orders = range(profile.n_min, profile.n_max + 1)
        for suite in profile.suites:
            if suite == SuiteName.EXPONENTS:
                self.exponent_formulas(orders, summary)
            elif suite == SuiteName.BASES:
                self.base_formulas(orders, summary)
            elif suite == SuiteName.TINY:
                self.exhaustive_tiny(
                    profile.tiny_n_max, profile.tiny_t_max, profile.tiny_samples, profile.seed, summary
                )
            elif suite == SuiteName.GAPS:
                for n in profile.gap_orders:
                    self.gap_scan(n, profile.samples, profile.seed, summary)
            elif suite == SuiteName.CHARACTERIZATIONS:
                for n in profile.gap_orders:
                    self.characterization_check(n, summary, samples=profile.samples, seed=profile.seed)
        if profile.battery_orders:
            self.random_battery(profile.battery_orders, profile.samples, profile.seed, summary)
        summary.finalize()
        return summary


def _require_gap_order(n: int) -> None:
    if n < GAP_MIN_ORDER:
        raise ValueError(f"gap statements need n >= {GAP_MIN_ORDER}, got n={n}")


def _exists(member: Member, n: int) -> bool:
    try:
        check_range(member.family, n, member.k, member.i)
    except SignbaseError:
        return False
    return True


# =============================================================================
# Functional entry points
# =============================================================================


def _run(fill: Callable[[SuiteRunner, VerificationSummary], None], config: EngineConfig | None) -> list[VerificationOutcome]:
    runner = SuiteRunner(config)
    summary = VerificationSummary()
    fill(runner, summary)
    summary.finalize()
    return summary.outcomes


def verify_exponent_formulas(
    orders: Iterable[int], config: EngineConfig | None = None
) -> list[VerificationOutcome]:
    return _run(lambda runner, summary: runner.exponent_formulas(orders, summary), config)


def verify_base_formulas(
    orders: Iterable[int], config: EngineConfig | None = None
) -> list[VerificationOutcome]:
    return _run(lambda runner, summary: runner.base_formulas(orders, summary), config)


def exhaustive_tiny(
    n_max: int,
    t_max: int = 10,
    samples: dict[int, int] | None = None,
    seed: int = 0,
    config: EngineConfig | None = None,
) -> list[VerificationOutcome]:
    return _run(
        lambda runner, summary: runner.exhaustive_tiny(n_max, t_max, samples or {}, seed, summary),
        config,
    )


def gap_scan(
    n: int, samples: int, seed: int, config: EngineConfig | None = None
) -> list[VerificationOutcome]:
    return _run(lambda runner, summary: runner.gap_scan(n, samples, seed, summary), config)


def characterization_check(
    n: int,
    clause: str | None = None,
    samples: int = 0,
    seed: int = 0,
    config: EngineConfig | None = None,
) -> list[VerificationOutcome]:
    return _run(
        lambda runner, summary: runner.characterization_check(n, summary, clause, samples, seed),
        config,
    )


def random_battery(
    orders: Iterable[int], samples: int, seed: int, config: EngineConfig | None = None
) -> list[VerificationOutcome]:
    return _run(lambda runner, summary: runner.random_battery(orders, samples, seed, summary), config)
