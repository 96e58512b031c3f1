# ============================================================================
#  signbase
#  LICENSE: MIT
# ============================================================================
"""Full analysis pipeline for a single signed digraph."""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from signbase.config.models import EngineConfig
from signbase.engine.bases import BaseReport, base_report, closed_sssd_times
from signbase.engine.digraph import (
    Cycle,
    CycleCatalog,
    SignedDigraph,
    cycle_catalog,
    cycle_class_signs,
    find_distinguished_pair,
    require_primitive,
)
from signbase.engine.exponents import (
    CWalkReport,
    ExponentBound,
    ExponentReport,
    c_walk_report,
    exponent_report,
    exponent_upper_bound,
)
from signbase.errors import PowerfulPatternError


@dataclass
class AnalysisResult:
    """Everything computed for one digraph."""

    digraph: SignedDigraph
    catalog: CycleCatalog
    distinguished_pair: tuple[Cycle, Cycle] | None
    exponents: ExponentReport
    c_walks: CWalkReport
    bound: ExponentBound
    bases: BaseReport | None = None
    closed_sssd_times: tuple[int | None, ...] | None = None
    timing_ms: dict[str, float] = field(default_factory=dict)

    @property
    def nonpowerful(self) -> bool:
        return self.distinguished_pair is not None

    @property
    def class_signs(self) -> dict[int, frozenset[int]]:
        return cycle_class_signs(self.catalog)


class DigraphAnalyzer:
    """Runs primitivity, cycle, exponent and base analyses in sequence."""

    def __init__(self, config: EngineConfig | None = None):
        self.config = config or EngineConfig()

    def analyze(self, digraph: SignedDigraph, exp_only: bool = False) -> AnalysisResult:
        """
        Analyze a signed digraph.

        Args:
            digraph: The digraph to analyze
            exp_only: Skip the local-base computation

        Returns:
            AnalysisResult with all reports filled in

        Raises:
            NotPrimitiveError: If the digraph is not primitive
            PowerfulPatternError: If bases are requested for a powerful pattern
            CycleCapExceededError: If the digraph has too many simple cycles
        """
        timing: dict[str, float] = {}
        clock = time.perf_counter()

        def lap(stage: str) -> None:
            nonlocal clock
            now = time.perf_counter()
            timing[stage] = round((now - clock) * 1000, 3)
            clock = now

        require_primitive(digraph)
        catalog = cycle_catalog(digraph, self.config.max_cycles)
        pair = find_distinguished_pair(catalog)
        lap("cycles")

        exponents = exponent_report(digraph)
        c_walks = c_walk_report(digraph, catalog)
        bound = exponent_upper_bound(digraph, catalog, c_walks)
        lap("exponents")

        result = AnalysisResult(
            digraph=digraph,
            catalog=catalog,
            distinguished_pair=pair,
            exponents=exponents,
            c_walks=c_walks,
            bound=bound,
            timing_ms=timing,
        )
        if exp_only:
            return result

        if pair is None:
            raise PowerfulPatternError(
                "no distinguished cycle pair: the pattern is powerful and has no base"
            )
        result.bases = base_report(digraph)
        result.closed_sssd_times = closed_sssd_times(digraph)
        lap("bases")
        return result
