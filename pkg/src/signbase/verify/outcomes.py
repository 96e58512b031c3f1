# ============================================================================
#  signbase
#  LICENSE: MIT
# ============================================================================
"""Verification outcomes and their thread-safe aggregation."""

from __future__ import annotations

import threading
from collections.abc import Iterable
from dataclasses import dataclass, field
from datetime import datetime, timedelta
from typing import Any


@dataclass(frozen=True)
class VerificationOutcome:
    """One checked claim on one instance."""

    suite: str
    instance: str
    claim: str
    expected: Any
    computed: Any
    passed: bool
    witness: str = ""

    @property
    def sort_key(self) -> tuple[str, str, str]:
        return (self.suite, self.instance, self.claim)

    @property
    def status(self) -> str:
        return "PASS" if self.passed else "FAIL"

    def to_dict(self) -> dict[str, Any]:
        return {
            "suite": self.suite,
            "instance": self.instance,
            "claim": self.claim,
            "expected": self.expected,
            "computed": self.computed,
            "passed": self.passed,
            "witness": self.witness,
        }


def check(
    suite: str,
    instance: str,
    claim: str,
    expected: Any,
    computed: Any,
    passed: bool | None = None,
    witness: str = "",
) -> VerificationOutcome:
    """Build an outcome; equality decides ``passed`` unless given. Witnesses are kept on failure only."""
    if passed is None:
        passed = expected == computed
    return VerificationOutcome(
        suite=suite,
        instance=instance,
        claim=claim,
        expected=expected,
        computed=computed,
        passed=passed,
        witness="" if passed else witness,
    )


@dataclass
class VerificationSummary:
    """Aggregate counts over a verification run."""

    start_time: datetime = field(default_factory=datetime.now)
    end_time: datetime | None = None

    total: int = 0
    passed: int = 0
    failed: int = 0
    per_suite: dict[str, dict[str, int]] = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)
    outcomes: list[VerificationOutcome] = field(default_factory=list)

    _lock: threading.Lock = field(default_factory=threading.Lock, repr=False)

    def add(self, outcome: VerificationOutcome) -> None:
        """Thread-safe addition of one outcome."""
        with self._lock:
            self.outcomes.append(outcome)
            self.total += 1
            counts = self.per_suite.setdefault(outcome.suite, {"passed": 0, "failed": 0})
            if outcome.passed:
                self.passed += 1
                counts["passed"] += 1
            else:
                self.failed += 1
                counts["failed"] += 1

    def extend(self, outcomes: Iterable[VerificationOutcome]) -> None:
        for outcome in outcomes:
            self.add(outcome)

    def add_note(self, note: str) -> None:
        """Thread-safe addition of a non-fatal remark (e.g. a short sample)."""
        with self._lock:
            self.notes.append(note)

    def finalize(self) -> None:
        """Mark the run complete and put outcomes in canonical order."""
        with self._lock:
            self.outcomes.sort(key=lambda o: o.sort_key)
            self.notes.sort()
        self.end_time = datetime.now()

    @property
    def processing_time(self) -> timedelta:
        end = self.end_time or datetime.now()
        return end - self.start_time

    @property
    def all_passed(self) -> bool:
        return self.failed == 0

    def to_dict(self) -> dict[str, Any]:
        """Counts only; wall-clock time is left out so reports stay reproducible."""
        return {
            "total": self.total,
            "passed": self.passed,
            "failed": self.failed,
            "per_suite": {name: dict(counts) for name, counts in sorted(self.per_suite.items())},
            "notes": list(self.notes),
        }
