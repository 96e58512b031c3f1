# ============================================================================
#  signbase
#  LICENSE: MIT
# ============================================================================
"""JSON report builder."""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Protocol


class SupportsToDict(Protocol):
    def to_dict(self) -> dict[str, Any]: ...


def canonical_json(data: Any) -> str:
    """Sorted keys, two-space indent, trailing newline: byte-identical for equal data."""
    return json.dumps(data, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


class JSONReportBuilder:
    """Build canonical JSON reports."""

    def render(self, report: SupportsToDict) -> str:
        return canonical_json(report.to_dict())

    def build(self, report: SupportsToDict, output_path: Path) -> Path:
        """
        Write a JSON report file.

        Args:
            report: Any report model with ``to_dict``
            output_path: Path for output file

        Returns:
            Path to generated file
        """
        output_path.parent.mkdir(parents=True, exist_ok=True)
        output_path.write_text(self.render(report), encoding="utf-8")
        return output_path
