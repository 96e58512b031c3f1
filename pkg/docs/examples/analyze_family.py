#!/usr/bin/env python3
"""
Analyze named family members through the API.

Usage:
    python analyze_family.py
    python analyze_family.py --n 9
"""

import argparse
from pathlib import Path

from signbase.engine.analysis import DigraphAnalyzer
from signbase.families.generators import Family, FamilySpec, Preset, SignPolicy, generate
from signbase.reports.generator import ReportGenerator
from signbase.reports.json_report import JSONReportBuilder


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n", type=int, default=7)
    args = parser.parse_args()

    analyzer = DigraphAnalyzer()
    generator = ReportGenerator()

    for family, preset in ((Family.D1, Preset.D1_SIGNED), (Family.D2, Preset.D2_SAME)):
        spec = FamilySpec(family=family, n=args.n, policy=SignPolicy.PRESET, preset=preset)
        result = analyzer.analyze(generate(spec))
        print(f"{spec.descriptor()}: exp(S)={result.exponents.exponent} l(S)={result.bases.base}")
        print(f"  ordered l(k): {list(result.bases.ordered)}")

        output = Path(f"{spec.descriptor()}.json")
        JSONReportBuilder().build(generator.analysis_report(spec.descriptor(), result), output)
        print(f"  report: {output}")


if __name__ == "__main__":
    main()
