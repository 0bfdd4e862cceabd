#!/usr/bin/env python3
"""Run every shipped scenario, audit its trace, and tabulate the results.

Writes traces and statistics under the default output directory (or
$LOCALWORLDS_OUT) and prints one row per scenario: partitions, meeting
products, residues, audit verdict and detected perfect correlations.
"""

from __future__ import annotations

import os
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parents[1]

from localworlds import audit as au  # noqa: E402
from localworlds import worlds as wd  # noqa: E402
from localworlds.cli import load_scenario, write_stats, write_trace  # noqa: E402


def main() -> int:
    out = Path(os.environ.get("LOCALWORLDS_OUT", ROOT / "out"))
    out.mkdir(parents=True, exist_ok=True)
    failures = 0
    for path in sorted((ROOT / "scenarios").glob("*.scn.json")):
        scenario = load_scenario(path)
        trace, stats = wd.run_scenario(scenario)
        write_trace(trace, out / f"{scenario.name}.trace.jsonl")
        write_stats(stats, scenario, out / f"{scenario.name}.stats.csv")
        report = au.locality_audit(trace, scenario)
        findings = au.detect_perfect_correlations(trace, scenario)
        verdict = "PASS" if report.passed else "FAIL"
        failures += 0 if report.passed else 1
        products = []
        for eid, groups in stats.meetings.items():
            prods = set()
            for g in groups:
                prod = 1
                for v in g["outcomes"].values():
                    prod *= v
                prods.add(prod)
            products.append(f"{eid}:{'/'.join(f'{p:+d}' for p in sorted(prods))}")
        causes = ", ".join(f"{f.constraint}@{f.common_cause}" for f in findings) or "-"
        print(f"{scenario.name:<18} audit={verdict:<4} "
              f"meetings[{' '.join(products) or '-'}] correlations[{causes}]")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
