#!/usr/bin/env python3
"""Compare local outcome partitions across remote-setting scenario pairs.

For each pair, the two scenarios differ only in one distant party's
measurement basis; the local parties' partitions (class sizes and exact copy
indices) must be bit-identical, which is what the exact no-signaling check
asserts.
"""

from __future__ import annotations

import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parents[1]

from localworlds import audit as au  # noqa: E402
from localworlds.cli import load_scenario  # noqa: E402

PAIRS = [
    ("epr_zz", "epr_zx", ["A"]),
    ("ghz_xxx", "ghz_xxy", ["A", "B"]),
]


def main() -> int:
    failures = 0
    for name_a, name_b, parties in PAIRS:
        a = load_scenario(ROOT / "scenarios" / f"{name_a}.scn.json")
        b = load_scenario(ROOT / "scenarios" / f"{name_b}.scn.json")
        report = au.no_signaling_check(a, b, parties)
        verdict = "identical" if report.passed else "DIFFER"
        failures += 0 if report.passed else 1
        checked = ", ".join(c.subject for c in report.checks)
        print(f"{name_a} vs {name_b}: local partitions {verdict} ({checked})")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
