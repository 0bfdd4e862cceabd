#!/usr/bin/env python3
"""Regenerate the locality-violating trace fixtures under tests/fixtures/.

Each fixture starts from a clean epr_zz run and injects one specific leak of
spacelike-separated information; every one of them must fail the locality
audit (that failure is what demonstrates the audit has power).
"""

from __future__ import annotations

import copy
import json
from pathlib import Path

ROOT = Path(__file__).resolve().parents[1]
FIXTURES = ROOT / "tests" / "fixtures"


def mutate_provenance_leak(trace):
    """M_A's record claims Bob's spacelike measurement as provenance."""
    for row in trace.records:
        if row.get("id") == "MA":
            row["post_provenance"] = sorted(set(row["post_provenance"]) | {"MB"})
    return trace


def mutate_record_leak(trace):
    """M_A's record is replaced by the meeting record, i.e. it already
    reflects Bob's outcome."""
    f_digest = next(r for r in trace.records if r.get("id") == "F")["post"]["A"]
    for row in trace.records:
        if row.get("id") == "MA":
            row["post"] = {sid: f_digest for sid in row["post"]}
    return trace


def mutate_pre_chain(trace):
    """M_A's pre-record stops chaining from the source record."""
    for row in trace.records:
        if row.get("id") == "MA":
            row["pre"]["a"] = "0" * 64
    return trace


MUTATIONS = {
    "epr_zz_provleak": mutate_provenance_leak,
    "epr_zz_recordleak": mutate_record_leak,
    "epr_zz_prechain": mutate_pre_chain,
}


def main() -> None:
    from localworlds import worlds as wd
    from localworlds.cli import load_scenario, write_trace

    scenario = load_scenario(ROOT / "scenarios" / "epr_zz.scn.json")
    clean, _ = wd.run_scenario(scenario)
    FIXTURES.mkdir(parents=True, exist_ok=True)
    for name, mutate in MUTATIONS.items():
        trace = mutate(copy.deepcopy(clean))
        path = FIXTURES / f"{name}.trace.jsonl"
        write_trace(trace, path)
        print(f"wrote {path}")


if __name__ == "__main__":
    main()
