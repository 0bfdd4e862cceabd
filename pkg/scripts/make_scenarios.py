#!/usr/bin/env python3
"""Regenerate the shipped scenario corpus under scenarios/.

All geometry is collinear (1+1 dimensions, c = 1).  Worldlines are constant
velocity, so measurement and meeting points are chosen to lie exactly on the
participants' lines; validation re-checks co-location and causal order at
load time.
"""

from __future__ import annotations

import json
from pathlib import Path

ROOT = Path(__file__).resolve().parents[1]
OUT = ROOT / "scenarios"

EPR_SYSTEMS = [
    {"id": "a", "x0": 0.0, "v": -0.9},
    {"id": "b", "x0": 0.0, "v": 0.9},
    {"id": "A", "x0": -13.5, "v": 0.45},
    {"id": "B", "x0": 13.5, "v": -0.45},
]


def epr(name: str, obs_a: str, obs_b: str) -> dict:
    return {
        "name": name,
        "systems": EPR_SYSTEMS,
        "ensemble": 1000,
        "seed": 7,
        "events": [
            {"id": "S", "kind": "source", "t": 0.0, "x": 0.0,
             "participants": ["a", "b"], "state": "epr"},
            {"id": "MA", "kind": "measurement", "t": 10.0, "x": -9.0,
             "measurer": "A", "system": "a", "observable": obs_a},
            {"id": "MB", "kind": "measurement", "t": 10.0, "x": 9.0,
             "measurer": "B", "system": "b", "observable": obs_b},
            {"id": "F", "kind": "meeting", "t": 30.0, "x": 0.0,
             "participants": ["A", "B"]},
        ],
    }


def ghz(name: str, obs: tuple[str, str, str], pairwise: bool = False, seed: int = 7) -> dict:
    systems = [
        {"id": "a", "x0": 0.0, "v": -0.9},
        {"id": "b", "x0": 0.0, "v": 0.9},
        {"id": "c", "x0": 0.0, "v": 0.45},
        {"id": "A", "x0": -13.5, "v": 0.45},
        {"id": "B", "x0": 13.5, "v": -0.45},
    ]
    events = [
        {"id": "S", "kind": "source", "t": 0.0, "x": 0.0,
         "participants": ["a", "b", "c"], "state": "ghz"},
        {"id": "MA", "kind": "measurement", "t": 10.0, "x": -9.0,
         "measurer": "A", "system": "a", "observable": obs[0]},
        {"id": "MB", "kind": "measurement", "t": 10.0, "x": 9.0,
         "measurer": "B", "system": "b", "observable": obs[1]},
        {"id": "MC", "kind": "measurement", "t": 10.0, "x": 4.5,
         "measurer": "C", "system": "c", "observable": obs[2]},
    ]
    if pairwise:
        # C's line passes through MC, F_BC and F_AC; meetings happen pairwise
        systems.append({"id": "C", "x0": 6.0, "v": -0.15})
        events += [
            {"id": "FBC", "kind": "meeting", "t": 25.0, "x": 2.25,
             "participants": ["B", "C"]},
            {"id": "FAB", "kind": "meeting", "t": 30.0, "x": 0.0,
             "participants": ["A", "B"]},
            {"id": "FAC", "kind": "meeting", "t": 32.5, "x": 1.125,
             "participants": ["A", "C"]},
        ]
    else:
        systems.append({"id": "C", "x0": 6.75, "v": -0.225})
        events.append({"id": "F", "kind": "meeting", "t": 30.0, "x": 0.0,
                       "participants": ["A", "B", "C"]})
    return {"name": name, "systems": systems, "ensemble": 1000, "seed": seed,
            "events": events}


def seq_remeasure() -> dict:
    return {
        "name": "seq_remeasure",
        "systems": [
            {"id": "a", "x0": 0.0, "v": 0.0},
            {"id": "b", "x0": 0.0, "v": 0.9},
            {"id": "A", "x0": 0.0, "v": 0.0},
            {"id": "B", "x0": 6.0, "v": -0.3},
        ],
        "ensemble": 1000,
        "seed": 7,
        "events": [
            {"id": "S", "kind": "source", "t": 0.0, "x": 0.0,
             "participants": ["a", "b"], "state": "epr"},
            {"id": "MA1", "kind": "measurement", "t": 5.0, "x": 0.0,
             "measurer": "A", "system": "a", "observable": "Z"},
            {"id": "MB", "kind": "measurement", "t": 5.0, "x": 4.5,
             "measurer": "B", "system": "b", "observable": "Z"},
            {"id": "MA2", "kind": "measurement", "t": 7.0, "x": 0.0,
             "measurer": "A", "system": "a", "observable": "Z"},
            {"id": "F", "kind": "meeting", "t": 20.0, "x": 0.0,
             "participants": ["A", "B"]},
        ],
    }


def two_sources() -> dict:
    return {
        "name": "two_sources",
        "systems": [
            {"id": "a", "x0": -5.0, "v": -0.4},
            {"id": "b", "x0": -5.0, "v": 0.9},
            {"id": "c", "x0": 5.0, "v": -0.4},
            {"id": "d", "x0": 5.0, "v": 0.9},
            {"id": "A", "x0": -12.5, "v": 0.35},
            {"id": "C", "x0": 2.5, "v": -0.15},
        ],
        "ensemble": 1000,
        "seed": 7,
        "events": [
            {"id": "S1", "kind": "source", "t": 0.0, "x": -5.0,
             "participants": ["a", "b"], "state": "epr"},
            {"id": "S2", "kind": "source", "t": 0.0, "x": 5.0,
             "participants": ["c", "d"], "state": "epr"},
            {"id": "MA", "kind": "measurement", "t": 10.0, "x": -9.0,
             "measurer": "A", "system": "a", "observable": "Z"},
            {"id": "MC", "kind": "measurement", "t": 10.0, "x": 1.0,
             "measurer": "C", "system": "c", "observable": "Z"},
            {"id": "F", "kind": "meeting", "t": 30.0, "x": -2.0,
             "participants": ["A", "C"]},
        ],
    }


SCENARIOS = {
    "epr_zz": epr("epr_zz", "Z", "Z"),
    "epr_zx": epr("epr_zx", "Z", "X"),
    "ghz_xxx": ghz("ghz_xxx", ("X", "X", "X")),
    "ghz_yyx": ghz("ghz_yyx", ("Y", "Y", "X")),
    "ghz_yxy": ghz("ghz_yxy", ("Y", "X", "Y")),
    "ghz_xyy": ghz("ghz_xyy", ("X", "Y", "Y")),
    "ghz_xxy": ghz("ghz_xxy", ("X", "X", "Y")),
    "ghz_xxx_pairwise": ghz("ghz_xxx_pairwise", ("X", "X", "X"), pairwise=True),
    "ghz_random": ghz("ghz_random", ("random_xy",) * 3, seed=11),
    "seq_remeasure": seq_remeasure(),
    "two_sources": two_sources(),
}

SPECS = {
    "ghz": {
        "parties": ["A", "B", "C"],
        "settings": ["X", "Y"],
        "constraints": [
            {"settings": ["X", "X", "X"], "required": -1},
            {"settings": ["Y", "Y", "X"], "required": 1},
            {"settings": ["Y", "X", "Y"], "required": 1},
            {"settings": ["X", "Y", "Y"], "required": 1},
        ],
    },
    "epr_zz": {
        "parties": ["A", "B"],
        "settings": ["Z"],
        "constraints": [{"settings": ["Z", "Z"], "required": 1}],
    },
}


def main() -> None:
    OUT.mkdir(exist_ok=True)
    for name, data in SCENARIOS.items():
        path = OUT / f"{name}.scn.json"
        path.write_text(json.dumps(data, indent=2) + "\n")
        print(f"wrote {path}")
    for name, data in SPECS.items():
        path = OUT / f"{name}.spec.json"
        path.write_text(json.dumps(data, indent=2) + "\n")
        print(f"wrote {path}")


if __name__ == "__main__":
    main()
