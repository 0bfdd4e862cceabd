"""Command-line entry point and the on-disk file formats.

Scenario and correlation-spec files are JSON; trace logs are JSON lines (one
header line, one line per event) and statistics tables are CSV with a header
row.  Exit status contract:

* 0 -- command completed (run succeeded, search finished, audit passed)
* 1 -- domain failure: scenario validation error, audit failure, search guard
* 2 -- usage or file errors (missing/corrupt inputs, bad flags)

All randomness is confined to the scenario seed; outputs for a fixed
(scenario, seed) pair are byte-identical across runs.  The default output
directory is ``$LOCALWORLDS_OUT`` or ``./out``.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from pathlib import Path

from . import audit as audit_mod
from . import hv_search as hv
from . import spacetime as st
from . import worlds as wd
from .correlations import CorrelationSpec, spec_from_dict
from .hv_search import SearchSizeError, WorldCountError

OUT_ENV = "LOCALWORLDS_OUT"

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_USAGE = 2


# -- file formats -------------------------------------------------------------


def load_scenario(path: str | Path, n: int | None = None,
                  seed: int | None = None) -> wd.Scenario:
    data = json.loads(Path(path).read_text())
    if n is not None:
        data["ensemble"] = n
    if seed is not None:
        data["seed"] = seed
    return wd.scenario_from_dict(data)


def save_scenario(scenario: wd.Scenario, path: str | Path) -> None:
    Path(path).write_text(json.dumps(scenario.to_dict(), indent=2) + "\n")


def load_spec(path: str | Path) -> CorrelationSpec:
    return spec_from_dict(json.loads(Path(path).read_text()))


def write_trace(trace: wd.TraceLog, path: str | Path) -> None:
    lines = [json.dumps({"type": "header", **trace.header}, sort_keys=True)]
    lines += [json.dumps(r, sort_keys=True) for r in trace.records]
    Path(path).write_text("\n".join(lines) + "\n")


def read_trace(path: str | Path) -> wd.TraceLog:
    header: dict = {}
    records: list[dict] = []
    for line in Path(path).read_text().splitlines():
        if not line.strip():
            continue
        row = json.loads(line)
        if row.get("type") == "header":
            header = {k: v for k, v in row.items() if k != "type"}
        else:
            records.append(row)
    if not header:
        raise audit_mod.TraceIntegrityError(f"{path}: no trace header line")
    return wd.TraceLog(header=header, records=records)


def write_stats(stats: wd.RunStatistics, scenario: wd.Scenario, path: str | Path) -> None:
    events = {e.id: e for e in scenario.events}
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["event", "kind", "outcomes", "product", "count", "frequency"])
        for eid, parts in stats.partitions.items():
            measurer = events[eid].measurer
            total = sum(len(v) for v in parts[measurer].values())
            for val, idx in sorted(parts[measurer].items(), reverse=True):
                w.writerow([eid, "measurement", f"{val:+d}", f"{val:+d}",
                            len(idx), f"{len(idx) / total:.6f}"])
        for eid, groups in stats.meetings.items():
            total = sum(g["count"] for g in groups)
            for g in groups:
                outs = " ".join(f"{k}={v:+d}" for k, v in sorted(g["outcomes"].items()))
                prod = 1
                for v in g["outcomes"].values():
                    prod *= v
                w.writerow([eid, "meeting", outs, f"{prod:+d}", g["count"],
                            f"{g['count'] / total:.6f}" if total else "0"])


def meeting_summary(stats: wd.RunStatistics, scenario: wd.Scenario) -> list[str]:
    events = {e.id: e for e in scenario.events}
    lines = []
    for eid, groups in stats.meetings.items():
        total = sum(g["count"] for g in groups)
        if not total:
            lines.append(f"{eid}: no pairings")
            continue
        by_product: dict[int, int] = {}
        meas_ids = sorted({k for g in groups for k in g["outcomes"]})
        for g in groups:
            prod = 1
            for v in g["outcomes"].values():
                prod *= v
            by_product[prod] = by_product.get(prod, 0) + g["count"]
        settings = "".join(events[i].observable for i in meas_ids)
        for prod, count in sorted(by_product.items(), reverse=True):
            lines.append(f"{eid}: {settings} product = {prod:+d} in "
                         f"{100.0 * count / total:.1f}% of pairings ({count}/{total})")
    return lines


# -- subcommands ---------------------------------------------------------------


def cmd_run(args: argparse.Namespace) -> int:
    try:
        scenario = load_scenario(args.scenario, args.n, args.seed)
    except FileNotFoundError:
        print(f"error: scenario file not found: {args.scenario}", file=sys.stderr)
        return EXIT_USAGE
    except (json.JSONDecodeError, KeyError) as exc:
        print(f"error: cannot parse scenario: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        trace, stats = wd.run_scenario(scenario)
    except wd.ScenarioError as exc:
        print(f"validation error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    out = Path(args.out or os.environ.get(OUT_ENV, "out"))
    out.mkdir(parents=True, exist_ok=True)
    trace_path = out / f"{scenario.name}.trace.jsonl"
    stats_path = out / f"{scenario.name}.stats.csv"
    write_trace(trace, trace_path)
    write_stats(stats, scenario, stats_path)
    print(f"scenario {scenario.name}: N={scenario.ensemble} seed={scenario.seed}")
    for eid, parts in stats.partitions.items():
        sizes = {f"{v:+d}": len(ix) for v, ix in
                 sorted(next(iter(parts.values())).items(), reverse=True)}
        print(f"{eid}: partition {sizes}")
    for line in meeting_summary(stats, scenario):
        print(line)
    residue = {k: v for k, v in stats.residues.items() if v}
    if residue:
        print(f"rounding residue (unpaired lives): {residue}")
    print(f"trace: {trace_path}")
    print(f"stats: {stats_path}")
    return EXIT_OK


def cmd_hv_search(args: argparse.Namespace) -> int:
    try:
        spec = load_spec(args.spec)
    except FileNotFoundError:
        print(f"error: spec file not found: {args.spec}", file=sys.stderr)
        return EXIT_USAGE
    except (json.JSONDecodeError, KeyError, ValueError) as exc:
        print(f"error: cannot parse spec: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        if args.mode == "single-world":
            report = hv.enumerate_single_world(spec)
            report.trace = hv.derive_contradiction_trace(spec)
        elif args.mode == "divergent":
            anchor = tuple(args.anchor) if args.anchor else None
            worlds = args.worlds
            if worlds is None:
                matches = [c for c in spec.constraints
                           if anchor is None or c.settings == anchor]
                if not matches:
                    raise WorldCountError(f"anchor {anchor} matches no constraint")
                worlds = len(hv.satisfying_combinations(matches[0]))
            report = hv.enumerate_divergent_worlds(spec, worlds, anchor)
        else:
            report = hv.many_worlds_witness(spec)
    except (SearchSizeError, WorldCountError) as exc:
        print(f"search guard: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    verdict = "SAT" if report.satisfiable else "UNSAT"
    print(f"{verdict}, {report.total_searched} searched "
          f"({report.witness_count} witnesses)")
    if report.trace is not None and report.trace.steps:
        for line in report.trace.lines():
            print("  " + line)
    print(json.dumps(report.to_dict(), indent=2))
    return EXIT_OK


def cmd_audit(args: argparse.Namespace) -> int:
    try:
        trace = read_trace(args.trace)
        scenario = load_scenario(args.scenario)
    except FileNotFoundError as exc:
        print(f"error: file not found: {exc.filename}", file=sys.stderr)
        return EXIT_USAGE
    except (json.JSONDecodeError, KeyError) as exc:
        print(f"error: cannot parse input: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        report = audit_mod.locality_audit(trace, scenario)
    except audit_mod.TraceIntegrityError as exc:
        print(f"integrity error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except wd.ScenarioError as exc:
        print(f"validation error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    for c in report.checks:
        status = "pass" if c.passed else "FAIL"
        detail = f"  ({c.detail})" if c.detail else ""
        print(f"[{status}] {c.check} {c.subject}{detail}")
    print(f"overall: {'PASS' if report.passed else 'FAIL'} "
          f"({len(report.checks)} checks, {len(report.failures())} failures)")
    return EXIT_OK if report.passed else EXIT_DOMAIN


def cmd_demo_cascade(args: argparse.Namespace) -> int:
    if not abs(args.v) < 1.0:
        print(f"error: |v| must be < 1, got {args.v}", file=sys.stderr)
        return EXIT_USAGE
    line1 = st.Worldline(0.0, 0.0)
    line2 = st.Worldline(args.offset, args.v)
    frames = (st.Frame(0.0, "S"), st.Frame(args.v, "S'"))
    trigger = st.Event(args.trigger_t, 0.0, id="E1")
    cascade = st.branching_cascade_demo(line1, line2, frames, trigger, depth=args.depth)
    print(f"{'event':<6} {'object':<7} {'t':>12} {'x':>12} {'frame':<6} {'t_frame':>12}")
    for step in cascade.steps:
        print(f"{step.event.id or 'E1':<6} {step.worldline:<7} {step.event.t:>12.6f} "
              f"{step.event.x:>12.6f} {step.induced_in or '-':<6} {step.t_in_frame:>12.6f}")
    if cascade.degenerate:
        print("degenerate: co-moving worldlines share simultaneity; no regress")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="localworlds",
        description="local-worlds simulation, hidden-variable searches and locality audits")
    sub = p.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="run a scenario and write trace + statistics")
    run.add_argument("--scenario", required=True, help="scenario JSON file")
    run.add_argument("--n", type=int, default=None, help="override ensemble size")
    run.add_argument("--seed", type=int, default=None, help="override seed")
    run.add_argument("--out", default=None, help=f"output directory (default ${OUT_ENV} or ./out)")
    run.set_defaults(func=cmd_run)

    search = sub.add_parser("hv-search", help="exhaustive hidden-variable search over a spec")
    search.add_argument("--spec", required=True, help="correlation spec JSON file")
    search.add_argument("--mode", choices=["single-world", "divergent", "multivalued"],
                        default="single-world")
    search.add_argument("--worlds", type=int, default=None,
                        help="world count for divergent mode (default: anchor combinations)")
    search.add_argument("--anchor", nargs="+", default=None,
                        help="anchor settings tuple for divergent mode, e.g. X X X")
    search.set_defaults(func=cmd_hv_search)

    aud = sub.add_parser("audit", help="locality-audit a trace against its scenario")
    aud.add_argument("--trace", required=True, help="trace JSONL file")
    aud.add_argument("--scenario", required=True, help="scenario JSON file")
    aud.set_defaults(func=cmd_audit)

    demo = sub.add_parser("demo-cascade", help="print the frame-relative branching cascade")
    demo.add_argument("--v", type=float, default=0.5, help="relative velocity of object 2")
    demo.add_argument("--depth", type=int, default=6, help="number of cascade events")
    demo.add_argument("--offset", type=float, default=1.0, help="object 2 position at t=0")
    demo.add_argument("--trigger-t", type=float, default=2.0, help="trigger time on object 1")
    demo.set_defaults(func=cmd_demo_cascade)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
