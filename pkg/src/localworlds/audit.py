"""Post-hoc verification of simulated runs against the locality contract.

The locality audit never touches live simulator state: it walks a serialized
trace, rederives provenance and past light cones from the scenario geometry,
rebuilds every record from data available inside the cone, and demands
bit-equality with the digests the run wrote.  A trace that smuggled anything
across a spacelike separation cannot survive this: either its provenance
names an event outside the cone, or its record digest fails to reproduce from
cone-interior data alone.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Sequence

from . import hilbert as hb
from . import spacetime as st
from .worlds import (MEASUREMENT, MEETING, SOURCE, EventNode, Scenario, TraceLog,
                     assign_registers, record_digest, run_scenario)

SUPPORT_ATOL = 1e-12


class TraceIntegrityError(ValueError):
    """Trace cannot be interpreted against the scenario at all."""


class ComparisonError(ValueError):
    """No-signaling scenario pair differs in more than the remote setting."""


@dataclass
class AuditCheck:
    check: str
    subject: str
    passed: bool
    detail: str = ""


@dataclass
class AuditReport:
    checks: list[AuditCheck] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[AuditCheck]:
        return [c for c in self.checks if not c.passed]

    def add(self, check: str, subject: str, passed: bool, detail: str = "") -> None:
        self.checks.append(AuditCheck(check, subject, passed, detail))


def _rebuild_record(provenance: Sequence[str], events: Mapping[str, EventNode],
                    registers: Mapping[str, str],
                    carried_labels: Sequence[str] = ()) -> hb.StateVector:
    """Audit-side record reconstruction from provenance data only.

    Mirrors the published record semantics: payloads and ready registers enter
    in causal (t, id) order, measurement couplings act as they arrive, and any
    carried subsystem the provenance never touched stays in its fiducial
    ready state (records never shrink their label set).
    """
    chrono = sorted(provenance, key=lambda i: (events[i].t, events[i].id))
    state: hb.StateVector | None = None

    def ensure(label: str) -> None:
        nonlocal state
        if state is None:
            state = hb.basis_state(label)
        elif label not in state.labels:
            state = hb.tensor(state, hb.basis_state(label))

    for eid in chrono:
        ev = events[eid]
        if ev.kind == SOURCE:
            state = ev.state if state is None else hb.tensor(state, ev.state)
        elif ev.kind == MEASUREMENT:
            ensure(ev.system)
            ensure(registers[eid])
            state = hb.apply(hb.coupling_unitary(hb.observable(ev.observable),
                                                 ev.system, registers[eid]), state)
    for label in sorted(set(carried_labels)):
        ensure(label)
    if state is None:
        raise TraceIntegrityError(f"provenance {list(provenance)} rebuilds no record")
    return state


def locality_audit(trace: TraceLog, scenario: Scenario) -> AuditReport:
    """Recompute every post-event record from past-light-cone data only.

    Per event the audit asserts (i) the claimed provenance lies inside the
    event's past light cone, (ii) it equals the participants' pre-event
    provenance plus the event itself, (iii) the serialized record digest is
    bit-identical to the cone-interior reconstruction, and (iv) the pre-event
    digests chain back to the previous record of each participant.  Meetings
    additionally must pair only outcome combinations of nonzero joint weight.
    """
    report = AuditReport()
    events = {e.id: e for e in scenario.events}
    registers = assign_registers(scenario.events)
    coords = {e.id: e.coords for e in scenario.events}

    if trace.header.get("scenario_digest") not in (None, scenario.digest()):
        report.add("header", "scenario", False, "scenario digest mismatch")
        return report

    seen_post: dict[str, str] = {}
    seen_prov: dict[str, frozenset[str]] = {}
    seen_labels: dict[str, frozenset[str]] = {}
    for s in scenario.systems:
        rec = hb.basis_state(s.id)
        seen_post[s.id] = record_digest(rec.labels, rec.amplitudes, [])
        seen_prov[s.id] = frozenset()
        seen_labels[s.id] = frozenset({s.id})

    for row in trace.records:
        if row.get("type") != "event":
            continue
        eid = row.get("id")
        ev = events.get(eid)
        if ev is None:
            raise TraceIntegrityError(f"trace names unknown event {eid!r}")
        participants = list(row.get("participants", ()))
        if tuple(participants) != ev.involved():
            report.add("integrity", eid, False,
                       f"participants {participants} != scenario {ev.involved()}")
            continue

        for sid in participants:
            pre = row.get("pre", {}).get(sid)
            ok = pre == seen_post.get(sid)
            report.add("pre-chain", f"{eid}:{sid}", ok,
                       "" if ok else "pre-record does not chain from previous event")

        claimed = frozenset(row.get("post_provenance", ()))
        cone = st.past_light_cone(coords[eid], list(coords.values()))
        cone_ids = {c.id for c in cone} | {eid}
        outside = sorted(claimed - cone_ids)
        report.add("provenance-in-cone", eid, not outside,
                   "" if not outside else
                   f"provenance outside past light cone: {outside}")

        expected_prov = frozenset().union(*(seen_prov[s] for s in participants)) | {eid}
        ok = claimed == expected_prov
        report.add("provenance-chain", eid, ok,
                   "" if ok else f"claimed {sorted(claimed)} != derived {sorted(expected_prov)}")

        usable = claimed & cone_ids
        carried = frozenset().union(*(seen_labels[s] for s in participants))
        try:
            rebuilt = _rebuild_record(usable, events, registers, sorted(carried))
            digest = record_digest(rebuilt.labels, rebuilt.amplitudes, usable)
        except Exception as exc:  # malformed provenance
            rebuilt, digest = None, f"<rebuild failed: {exc}>"
        for sid in participants:
            post = row.get("post", {}).get(sid)
            ok = post == digest
            report.add("record-reconstruction", f"{eid}:{sid}", ok,
                       "" if ok else "record digest does not reproduce from cone data")

        if ev.kind == MEETING and rebuilt is not None:
            meas = [events[i] for i in sorted(usable)
                    if events[i].kind == MEASUREMENT]
            meas.sort(key=lambda m: (m.t, m.id))
            settings = {registers[m.id]: hb.observable(m.observable) for m in meas}
            dist = hb.born_distribution(rebuilt, settings) if meas else {(): 1.0}
            order = [m.id for m in meas]
            bad = []
            for g in row.get("pairings", ()):
                outs = {k: int(v) for k, v in g["outcomes"].items()}
                key = tuple(outs[i] for i in order)
                if dist.get(key, 0.0) <= SUPPORT_ATOL:
                    bad.append(outs)
            report.add("pairing-support", eid, not bad,
                       "" if not bad else f"zero-amplitude pairings: {bad}")

        new_labels = (frozenset(rebuilt.labels) if rebuilt is not None
                      else frozenset(row.get("post_labels", ())))
        for sid in participants:
            seen_post[sid] = row.get("post", {}).get(sid)
            seen_prov[sid] = claimed
            seen_labels[sid] = new_labels
    if not report.checks:
        raise TraceIntegrityError("trace contains no event records")
    return report


def _scenario_delta(a: Scenario, b: Scenario) -> EventNode:
    """The single measurement whose observable differs between the scenarios."""
    if a.ensemble != b.ensemble:
        raise ComparisonError("scenario pair differs in ensemble size")
    if a.seed != b.seed:
        raise ComparisonError("scenario pair differs in seed")
    sys_a = {(s.id, s.x0, s.v) for s in a.systems}
    sys_b = {(s.id, s.x0, s.v) for s in b.systems}
    if sys_a != sys_b:
        raise ComparisonError("scenario pair differs in systems")
    ev_a = {e.id: e for e in a.events}
    ev_b = {e.id: e for e in b.events}
    if set(ev_a) != set(ev_b):
        raise ComparisonError("scenario pair differs in event sets")
    changed = []
    for eid, ea in ev_a.items():
        eb = ev_b[eid]
        same_geom = (ea.kind, ea.t, ea.x, ea.involved()) == (eb.kind, eb.t, eb.x, eb.involved())
        if not same_geom:
            raise ComparisonError(f"event {eid} differs beyond the measurement setting")
        if ea.kind == SOURCE:
            if not ea.state.allclose(eb.state):
                raise ComparisonError(f"source {eid} differs between scenarios")
        elif ea.kind == MEASUREMENT and ea.observable != eb.observable:
            changed.append(ea)
    if len(changed) != 1:
        raise ComparisonError(f"expected exactly one changed setting, found {len(changed)}")
    return changed[0]


def no_signaling_check(scenario_a: Scenario, scenario_b: Scenario,
                       local_party: str | Sequence[str]) -> AuditReport:
    """Remote setting changes must leave local outcome partitions bit-identical.

    Both scenarios run; for every measurement event involving a local party
    (and spacelike separated from the changed event) the outcome partition --
    class sizes and which copy indices land in which class -- must match
    exactly between the runs.
    """
    parties = [local_party] if isinstance(local_party, str) else list(local_party)
    changed = _scenario_delta(scenario_a, scenario_b)
    report = AuditReport()
    _, stats_a = run_scenario(scenario_a)
    _, stats_b = run_scenario(scenario_b)
    compared = 0
    for ev in scenario_a.events:
        if ev.kind != MEASUREMENT or ev.id == changed.id:
            continue
        locals_here = [p for p in parties if p in (ev.measurer, ev.system)]
        if not locals_here:
            continue
        if st.interval_class(ev.coords, changed.coords) != st.SPACELIKE:
            raise ComparisonError(
                f"event {ev.id} is not spacelike separated from changed event {changed.id}")
        for p in locals_here:
            pa = stats_a.partitions[ev.id][p]
            pb = stats_b.partitions[ev.id][p]
            ok = pa == pb
            compared += 1
            report.add("no-signaling", f"{ev.id}:{p}", ok,
                       "" if ok else "local partition differs with remote setting")
    if compared == 0:
        raise ComparisonError(f"no local measurement events found for parties {parties}")
    return report


@dataclass
class CorrelationFinding:
    meeting: str
    events: tuple[str, ...]
    parties: tuple[str, ...]
    constraint: str
    product: int | None
    common_cause: str | None


def detect_perfect_correlations(trace: TraceLog, scenario: Scenario) -> list[CorrelationFinding]:
    """Scan meeting statistics for support-restricted correlations and their causes.

    For every meeting whose realized outcome combinations cover only part of
    the full outcome space, report the correlated measurement events, the
    product constraint they obey (when one exists), and the latest event that
    lies in the intersection of the measurements' past light cones and in the
    shared provenance of the correlated records.  ``common_cause=None`` means
    no such event exists, which would falsify local correlation for the trace.
    """
    events = {e.id: e for e in scenario.events}
    prov_at: dict[str, frozenset[str]] = {}
    for row in trace.records:
        if row.get("type") == "event":
            prov_at[row["id"]] = frozenset(row.get("post_provenance", ()))
    findings: list[CorrelationFinding] = []
    for row in trace.records:
        if row.get("type") != "event" or row.get("kind") != MEETING:
            continue
        pairings = row.get("pairings", ())
        if not pairings:
            continue
        support = {tuple(sorted((k, int(v)) for k, v in g["outcomes"].items()))
                   for g in pairings}
        meas_ids = sorted({k for g in pairings for k in g["outcomes"]})
        if not meas_ids:
            continue
        if len(support) >= 2 ** len(meas_ids):
            continue  # full support: nothing perfectly correlated
        products = set()
        for combo in support:
            prod = 1
            for _eid, v in combo:
                prod *= v
            products.add(prod)
        product = products.pop() if len(products) == 1 else None
        constraint = (
            "".join(events[i].observable for i in meas_ids) +
            (f"={product:+d}" if product is not None else " support-restricted"))
        parties = tuple(events[i].measurer for i in meas_ids)
        cones = [st.past_light_cone(events[i].coords,
                                    [e.coords for e in scenario.events])
                 for i in meas_ids]
        shared_ids = set.intersection(*(set(c.id for c in cone) for cone in cones))
        shared_prov = frozenset.intersection(*(prov_at[i] for i in meas_ids))
        candidates = [events[i] for i in shared_ids & shared_prov]
        cause = max(candidates, key=lambda e: (e.t, e.id)).id if candidates else None
        findings.append(CorrelationFinding(
            meeting=row["id"], events=tuple(meas_ids), parties=parties,
            constraint=constraint, product=product, common_cause=cause))
    return findings
