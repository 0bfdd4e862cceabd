"""Ensembles of world-line copies carrying fixed wave-field records.

Every point object (particle or observer) starts the run with N qualitatively
identical copies ("lives").  Events never create or destroy copies: a
measurement partitions the participating lives into outcome classes sized by
largest-remainder apportionment of the Born weights, and a meeting pairs
lives across participants so that only outcome combinations with nonzero
joint amplitude ever share a world.

The record carried past an event is the wave-field value at that event: a
state vector over every subsystem whose history has merged there, together
with the event provenance that produced it.  Records are recomputed from
provenance alone (source payloads, measurement couplings in causal order), so
a record can never depend on anything outside the past light cone of its
event.  Between events records are transported unchanged.

All dynamics are deterministic.  The scenario seed only resolves optional
random setting selection (observable ``"random_xy"``) at load time.
"""

from __future__ import annotations

import hashlib
import json
import random
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

import numpy as np

from . import hilbert as hb
from . import spacetime as st
from .correlations import epr_state, ghz_state, x_correlated_pair

SUPPORT_ATOL = 1e-12
COLOCATION_ATOL = 1e-9

SOURCE = "source"
MEASUREMENT = "measurement"
MEETING = "meeting"


class ScenarioError(ValueError):
    """Scenario fails validation (geometry, causality, payloads)."""


class ProportionError(ScenarioError):
    """Ensemble too small for the distinct outcome branches it must carry."""


@dataclass(frozen=True)
class SystemSpec:
    """Point object on the constant-velocity worldline x(t) = x0 + v t."""

    id: str
    x0: float
    v: float

    @property
    def worldline(self) -> st.Worldline:
        return st.Worldline(self.x0, self.v)


@dataclass(frozen=True)
class EventNode:
    """Typed spacetime event: source, measurement or meeting."""

    id: str
    kind: str
    t: float
    x: float
    participants: tuple[str, ...] = ()
    state: hb.StateVector | None = None      # source payload
    measurer: str = ""                       # measurement
    system: str = ""
    observable: str = ""

    @property
    def coords(self) -> st.Event:
        return st.Event(self.t, self.x, id=self.id)

    def involved(self) -> tuple[str, ...]:
        if self.kind == MEASUREMENT:
            return (self.measurer, self.system)
        return self.participants


@dataclass
class Scenario:
    name: str
    systems: list[SystemSpec]
    events: list[EventNode]
    ensemble: int
    seed: int = 0

    def system(self, sid: str) -> SystemSpec:
        for s in self.systems:
            if s.id == sid:
                return s
        raise ScenarioError(f"unknown system {sid!r}")

    def to_dict(self) -> dict:
        events = []
        for e in self.events:
            d: dict = {"id": e.id, "kind": e.kind, "t": e.t, "x": e.x}
            if e.kind == SOURCE:
                d["participants"] = list(e.participants)
                d["state"] = {
                    "labels": list(e.state.labels),
                    "amplitudes": [[z.real, z.imag] for z in e.state.amplitudes],
                }
            elif e.kind == MEASUREMENT:
                d.update(measurer=e.measurer, system=e.system, observable=e.observable)
            else:
                d["participants"] = list(e.participants)
            events.append(d)
        return {
            "name": self.name,
            "systems": [{"id": s.id, "x0": s.x0, "v": s.v} for s in self.systems],
            "ensemble": self.ensemble,
            "seed": self.seed,
            "events": events,
        }

    def digest(self) -> str:
        blob = json.dumps(self.to_dict(), sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(blob.encode()).hexdigest()


_NAMED_STATES = {
    "epr": epr_state,
    "ghz": ghz_state,
    "x_pair": x_correlated_pair,
}


def resolve_payload(spec: str | Mapping, participants: Sequence[str]) -> hb.StateVector:
    """Build a source payload from a named state or inline amplitudes."""
    labels = tuple(sorted(participants))
    if isinstance(spec, str):
        if spec in _NAMED_STATES:
            return _NAMED_STATES[spec](labels)
        if spec == "up":
            return hb.StateVector(labels, [1.0] + [0.0] * (2 ** len(labels) - 1))
        if spec == "down":
            amps = [0.0] * 2 ** len(labels)
            amps[-1] = 1.0
            return hb.StateVector(labels, amps)
        raise ScenarioError(f"unknown named state {spec!r}")
    amps = [complex(re, im) for re, im in spec["amplitudes"]]
    given = tuple(spec.get("labels", labels))
    return hb.StateVector(given, amps)


def scenario_from_dict(data: Mapping) -> Scenario:
    """Decode a scenario, resolving seeded random settings at load time."""
    systems = [SystemSpec(d["id"], float(d["x0"]), float(d["v"])) for d in data["systems"]]
    seed = int(data.get("seed", 0))
    rng = random.Random(seed)
    events = []
    raw = sorted(data["events"], key=lambda d: (float(d["t"]), str(d["id"])))
    for d in raw:
        kind = d["kind"]
        if kind == SOURCE:
            parts = tuple(d["participants"])
            payload = resolve_payload(d["state"], parts)
            events.append(EventNode(d["id"], SOURCE, float(d["t"]), float(d["x"]),
                                    participants=parts, state=payload))
        elif kind == MEASUREMENT:
            obs = d["observable"]
            if obs == "random_xy":
                obs = rng.choice(["X", "Y"])
            events.append(EventNode(d["id"], MEASUREMENT, float(d["t"]), float(d["x"]),
                                    measurer=d["measurer"], system=d["system"],
                                    observable=obs))
        elif kind == MEETING:
            events.append(EventNode(d["id"], MEETING, float(d["t"]), float(d["x"]),
                                    participants=tuple(d["participants"])))
        else:
            raise ScenarioError(f"unknown event kind {kind!r}")
    return Scenario(str(data.get("name", "scenario")), systems, events,
                    int(data["ensemble"]), seed)


@dataclass(frozen=True)
class LogEntry:
    event_id: str
    register: str
    observable: str
    value: int


@dataclass(frozen=True)
class LocalRecord:
    """Wave-field value carried along a worldline: state + event provenance."""

    value: hb.StateVector
    provenance: frozenset[str]

    @property
    def labels(self) -> tuple[str, ...]:
        return self.value.labels


class World:
    """Lives across systems whose outcome histories have merged."""

    __slots__ = ("members", "history")

    def __init__(self, members: dict[str, "Life"], history: dict[str, int]):
        self.members = members
        self.history = history


@dataclass
class Life:
    """One world-line copy of a point object."""

    system: str
    index: int
    record: LocalRecord
    log: list[LogEntry] = field(default_factory=list)
    world: World = None  # type: ignore[assignment]

    def logged_value(self, event_id: str) -> int | None:
        for entry in self.log:
            if entry.event_id == event_id:
                return entry.value
        return None


@dataclass
class TraceLog:
    header: dict
    records: list[dict] = field(default_factory=list)


@dataclass
class RunStatistics:
    partitions: dict = field(default_factory=dict)       # event -> system -> {value: [idx]}
    meetings: dict = field(default_factory=dict)         # event -> [{"outcomes", "count"}]
    born_reference: dict = field(default_factory=dict)   # event -> {outcome tuple: prob}
    residues: dict = field(default_factory=dict)         # event -> leftover life count


def record_digest(labels: Sequence[str], amplitudes, provenance: Iterable[str]) -> str:
    """Stable digest of a record: labels, exact amplitude bytes, provenance."""
    h = hashlib.sha256()
    h.update(json.dumps(list(labels)).encode())
    h.update(np.ascontiguousarray(amplitudes, dtype=np.complex128).tobytes())
    h.update(json.dumps(sorted(provenance)).encode())
    return h.hexdigest()


def _digest(rec: LocalRecord) -> str:
    return record_digest(rec.labels, rec.value.amplitudes, rec.provenance)


def apportion(total: int, probs: Sequence[float]) -> list[int]:
    """Largest-remainder apportionment, ties to the earlier class."""
    floors = [int(total * p) for p in probs]
    remainders = [total * p - f for p, f in zip(probs, floors)]
    extra = total - sum(floors)
    order = sorted(range(len(probs)), key=lambda i: (-remainders[i], i))
    for i in order[:extra]:
        floors[i] += 1
    return floors


def assign_registers(events: Sequence[EventNode]) -> dict[str, str]:
    """Pointer register label per measurement event.

    The measurer's own qubit records its first measurement (the ready state
    it carries); later measurements by the same observer add fresh memory
    registers named ``<measurer>.<k>``.
    """
    counts: dict[str, int] = {}
    registers: dict[str, str] = {}
    for e in sorted(events, key=lambda e: (e.t, e.id)):
        if e.kind != MEASUREMENT:
            continue
        k = counts.get(e.measurer, 0)
        registers[e.id] = e.measurer if k == 0 else f"{e.measurer}.{k}"
        counts[e.measurer] = k + 1
    return registers


def replay_record(provenance: Iterable[str], events_by_id: Mapping[str, EventNode],
                  registers: Mapping[str, str],
                  ensure_labels: Iterable[str] = ()) -> hb.StateVector:
    """Reconstruct the wave-field value from provenance alone.

    Source payloads and measurer ready states are tensored in and measurement
    couplings applied in causal (t, id) order; meetings contribute nothing
    beyond provenance.  Subsystems named in ``ensure_labels`` (or measured
    without ever being sourced) enter in the fiducial ready state, so a
    record's label set always covers its carriers.
    """
    ordered = sorted((events_by_id[i] for i in provenance), key=lambda e: (e.t, e.id))
    state: hb.StateVector | None = None

    def ensure(label: str) -> None:
        nonlocal state
        if state is None:
            state = hb.basis_state(label)
        elif label not in state.labels:
            state = hb.tensor(state, hb.basis_state(label))

    for e in ordered:
        if e.kind == SOURCE:
            state = e.state if state is None else hb.tensor(state, e.state)
        elif e.kind == MEASUREMENT:
            ensure(e.system)
            ensure(registers[e.id])
            coupling = hb.coupling_unitary(hb.observable(e.observable), e.system,
                                           registers[e.id])
            state = hb.apply(coupling, state)
    for label in sorted(set(ensure_labels)):
        ensure(label)
    if state is None:
        raise ScenarioError("empty provenance yields no record")
    return state


def joint_outcome_distribution(record: hb.StateVector, meas_events: Sequence[EventNode],
                               registers: Mapping[str, str]) -> dict[tuple[int, ...], float]:
    """Joint Born distribution over pointer registers of the given measurements."""
    settings = {registers[e.id]: hb.observable(e.observable) for e in meas_events}
    return hb.born_distribution(record, settings)


class Simulation:
    """Single deterministic run of a scenario."""

    def __init__(self, scenario: Scenario):
        self.scenario = scenario
        self.events_by_id = {e.id: e for e in scenario.events}
        if len(self.events_by_id) != len(scenario.events):
            raise ScenarioError("duplicate event ids")
        self.registers = assign_registers(scenario.events)
        self.order = sorted(scenario.events, key=lambda e: (e.t, e.id))
        self._validate()
        n = scenario.ensemble
        self.lives: dict[str, list[Life]] = {}
        self.provenance: dict[str, frozenset[str]] = {}
        for s in scenario.systems:
            rec = LocalRecord(hb.basis_state(s.id), frozenset())
            copies = []
            for i in range(n):
                life = Life(s.id, i, rec)
                life.world = World({s.id: life}, {})
                copies.append(life)
            self.lives[s.id] = copies
            self.provenance[s.id] = frozenset()
        self.trace = TraceLog(header={
            "format": "localworlds-trace/1",
            "scenario": scenario.name,
            "scenario_digest": scenario.digest(),
            "ensemble": n,
            "seed": scenario.seed,
        })
        self.stats = RunStatistics()
        self._ran = False

    # -- validation ----------------------------------------------------------

    def _validate(self) -> None:
        sc = self.scenario
        if sc.ensemble < 1:
            raise ScenarioError("ensemble size must be at least 1")
        ids = [s.id for s in sc.systems]
        if len(set(ids)) != len(ids):
            raise ScenarioError("duplicate system ids")
        for eid, reg in self.registers.items():
            ev = self.events_by_id[eid]
            if reg != ev.measurer and reg in ids:
                raise ScenarioError(
                    f"memory register {reg!r} for event {eid} collides with a system id")
        last_event: dict[str, EventNode] = {}
        seen_sourced: set[str] = set()
        for e in self.order:
            involved = e.involved()
            if len(set(involved)) != len(involved) or not involved:
                raise ScenarioError(f"event {e.id}: participants must be distinct and nonempty")
            for sid in involved:
                line = sc.system(sid).worldline
                if not line.contains(e.coords, COLOCATION_ATOL):
                    raise ScenarioError(
                        f"event {e.id}: system {sid} is at x={line.position(e.t)!r} "
                        f"at t={e.t!r}, not co-located with x={e.x!r}")
                prev = last_event.get(sid)
                if prev is not None:
                    if prev.t == e.t:
                        raise ScenarioError(
                            f"events {prev.id} and {e.id} share system {sid} at the same time")
                    if not st.causally_precedes(prev.coords, e.coords):
                        raise ScenarioError(
                            f"event {e.id} depends on {prev.id} outside its past light cone "
                            f"(spacelike pair via system {sid})")
                last_event[sid] = e
            if e.kind == SOURCE:
                if e.state is None:
                    raise ScenarioError(f"source {e.id} carries no state")
                if set(e.state.labels) != set(involved):
                    raise ScenarioError(
                        f"source {e.id}: payload labels {e.state.labels} must equal "
                        f"participants {involved}")
                for sid in involved:
                    if sid in seen_sourced:
                        raise ScenarioError(f"source {e.id}: system {sid} already sourced")
                    if sid in {ev.system for ev in self.order
                               if ev.kind == MEASUREMENT and ev.t < e.t}:
                        raise ScenarioError(f"source {e.id} follows a measurement of {sid}")
                    seen_sourced.add(sid)
            elif e.kind == MEASUREMENT:
                if e.observable not in ("X", "Y", "Z"):
                    raise ScenarioError(
                        f"measurement {e.id}: observable must be X, Y or Z, got {e.observable!r}")
            elif e.kind == MEETING:
                if len(involved) < 2:
                    raise ScenarioError(f"meeting {e.id} needs at least two participants")
            else:
                raise ScenarioError(f"unknown event kind {e.kind!r}")

    # -- engine ---------------------------------------------------------------

    def run(self) -> tuple[TraceLog, RunStatistics]:
        if self._ran:
            raise RuntimeError("simulation already ran; build a fresh one")
        self._ran = True
        for e in self.order:
            if e.kind == SOURCE:
                self._apply_source(e)
            elif e.kind == MEASUREMENT:
                self._apply_measurement(e)
            else:
                self._apply_meeting(e)
        return self.trace, self.stats

    def _trace_pre(self, involved: Sequence[str]) -> dict:
        pre = {}
        for sid in involved:
            rec = self.lives[sid][0].record
            pre[sid] = _digest(rec)
        return pre

    def _set_records(self, involved: Sequence[str], rec: LocalRecord) -> None:
        for sid in involved:
            old = self.lives[sid][0].record
            if not set(old.labels) <= set(rec.labels):
                raise RuntimeError(f"record for {sid} would drop labels "
                                   f"{set(old.labels) - set(rec.labels)}")
            self.provenance[sid] = rec.provenance
            for life in self.lives[sid]:
                life.record = rec

    def _apply_source(self, e: EventNode) -> None:
        pre = self._trace_pre(e.participants)
        for sid in e.participants:
            if self.provenance[sid]:
                raise ScenarioError(f"source {e.id}: system {sid} already carries a record")
        rec = LocalRecord(e.state, frozenset({e.id}))
        self._set_records(e.participants, rec)
        self.trace.records.append({
            "type": "event", "id": e.id, "kind": SOURCE, "t": e.t, "x": e.x,
            "participants": list(e.participants),
            "pre": pre,
            "post": {sid: _digest(rec) for sid in e.participants},
            "post_labels": list(rec.labels),
            "post_provenance": sorted(rec.provenance),
        })

    def _pair_lives(self, e: EventNode, plist: Sequence[str],
                    new_prov: frozenset[str], record: hb.StateVector,
                    ) -> tuple[list[tuple[dict[str, int], dict[str, Life]]], int,
                               dict[tuple[int, ...], float], list[EventNode]]:
        """Group participant lives into compatible outcome combinations.

        Returns (pairings, residue, joint distribution, tuple events).  Each
        pairing maps every participant system to one life; the outcome map
        covers every measurement event in the merged provenance.
        """
        n = self.scenario.ensemble
        meas = sorted((self.events_by_id[i] for i in new_prov
                       if self.events_by_id[i].kind == MEASUREMENT),
                      key=lambda ev: (ev.t, ev.id))
        dist = joint_outcome_distribution(record, meas, self.registers) if meas else {(): 1.0}
        tuple_ids = [ev.id for ev in meas]
        support = [(outs, p) for outs, p in dist.items() if p > SUPPORT_ATOL]
        if len(support) > n:
            raise ProportionError(
                f"event {e.id}: {len(support)} outcome branches exceed ensemble size {n}")
        counts = apportion(n, [p for _, p in support])

        plist_set = set(plist)
        buckets: dict[str, dict[tuple, list[Life]]] = {}
        keysets: dict[str, tuple[str, ...]] = {}
        for q in plist:
            qb: dict[tuple, list[Life]] = {}
            keys = None
            for life in self.lives[q]:
                known = tuple(life.world.history.get(eid) for eid in tuple_ids)
                kset = tuple(eid for eid, v in zip(tuple_ids, known) if v is not None)
                if keys is None:
                    keys = kset
                elif keys != kset:
                    raise RuntimeError(f"lives of {q} know different event sets")
                qb.setdefault(known, []).append(life)
            buckets[q] = qb
            keysets[q] = keys if keys is not None else ()

        consumed: set[int] = set()
        cursor: dict[tuple[str, tuple], int] = {}

        def take(q: str, key: tuple, chosen: dict[str, "Life"]) -> "Life | None":
            """Lowest-index unused life of q in the bucket, skipping conflicts."""
            bucket = buckets[q].get(key)
            if not bucket:
                return None
            i = cursor.get((q, key), 0)
            while i < len(bucket) and id(bucket[i]) in consumed:
                i += 1
            cursor[(q, key)] = i
            j = i
            while j < len(bucket):
                life = bucket[j]
                j += 1
                if id(life) in consumed:
                    continue
                conflict = False
                for r, rl in life.world.members.items():
                    if r in plist_set and r != q:
                        if id(rl) in consumed or (r in chosen and chosen[r] is not rl):
                            conflict = True
                            break
                if not conflict:
                    return life
            return None

        pairings: list[tuple[dict[str, int], dict[str, Life]]] = []
        for (outs, _p), c in zip(support, counts):
            need = {q: tuple(v if eid in keysets[q] else None
                             for eid, v in zip(tuple_ids, outs)) for q in plist}
            made = 0
            while made < c:
                chosen: dict[str, Life] = {}
                failed = False
                for q in plist:
                    if q in chosen:
                        continue
                    pick = take(q, need[q], chosen)
                    if pick is None:
                        failed = True
                        break
                    chosen[q] = pick
                    for r, rl in pick.world.members.items():
                        if r in plist_set and r != q:
                            chosen[r] = rl
                if failed:
                    break
                for life in chosen.values():
                    consumed.add(id(life))
                outcome_map = dict(zip(tuple_ids, outs))
                pairings.append((outcome_map, chosen))
                made += 1
        residue = n * len(plist) - len(consumed)
        return pairings, residue, dist, meas

    def _merge_worlds(self, lives: Iterable[Life]) -> World:
        worlds = []
        for life in lives:
            if life.world not in worlds:
                worlds.append(life.world)
        target = max(worlds, key=lambda w: len(w.members))
        for w in worlds:
            if w is target:
                continue
            overlap = set(w.members) & set(target.members)
            if overlap:
                raise RuntimeError(f"world merge would duplicate systems {sorted(overlap)}")
            target.members.update(w.members)
            target.history.update(w.history)
            for life in w.members.values():
                life.world = target
        return target

    def _carried_labels(self, plist: Sequence[str]) -> set[str]:
        labels: set[str] = set()
        for sid in plist:
            labels |= set(self.lives[sid][0].record.labels)
        return labels

    def _apply_measurement(self, e: EventNode) -> None:
        plist = [e.measurer, e.system]
        pre = self._trace_pre(plist)
        new_prov = frozenset(self.provenance[e.measurer] | self.provenance[e.system] | {e.id})
        value = replay_record(new_prov, self.events_by_id, self.registers,
                              ensure_labels=self._carried_labels(plist))
        rec = LocalRecord(value, new_prov)
        pairings, residue, dist, meas = self._pair_lives(e, plist, new_prov, value)
        register = self.registers[e.id]
        partition: dict[str, dict[int, list[int]]] = {q: {} for q in plist}
        for outcome_map, chosen in pairings:
            val = outcome_map[e.id]
            world = self._merge_worlds(chosen.values())
            # merged member histories already cover every other tuple component
            world.history[e.id] = val
            for q in plist:
                life = chosen[q]
                life.log.append(LogEntry(e.id, register, e.observable, val))
                partition[q].setdefault(val, []).append(life.index)
        for q in partition:
            for val in partition[q]:
                partition[q][val].sort()
        self._set_records(plist, rec)
        self.stats.partitions[e.id] = partition
        self.stats.residues[e.id] = residue
        self.stats.born_reference[e.id] = {"events": [ev.id for ev in meas], "probs": dist}
        self.trace.records.append({
            "type": "event", "id": e.id, "kind": MEASUREMENT, "t": e.t, "x": e.x,
            "participants": plist,
            "measurer": e.measurer, "system": e.system,
            "observable": e.observable, "register": register,
            "pre": pre,
            "post": {sid: _digest(rec) for sid in plist},
            "post_labels": list(rec.labels),
            "post_provenance": sorted(rec.provenance),
            "partition": {q: {f"{v:+d}": idx for v, idx in sorted(partition[q].items(),
                                                                  reverse=True)}
                          for q in plist},
            "residue": residue,
        })

    def _apply_meeting(self, e: EventNode) -> None:
        plist = list(e.participants)
        pre = self._trace_pre(plist)
        prov = frozenset().union(*(self.provenance[q] for q in plist)) | {e.id}
        value = replay_record(prov, self.events_by_id, self.registers,
                              ensure_labels=self._carried_labels(plist))
        rec = LocalRecord(value, prov)
        pairings, residue, dist, meas = self._pair_lives(e, plist, prov, value)
        groups: dict[tuple, dict] = {}
        for outcome_map, chosen in pairings:
            self._merge_worlds(chosen.values())
            key = tuple(sorted(outcome_map.items()))
            g = groups.setdefault(key, {"outcomes": {k: v for k, v in sorted(outcome_map.items())},
                                        "members": {q: [] for q in plist}, "count": 0})
            for q in plist:
                g["members"][q].append(chosen[q].index)
            g["count"] += 1
        self._set_records(plist, rec)
        self.stats.meetings[e.id] = [
            {"outcomes": g["outcomes"], "count": g["count"]} for g in groups.values()
        ]
        self.stats.born_reference[e.id] = {"events": [ev.id for ev in meas], "probs": dist}
        self.stats.residues[e.id] = residue
        self.trace.records.append({
            "type": "event", "id": e.id, "kind": MEETING, "t": e.t, "x": e.x,
            "participants": plist,
            "pre": pre,
            "post": {sid: _digest(rec) for sid in plist},
            "post_labels": list(rec.labels),
            "post_provenance": sorted(rec.provenance),
            "pairings": [
                {"outcomes": {k: f"{v:+d}" for k, v in g["outcomes"].items()},
                 "members": g["members"], "count": g["count"]}
                for g in groups.values()
            ],
            "residue": residue,
        })


def run_scenario(scenario: Scenario) -> tuple[TraceLog, RunStatistics]:
    """Validate and run a scenario; the (trace, statistics) pair is replayable."""
    return Simulation(scenario).run()


def predict_with_certainty(life: Life, label: str, obs: hb.Observable) -> int | None:
    """Outcome the life can predict with probability one, if any.

    The life's record is conditioned on its own outcome log (projecting each
    logged pointer register onto the logged value) and then queried for the
    target subsystem.  Returns the certain value, or None when the conditional
    probability of every outcome falls short of one.  Labels absent from the
    record yield None: nothing outside the record can ever be certain.
    """
    state = life.record.value
    if label not in state.labels:
        return None
    for entry in life.log:
        if entry.register in state.labels:
            state, p = hb.project(state, entry.register,
                                  hb.observable(entry.observable), entry.value)
            if state is None:
                raise RuntimeError("life's log inconsistent with its record")
    dist = hb.born_distribution(state, {label: obs})
    (best_out, best_p) = max(dist.items(), key=lambda kv: kv[1])
    if best_p >= 1.0 - 1e-12:
        return best_out[0]
    return None
