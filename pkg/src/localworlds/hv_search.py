"""Exhaustive hidden-variable searches over perfect-correlation constraints.

Three model families are searched, all with outcomes restricted to +1/-1 and
finitely many settings per party:

* single-world deterministic tables (one value per party/setting slot),
* world-indexed tables where one anchor settings-tuple fixes the world tags
  and, by no-superdeterminism, each slot carries one value vector that does
  not depend on the other parties' settings,
* multivalued tables where each slot carries a value *set* and every
  satisfying outcome combination of every constraint must be realized.

A symbolic substitution replay is provided alongside the brute-force
enumeration: it chains the constraints, deriving each slot's value as a
signed monomial over seeded symbols, and reports the closing contradiction
when one appears.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Sequence

from .correlations import Constraint, CorrelationSpec

WITNESS_CAP = 1000
SINGLE_WORLD_SLOT_CAP = 20
DIVERGENT_BIT_CAP = 20
MULTIVALUED_SLOT_CAP = 12

_SYMBOL_POOL = "lmnopqrstuvwxyz"

Slot = tuple[str, str]          # (party, setting)
Entry = tuple[int, str | None]  # (outcome value, optional world tag)


class SearchSizeError(ValueError):
    """Search space exceeds the exhaustive-enumeration guard."""


class WorldCountError(ValueError):
    """Requested world count inconsistent with the anchor tuple."""


@dataclass
class Assignment:
    """Hidden-variable table: slot -> ordered outcome entries."""

    values: dict[Slot, tuple[Entry, ...]]

    def entries(self, slot: Slot) -> tuple[Entry, ...]:
        return self.values[slot]

    def single_value(self, slot: Slot) -> int:
        (value, _tag), = self.values[slot]
        return value

    def value_vector(self, slot: Slot) -> tuple[int, ...]:
        return tuple(v for v, _ in self.values[slot])

    def value_set(self, slot: Slot) -> frozenset[int]:
        return frozenset(v for v, _ in self.values[slot])

    def world_tags(self) -> tuple[str, ...] | None:
        tags = {tuple(t for _, t in entries) for entries in self.values.values()}
        if len(tags) != 1:
            return None
        (only,) = tags
        return None if any(t is None for t in only) else tuple(only)

    def to_dict(self) -> dict:
        return {
            f"{party}:{setting}": [[v, t] for v, t in entries]
            for (party, setting), entries in sorted(self.values.items())
        }


@dataclass
class SearchReport:
    """Outcome of an exhaustive search: SAT/UNSAT is data, never an error."""

    mode: str
    satisfiable: bool
    witnesses: list[Assignment]
    witness_count: int
    total_searched: int
    truncated: bool = False
    trace: "ContradictionTrace | None" = None
    detail: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        out = {
            "mode": self.mode,
            "satisfiable": self.satisfiable,
            "witness_count": self.witness_count,
            "total_searched": self.total_searched,
            "truncated": self.truncated,
            "witnesses": [w.to_dict() for w in self.witnesses[:20]],
            "detail": self.detail,
        }
        if self.trace is not None:
            out["trace"] = self.trace.lines()
        return out


def _constraint_slots(spec: CorrelationSpec, c: Constraint) -> list[Slot]:
    return [(p, s) for p, s in zip(spec.parties, c.settings)]


def satisfying_combinations(c: Constraint) -> list[tuple[int, ...]]:
    """Outcome tuples with the required product, +1-first lexicographic order."""
    out = []
    for combo in itertools.product((+1, -1), repeat=len(c.settings)):
        prod = 1
        for v in combo:
            prod *= v
        if prod == c.required:
            out.append(combo)
    return out


def enumerate_single_world(spec: CorrelationSpec) -> SearchReport:
    """Exhaust all deterministic one-value-per-slot tables against the spec."""
    slots = spec.slots
    if len(slots) > SINGLE_WORLD_SLOT_CAP:
        raise SearchSizeError(
            f"{len(slots)} (party,setting) slots exceed the cap of {SINGLE_WORLD_SLOT_CAP}")
    witnesses: list[Assignment] = []
    count = 0
    total = 2 ** len(slots)
    for values in itertools.product((+1, -1), repeat=len(slots)):
        table = dict(zip(slots, values))
        ok = True
        for c in spec.constraints:
            prod = 1
            for slot in _constraint_slots(spec, c):
                prod *= table[slot]
            if prod != c.required:
                ok = False
                break
        if ok:
            count += 1
            if len(witnesses) < WITNESS_CAP:
                witnesses.append(Assignment({s: ((v, None),) for s, v in table.items()}))
    return SearchReport(
        mode="single-world",
        satisfiable=count > 0,
        witnesses=witnesses,
        witness_count=count,
        total_searched=total,
        truncated=count > len(witnesses),
    )


# -- symbolic substitution replay -------------------------------------------


@dataclass(frozen=True)
class Monomial:
    """Signed product of +1/-1 symbols; squares cancel."""

    sign: int
    symbols: frozenset[str]

    def __mul__(self, other: "Monomial") -> "Monomial":
        return Monomial(self.sign * other.sign, self.symbols ^ other.symbols)

    def render(self, order: Sequence[str]) -> str:
        if not self.symbols:
            return f"{self.sign:+d}"[0] + "1"
        body = "".join(s for s in order if s in self.symbols)
        return ("-" if self.sign < 0 else "") + body

    @classmethod
    def constant(cls, sign: int) -> "Monomial":
        return cls(sign, frozenset())

    @classmethod
    def symbol(cls, name: str) -> "Monomial":
        return cls(1, frozenset((name,)))


def _lam(slot: Slot) -> str:
    party, setting = slot
    return f"lambda_{setting}^{party}"


@dataclass
class TraceStep:
    kind: str           # seed | derive | check | contradiction
    text: str
    slot: Slot | None = None
    constraint: Constraint | None = None
    monomial: Monomial | None = None


@dataclass
class ContradictionTrace:
    """Replay of the chained-substitution argument over a constraint list."""

    steps: list[TraceStep] = field(default_factory=list)
    contradiction: bool = False
    closed: bool = False          # at least one fully-determined constraint was checked
    symbol_order: list[str] = field(default_factory=list)

    @property
    def has_chain(self) -> bool:
        return self.closed

    def lines(self) -> list[str]:
        return [s.text for s in self.steps]

    def __str__(self) -> str:
        return "\n".join(self.lines())


def derive_contradiction_trace(spec: CorrelationSpec) -> ContradictionTrace:
    """Chain the constraints symbolically, seeding fresh +1/-1 symbols as needed.

    Constraints are processed in spec order.  A constraint with unknown slots
    seeds all but its last unknown and derives that one; a fully-determined
    constraint becomes a consistency check.  A constant mismatch on a check is
    the contradiction: the first slot is re-derived from the others and
    contrasted with its seeded value.  If no constraint ever closes (or a
    check leaves free symbols), there is no symbolic chain and the exhaustive
    enumerator is the fallback.
    """
    trace = ContradictionTrace()
    known: dict[Slot, Monomial] = {}
    pool = iter(_SYMBOL_POOL)

    def cite(c: Constraint) -> str:
        return f"[from {c.name()}={c.required:+d}]"

    for c in spec.constraints:
        slots = _constraint_slots(spec, c)
        unknowns = [s for s in slots if s not in known]
        if unknowns:
            for s in unknowns[:-1]:
                try:
                    sym = next(pool)
                except StopIteration:
                    raise SearchSizeError("symbol pool exhausted; spec too large for replay")
                known[s] = Monomial.symbol(sym)
                trace.symbol_order.append(sym)
                trace.steps.append(TraceStep(
                    "seed", f"{_lam(s)} = {sym} in [+1,-1]", s, c, known[s]))
            last = unknowns[-1]
            derived = Monomial.constant(c.required)
            for s in slots:
                if s != last:
                    derived = derived * known[s]
            known[last] = derived
            trace.steps.append(TraceStep(
                "derive",
                f"{_lam(last)} = {derived.render(trace.symbol_order)} {cite(c)}",
                last, c, derived))
            continue
        # fully determined: consistency check
        product = Monomial.constant(1)
        for s in slots:
            product = product * known[s]
        trace.closed = True
        target = Monomial.constant(c.required)
        if product == target:
            trace.steps.append(TraceStep(
                "check",
                f"{' '.join(_lam(s) for s in slots)} = "
                f"{product.render(trace.symbol_order)}, consistent {cite(c)}",
                None, c, product))
            continue
        if product.symbols:
            # closure depends on free symbol values: not a definite chain
            trace.closed = False
            trace.steps.append(TraceStep(
                "check", f"check of {c.name()} leaves free symbols; no symbolic chain",
                None, c, product))
            return trace
        first = slots[0]
        rederived = Monomial.constant(c.required)
        for s in slots[1:]:
            rederived = rederived * known[s]
        trace.contradiction = True
        trace.steps.append(TraceStep(
            "contradiction",
            f"{_lam(first)} = {rederived.render(trace.symbol_order)} {cite(c)} "
            f"contradicts {_lam(first)} = {known[first].render(trace.symbol_order)}",
            first, c, rederived))
        return trace
    return trace


# -- divergent global worlds --------------------------------------------------


def _anchor_constraint(spec: CorrelationSpec, anchor: tuple[str, ...] | None) -> Constraint:
    if anchor is None:
        if not spec.constraints:
            raise WorldCountError("divergent search needs an anchor constraint")
        return spec.constraints[0]
    for c in spec.constraints:
        if c.settings == tuple(anchor):
            return c
    raise WorldCountError(f"anchor {anchor} does not match any constraint")


def enumerate_divergent_worlds(spec: CorrelationSpec, world_count: int,
                               anchor: tuple[str, ...] | None = None) -> SearchReport:
    """Exhaust world-indexed tables anchored on one settings tuple.

    The anchor tuple's satisfying outcome combinations fix the world tags and
    the anchored slots' value vectors.  Every remaining slot independently
    ranges over all +1/-1 vectors (one value per world; the vector does not
    depend on co-parties' settings, which encodes no-superdeterminism).  An
    assignment is a witness when every constraint holds inside every world.
    """
    c0 = _anchor_constraint(spec, anchor)
    combos = satisfying_combinations(c0)
    if world_count != len(combos):
        raise WorldCountError(
            f"anchor {c0.name()}={c0.required:+d} has {len(combos)} satisfying "
            f"combinations; world_count={world_count} is inconsistent")
    k = len(combos)
    tags = tuple(f"w{i + 1}" for i in range(k))
    anchored: dict[Slot, tuple[int, ...]] = {}
    for i, p in enumerate(spec.parties):
        anchored[(p, c0.settings[i])] = tuple(combo[i] for combo in combos)
    free = [s for s in spec.slots if s not in anchored]
    bits = len(free) * k
    if bits > DIVERGENT_BIT_CAP:
        raise SearchSizeError(f"{bits} free bits exceed the cap of {DIVERGENT_BIT_CAP}")

    def world_ok(table: dict[Slot, tuple[int, ...]]) -> bool:
        for c in spec.constraints:
            slots = _constraint_slots(spec, c)
            for w in range(k):
                prod = 1
                for s in slots:
                    prod *= table[s][w]
                if prod != c.required:
                    return False
        return True

    witnesses: list[Assignment] = []
    count = 0
    total = 2 ** bits
    for values in itertools.product(itertools.product((+1, -1), repeat=k), repeat=len(free)):
        table = dict(anchored)
        table.update(zip(free, values))
        if world_ok(table):
            count += 1
            if len(witnesses) < WITNESS_CAP:
                witnesses.append(Assignment(
                    {s: tuple(zip(vec, tags)) for s, vec in table.items()}))
    return SearchReport(
        mode="divergent",
        satisfiable=count > 0,
        witnesses=witnesses,
        witness_count=count,
        total_searched=total,
        truncated=count > len(witnesses),
        detail={"worlds": list(tags), "anchor": c0.name()},
    )


def divergent_survivors(spec: CorrelationSpec, constraint_count: int,
                        anchor: tuple[str, ...] | None = None,
                        ) -> list[dict[Slot, tuple[int, ...]]]:
    """Tables surviving only the first ``constraint_count`` constraints.

    Instrumentation for inspecting which products the surviving assignments
    force before the full constraint set rules them all out.
    """
    sub = CorrelationSpec(spec.parties, spec.settings, spec.constraints[:constraint_count])
    c0 = _anchor_constraint(spec, anchor)
    combos = satisfying_combinations(c0)
    k = len(combos)
    anchored: dict[Slot, tuple[int, ...]] = {}
    for i, p in enumerate(spec.parties):
        anchored[(p, c0.settings[i])] = tuple(combo[i] for combo in combos)
    free = [s for s in spec.slots if s not in anchored]
    if len(free) * k > DIVERGENT_BIT_CAP:
        raise SearchSizeError("survivor scan above exhaustive cap")
    survivors = []
    for values in itertools.product(itertools.product((+1, -1), repeat=k), repeat=len(free)):
        table = dict(anchored)
        table.update(zip(free, values))
        ok = True
        for c in sub.constraints:
            slots = _constraint_slots(sub, c)
            for w in range(k):
                prod = 1
                for s in slots:
                    prod *= table[s][w]
                if prod != c.required:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            survivors.append(table)
    return survivors


# -- multivalued witnesses ----------------------------------------------------


def many_worlds_witness(spec: CorrelationSpec) -> SearchReport:
    """Find the minimal multivalued table realizing every satisfying combination.

    Each slot carries a nonempty value set.  A table is admissible when, for
    every constraint, (i) each outcome combination with the required product
    is componentwise contained in the slots' sets (every branch the quantum
    statistics realize has matching partner values available) and (ii) no
    constrained slot carries a value that appears in no satisfying
    combination.  The minimal witness by total cardinality is returned,
    ties broken lexicographically.
    """
    slots = spec.slots
    if len(slots) > MULTIVALUED_SLOT_CAP:
        raise SearchSizeError(
            f"{len(slots)} slots exceed the multivalued cap of {MULTIVALUED_SLOT_CAP}")
    options = ((+1,), (-1,), (+1, -1))
    sat_combos = {c: satisfying_combinations(c) for c in spec.constraints}

    def admissible(table: dict[Slot, tuple[int, ...]]) -> bool:
        for c in spec.constraints:
            cslots = _constraint_slots(spec, c)
            for combo in sat_combos[c]:
                if any(v not in table[s] for v, s in zip(combo, cslots)):
                    return False
            for i, s in enumerate(cslots):
                for v in table[s]:
                    if not any(combo[i] == v for combo in sat_combos[c]):
                        return False
        return True

    best: dict[Slot, tuple[int, ...]] | None = None
    best_key = None
    count = 0
    total = len(options) ** len(slots)
    rank = {opt: i for i, opt in enumerate(options)}
    for choice in itertools.product(options, repeat=len(slots)):
        table = dict(zip(slots, choice))
        if admissible(table):
            count += 1
            key = (sum(len(v) for v in choice), tuple(rank[v] for v in choice))
            if best_key is None or key < best_key:
                best, best_key = table, key
    witnesses = []
    if best is not None:
        witnesses.append(Assignment({s: tuple((v, None) for v in vs) for s, vs in best.items()}))
    pairing = {
        c.name(): [list(combo) for combo in sat_combos[c]] for c in spec.constraints
    }
    return SearchReport(
        mode="multivalued",
        satisfiable=count > 0,
        witnesses=witnesses,
        witness_count=count,
        total_searched=total,
        truncated=count > len(witnesses),
        detail={"pairing_rule": pairing},
    )


def chsh_classical_bound() -> float:
    """Maximum CHSH value over the 16 deterministic two-party strategies."""
    best = -4.0
    for a, a_p, b, b_p in itertools.product((+1, -1), repeat=4):
        s = a * b + a * b_p + a_p * b - a_p * b_p
        best = max(best, float(s))
    return best


def chsh_strategy_value(a: int, a_p: int, b: int, b_p: int) -> float:
    return float(a * b + a * b_p + a_p * b - a_p * b_p)
