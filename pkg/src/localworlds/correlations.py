"""Canonical entangled states and their defining correlation constraints.

The three-spin state shipped here is pinned down by verification, not by
convention: it must reproduce the four perfect correlations

    XXX = -1,   YYX = +1,   YXY = +1,   XYY = +1

at the distribution level (violating outcome tuples carry zero probability,
not merely zero mean).  Constraint order follows the substitution chain used
by the symbolic contradiction replay in :mod:`localworlds.hv_search`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Mapping, Sequence

import numpy as np

from . import hilbert as hb

SUPPORT_ATOL = 1e-12
EXPECTATION_ATOL = 1e-10


@dataclass(frozen=True)
class Constraint:
    """One perfect correlation: settings (one per party, in party order) and
    the required outcome product."""

    settings: tuple[str, ...]
    required: int

    def __post_init__(self):
        if self.required not in (+1, -1):
            raise ValueError(f"required product must be +1 or -1, got {self.required}")

    def name(self) -> str:
        return "".join(self.settings)


@dataclass(frozen=True)
class CorrelationSpec:
    """Perfect-correlation constraints over a fixed party and setting universe."""

    parties: tuple[str, ...]
    settings: tuple[str, ...]
    constraints: tuple[Constraint, ...]

    def __post_init__(self):
        for c in self.constraints:
            if len(c.settings) != len(self.parties):
                raise ValueError(f"constraint {c} needs one setting per party {self.parties}")
            unknown = set(c.settings) - set(self.settings)
            if unknown:
                raise ValueError(f"constraint uses settings {sorted(unknown)} outside {self.settings}")

    @property
    def slots(self) -> tuple[tuple[str, str], ...]:
        return tuple((p, s) for p in self.parties for s in self.settings)


@dataclass
class ConstraintResult:
    constraint: Constraint
    expectation: float
    support_ok: bool
    satisfied: bool


@dataclass
class CorrelationReport:
    results: list[ConstraintResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.satisfied for r in self.results)


def epr_state(labels: Sequence[str] = ("a", "b")) -> hb.StateVector:
    """(1/sqrt2)(|up_z up_z> - |down_z down_z>) on two labels."""
    s2 = 1.0 / math.sqrt(2.0)
    return hb.StateVector(tuple(labels), [s2, 0.0, 0.0, -s2])


def x_correlated_pair(labels: Sequence[str] = ("a", "b")) -> hb.StateVector:
    """(1/sqrt2)(|up_x up_x> + |down_x down_x>); equals (|00> + |11>)/sqrt2."""
    s2 = 1.0 / math.sqrt(2.0)
    return hb.StateVector(tuple(labels), [s2, 0.0, 0.0, s2])


def ghz_state(labels: Sequence[str] = ("A", "B", "C")) -> hb.StateVector:
    """Three-spin state satisfying the four defining correlations exactly."""
    s2 = 1.0 / math.sqrt(2.0)
    return hb.StateVector(tuple(labels), [s2, 0, 0, 0, 0, 0, 0, -s2])


def ghz_spec(parties: Sequence[str] = ("A", "B", "C")) -> CorrelationSpec:
    """The four GHZ constraints, ordered along the substitution chain."""
    parties = tuple(parties)
    return CorrelationSpec(
        parties=parties,
        settings=("X", "Y"),
        constraints=(
            Constraint(("X", "X", "X"), -1),
            Constraint(("Y", "Y", "X"), +1),
            Constraint(("Y", "X", "Y"), +1),
            Constraint(("X", "Y", "Y"), +1),
        ),
    )


def verify_spec(psi: hb.StateVector, spec: CorrelationSpec) -> CorrelationReport:
    """Check each constraint as a perfect correlation of ``psi``.

    A constraint is satisfied only when the expectation matches the required
    product within 1e-10 *and* every outcome tuple with the wrong product has
    probability below 1e-12.
    """
    missing = set(spec.parties) - set(psi.labels)
    if missing:
        raise hb.LabelError(f"spec parties {sorted(missing)} absent from state over {psi.labels}")
    report = CorrelationReport()
    for c in spec.constraints:
        settings = {p: hb.observable(s) for p, s in zip(spec.parties, c.settings)}
        dist = hb.born_distribution(psi, settings)
        exp = 0.0
        support_ok = True
        for outcome, p in dist.items():
            prod = 1
            for v in outcome:
                prod *= v
            exp += prod * p
            if prod != c.required and p > SUPPORT_ATOL:
                support_ok = False
        satisfied = support_ok and abs(exp - c.required) < EXPECTATION_ATOL
        report.results.append(ConstraintResult(c, exp, support_ok, satisfied))
    return report


def reduced_state_insufficiency(psi: hb.StateVector,
                                partition: tuple[Sequence[str], Sequence[str]],
                                projectors: tuple[np.ndarray, np.ndarray],
                                ) -> tuple[float, float, float]:
    """Compare local reduced-state predictions with the joint Born probability.

    ``projectors`` are matrices on the two partition blocks (canonical label
    order within each block).  Returns (lhs, rhs, gap) where lhs is the
    product of the two local traces Tr(rho_block P_block) and rhs is the joint
    probability <psi| P_left (x) P_right |psi>.  A nonzero gap is exactly the
    sense in which the pair of reduced states fails to encode the correlation.
    """
    left, right = sorted(set(partition[0])), sorted(set(partition[1]))
    if set(left) & set(right) or set(left) | set(right) != set(psi.labels):
        raise hb.CompositionError(
            f"partition ({left}, {right}) is not a disjoint cover of {psi.labels}")
    p_left, p_right = (np.asarray(m, dtype=np.complex128) for m in projectors)
    rho_l = hb.partial_trace(psi, left)
    rho_r = hb.partial_trace(psi, right)
    lhs = float(np.real(np.trace(rho_l.matrix @ p_left)) * np.real(np.trace(rho_r.matrix @ p_right)))
    joint = hb.Operator(tuple(left) + tuple(right), np.kron(p_left, p_right))
    rhs = float(np.real(np.vdot(psi.amplitudes, hb.raw_apply(joint, psi))))
    return lhs, rhs, abs(lhs - rhs)


def chsh_value(psi: hb.StateVector,
               setting_pairs: Sequence[tuple[hb.Observable, hb.Observable]]) -> float:
    """CHSH combination S = E(a,b) + E(a,b') + E(a',b) - E(a',b')."""
    if psi.n_qubits != 2:
        raise hb.HilbertError("CHSH is defined for two-qubit states")
    if len(setting_pairs) != 4:
        raise ValueError("exactly four setting pairs required: (a,b), (a,b'), (a',b), (a',b')")
    la, lb = psi.labels
    terms = []
    for obs_a, obs_b in setting_pairs:
        terms.append(hb.expectation(psi, [(la, obs_a), (lb, obs_b)]))
    return terms[0] + terms[1] + terms[2] - terms[3]


def tsirelson_settings() -> list[tuple[hb.Observable, hb.Observable]]:
    """Setting pairs achieving 2*sqrt(2) on the z-correlated pair state."""
    a = hb.spin_direction(0.0)           # Z
    a_p = hb.spin_direction(math.pi / 2)   # X
    b = hb.spin_direction(-math.pi / 4)
    b_p = hb.spin_direction(math.pi / 4)
    return [(a, b), (a, b_p), (a_p, b), (a_p, b_p)]


def spec_to_dict(spec: CorrelationSpec) -> dict:
    return {
        "parties": list(spec.parties),
        "settings": list(spec.settings),
        "constraints": [
            {"settings": list(c.settings), "required": c.required} for c in spec.constraints
        ],
    }


def spec_from_dict(data: Mapping) -> CorrelationSpec:
    constraints = tuple(
        Constraint(tuple(c["settings"]), int(c["required"])) for c in data.get("constraints", ())
    )
    settings = data.get("settings")
    if settings is None:
        seen = []
        for c in constraints:
            for s in c.settings:
                if s not in seen:
                    seen.append(s)
        settings = seen
    return CorrelationSpec(tuple(data["parties"]), tuple(settings), constraints)
