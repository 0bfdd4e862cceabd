"""Minkowski geometry in units c = 1.

Events are points (t, x, y, z); all shipped configurations are collinear so
y and z default to 0.  The lightlike boundary counts as causally connected:
interval classification uses a 1e-12 tolerance and past-cone membership is
inclusive (t <= and timelike-or-lightlike).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import isfinite, sqrt
from typing import Iterable

LIGHTLIKE_ATOL = 1e-12

TIMELIKE = "timelike"
SPACELIKE = "spacelike"
LIGHTLIKE = "lightlike"


class FrameError(ValueError):
    """Boost velocity at or beyond c."""


@dataclass(frozen=True)
class Event:
    """A single point in spacetime."""

    t: float
    x: float
    y: float = 0.0
    z: float = 0.0
    id: str = ""

    def __post_init__(self):
        for c in (self.t, self.x, self.y, self.z):
            if not isfinite(c):
                raise ValueError(f"non-finite event coordinate in {self}")


@dataclass(frozen=True)
class Frame:
    """Inertial frame boosted along x with velocity v (|v| < 1)."""

    v: float
    label: str = ""

    def __post_init__(self):
        if not abs(self.v) < 1.0:
            raise FrameError(f"|v| = {abs(self.v)} must be strictly below 1")

    @property
    def gamma(self) -> float:
        return 1.0 / sqrt(1.0 - self.v * self.v)


def interval_squared(e1: Event, e2: Event) -> float:
    dt = e1.t - e2.t
    dx, dy, dz = e1.x - e2.x, e1.y - e2.y, e1.z - e2.z
    return dt * dt - dx * dx - dy * dy - dz * dz

def interval_class(e1: Event, e2: Event) -> str:
    """Classify the separation of two events: timelike, spacelike or lightlike."""
    s2 = interval_squared(e1, e2)
    if abs(s2) <= LIGHTLIKE_ATOL:
        return LIGHTLIKE
    return TIMELIKE if s2 > 0 else SPACELIKE


def causally_precedes(earlier: Event, later: Event) -> bool:
    """True when ``earlier`` lies in the (inclusive) past light cone of ``later``."""
    return earlier.t <= later.t and interval_class(earlier, later) != SPACELIKE


def past_light_cone(e: Event, candidates: Iterable[Event]) -> set[Event]:
    """All candidates at or inside the past light cone of ``e``."""
    return {c for c in candidates if causally_precedes(c, e)}


def boost(e: Event, f: Frame) -> Event:
    """Standard Lorentz boost along x."""
    g = f.gamma
    return Event(g * (e.t - f.v * e.x), g * (e.x - f.v * e.t), e.y, e.z, e.id)


@dataclass(frozen=True)
class Worldline:
    """Constant-velocity worldline x(t) = x0 + v t (1+1 dimensions)."""

    x0: float
    v: float

    def position(self, t: float) -> float:
        return self.x0 + self.v * t

    def contains(self, e: Event, atol: float = 1e-9) -> bool:
        return abs(self.position(e.t) - e.x) <= atol and abs(e.y) <= atol and abs(e.z) <= atol


@dataclass(frozen=True)
class CascadeStep:
    """One event of the branching cascade with its inducing-frame bookkeeping."""

    event: Event
    worldline: int            # 1 or 2: which object branches here
    induced_in: str           # frame label whose simultaneity hypersurface induced it
    t_in_frame: float         # time coordinate in that frame


@dataclass
class Cascade:
    steps: list[CascadeStep] = field(default_factory=list)
    degenerate: bool = False
    truncated: bool = False


def _simultaneous_on(line: Worldline, reference: Event, frame: Frame) -> Event:
    """Event on ``line`` simultaneous with ``reference`` in ``frame``."""
    t_ref = boost(reference, frame).t
    denom = 1.0 - frame.v * line.v
    if abs(denom) < 1e-15:
        raise FrameError("worldline moves at the frame velocity limit")
    t = (t_ref / frame.gamma + frame.v * line.x0) / denom
    return Event(t, line.position(t))


def branching_cascade_demo(line1: Worldline, line2: Worldline,
                           frames: tuple[Frame, Frame], trigger: Event,
                           depth: int = 8, time_floor: float = -1e6) -> Cascade:
    """Trace the regress forced by 'branching anywhere is branching everywhere'.

    A branch of object 1 at the trigger induces a branch of object 2 on the
    first frame's simultaneity hypersurface; that event induces a branch of
    object 1 back on the second frame's hypersurface, and so on.  For objects
    in relative motion the induced events run monotonically backwards, so the
    output is a finite prefix of an unbounded regress, truncated at ``depth``
    steps or once times drop below ``time_floor``.  Co-moving worldlines give
    the degenerate two-step cascade.
    """
    if depth < 2:
        raise ValueError("cascade depth must be at least 2")
    if not line1.contains(trigger):
        raise ValueError("trigger event does not lie on worldline 1")
    frame_a, frame_b = frames
    cascade = Cascade()
    cascade.steps.append(CascadeStep(trigger, 1, "", trigger.t))
    lines = {1: line1, 2: line2}
    current, on_line = trigger, 1
    use_a = True
    degenerate = abs(line1.v - line2.v) <= 1e-12
    for k in range(1, depth):
        frame = frame_a if use_a else frame_b
        target = 2 if on_line == 1 else 1
        nxt = _simultaneous_on(lines[target], current, frame)
        nxt = Event(nxt.t, nxt.x, id=f"E{k + 1}")
        cascade.steps.append(CascadeStep(nxt, target, frame.label or ("S" if use_a else "S'"),
                                         boost(nxt, frame).t))
        if degenerate:
            cascade.degenerate = True
            return cascade
        if nxt.t < time_floor:
            cascade.truncated = True
            return cascade
        current, on_line = nxt, target
        use_a = not use_a
    cascade.truncated = True
    return cascade
