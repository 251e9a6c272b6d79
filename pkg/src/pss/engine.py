"""Deterministic single-pass stack maps and their iteration.

Five maps are exposed:

* ``west``  -- the classical stack sort: push unless the next entry exceeds
  the stack top, then pop.
* ``s12``   -- the length-2 dotted map with base pattern 12: the next entry is
  pushed iff, prepended to the stack read top-to-bottom, it takes part in an
  occurrence of 12 (i.e. some stack element exceeds it).  One pass reverses
  each peak run in place.
* ``s21``   -- dual map with base pattern 21: push iff some stack element is
  smaller.  One pass reverses each valley run.
* ``m12`` / ``m21`` -- the two-stage machines: a dotted pass followed by a
  west pass.

Each dotted map has a closed form (run reversal) and a simulated form
(explicit stack); the two are interchangeable and cross-checked in the test
suite.  The dot position of a dotted pattern never changes the push
predicate, so both dot placements of a base produce the same map.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Callable, Optional, Sequence

from .guard import check_guard
from .perms import Perm, identity, successor


class MapId(str, Enum):
    WEST = "west"
    S12 = "s12"
    S21 = "s21"
    MACHINE12 = "m12"
    MACHINE21 = "m21"


class Strategy(str, Enum):
    SIMULATED = "simulated"
    CLOSED_FORM = "closed-form"
    RECURSIVE_WEST = "recursive-west"


@dataclass(frozen=True)
class DottedPattern:
    """A length-2 base pattern (12 or 21) with a marked letter position."""

    base: int  # 12 or 21
    dot_position: int  # 1 or 2

    def __post_init__(self) -> None:
        if self.base not in (12, 21):
            raise ValueError(f"base pattern must be 12 or 21, got {self.base}")
        if self.dot_position not in (1, 2):
            raise ValueError(f"dot position must be 1 or 2, got {self.dot_position}")


@dataclass(frozen=True)
class TraceEvent:
    op: str  # "push" | "pop"
    value: int
    step: int


@dataclass(frozen=True)
class StackTrace:
    events: tuple[TraceEvent, ...]

    def output(self) -> tuple[int, ...]:
        return tuple(e.value for e in self.events if e.op == "pop")


PushPredicate = Callable[[Sequence[int], int], bool]


def dotted_policy(pattern: DottedPattern) -> PushPredicate:
    """Push predicate of a dotted pattern.

    The predicate receives the stack read top-to-bottom and the candidate
    entry; it answers whether the candidate, prepended to that reading,
    takes part in an occurrence of the base pattern.  An empty stack always
    admits a push.  The dot position drops out of this condition, which is
    why both placements of the dot define the same map.
    """
    if pattern.base == 12:

        def allows12(stack: Sequence[int], v: int) -> bool:
            return not stack or any(s > v for s in stack)

        return allows12

    def allows21(stack: Sequence[int], v: int) -> bool:
        return not stack or any(s < v for s in stack)

    return allows21


def west_policy() -> PushPredicate:
    """Classical push predicate: push iff the stack is empty or the candidate
    is smaller than the top."""

    def allows(stack: Sequence[int], v: int) -> bool:
        return not stack or v < stack[0]

    return allows


def run_pass(
    p: Perm, policy: PushPredicate, want_trace: bool = False
) -> tuple[Perm, Optional[StackTrace]]:
    """One greedy deterministic pass of ``p`` through a stack with ``policy``.

    Repeatedly: if input remains and the policy permits, push the next input
    value; otherwise pop the top to the output.  Once the input is exhausted
    the stack is flushed top-to-bottom.
    """
    stack: list[int] = []
    out: list[int] = []
    events: list[TraceEvent] = []
    step = 0
    for v in p:
        while stack and not policy(stack[::-1], v):
            out.append(stack.pop())
            if want_trace:
                events.append(TraceEvent("pop", out[-1], step))
                step += 1
        stack.append(v)
        if want_trace:
            events.append(TraceEvent("push", v, step))
            step += 1
    while stack:
        out.append(stack.pop())
        if want_trace:
            events.append(TraceEvent("pop", out[-1], step))
            step += 1
    result = tuple(out)
    return result, (StackTrace(tuple(events)) if want_trace else None)


# -- fast single passes ------------------------------------------------------


def s12_simulated(p: Perm) -> Perm:
    """Simulated base-12 dotted pass with an O(1) predicate: a parallel stack
    of prefix maxima stands in for the existence scan."""
    stack: list[int] = []
    maxes: list[int] = []
    out: list[int] = []
    for v in p:
        while stack and maxes[-1] <= v:
            out.append(stack.pop())
            maxes.pop()
        stack.append(v)
        maxes.append(v if not maxes or v > maxes[-1] else maxes[-1])
    out.extend(reversed(stack))
    return tuple(out)


def s21_simulated(p: Perm) -> Perm:
    """Simulated base-21 dotted pass; prefix minima replace the scan."""
    stack: list[int] = []
    mins: list[int] = []
    out: list[int] = []
    for v in p:
        while stack and mins[-1] >= v:
            out.append(stack.pop())
            mins.pop()
        stack.append(v)
        mins.append(v if not mins or v < mins[-1] else mins[-1])
    out.extend(reversed(stack))
    return tuple(out)


def west_pass(p: Perm) -> Perm:
    stack: list[int] = []
    out: list[int] = []
    for v in p:
        while stack and stack[-1] < v:
            out.append(stack.pop())
        stack.append(v)
    out.extend(reversed(stack))
    return tuple(out)


def s12_closed_form(p: Perm) -> Perm:
    """Reverse each peak run in place; equals one simulated base-12 pass."""
    out: list[int] = []
    start = 0
    cur = p[0]
    for i in range(1, len(p)):
        if p[i] > cur:
            out.extend(p[start:i][::-1])
            start = i
            cur = p[i]
    out.extend(p[start:][::-1])
    return tuple(out)


def s21_closed_form(p: Perm) -> Perm:
    """Reverse each valley run in place; equals one simulated base-21 pass."""
    out: list[int] = []
    start = 0
    cur = p[0]
    for i in range(1, len(p)):
        if p[i] < cur:
            out.extend(p[start:i][::-1])
            start = i
            cur = p[i]
    out.extend(p[start:][::-1])
    return tuple(out)


def west_recursive(p: Perm) -> Perm:
    """Oracle for the west pass via the decomposition around the largest
    entry: sort left block, sort right block, append the maximum."""
    if len(p) <= 1:
        return p
    i = p.index(max(p))
    return west_recursive(p[:i]) + west_recursive(p[i + 1 :]) + (p[i],)


# -- dispatch, iteration, orbits ---------------------------------------------

_DEFAULT_STRATEGY = {
    MapId.WEST: Strategy.SIMULATED,
    MapId.S12: Strategy.CLOSED_FORM,
    MapId.S21: Strategy.CLOSED_FORM,
    MapId.MACHINE12: Strategy.CLOSED_FORM,
    MapId.MACHINE21: Strategy.CLOSED_FORM,
}

_VALID_STRATEGIES = {
    MapId.WEST: {Strategy.SIMULATED, Strategy.RECURSIVE_WEST},
    MapId.S12: {Strategy.SIMULATED, Strategy.CLOSED_FORM},
    MapId.S21: {Strategy.SIMULATED, Strategy.CLOSED_FORM},
    MapId.MACHINE12: {Strategy.SIMULATED, Strategy.CLOSED_FORM},
    MapId.MACHINE21: {Strategy.SIMULATED, Strategy.CLOSED_FORM},
}


def apply(map_id: MapId, p: Perm, strategy: Optional[Strategy] = None) -> Perm:
    """Apply one pass of the selected map.  For the machines, the strategy
    selects how the dotted stage is computed; the west stage is always the
    simulated pass."""
    map_id = MapId(map_id)
    if strategy is None:
        strategy = _DEFAULT_STRATEGY[map_id]
    strategy = Strategy(strategy)
    if strategy not in _VALID_STRATEGIES[map_id]:
        raise ValueError(f"strategy {strategy.value} is not valid for map {map_id.value}")
    if map_id is MapId.WEST:
        return west_recursive(p) if strategy is Strategy.RECURSIVE_WEST else west_pass(p)
    closed = strategy is Strategy.CLOSED_FORM
    if map_id is MapId.S12:
        return s12_closed_form(p) if closed else s12_simulated(p)
    if map_id is MapId.S21:
        return s21_closed_form(p) if closed else s21_simulated(p)
    if map_id is MapId.MACHINE12:
        return west_pass(s12_closed_form(p) if closed else s12_simulated(p))
    return west_pass(s21_closed_form(p) if closed else s21_simulated(p))


def iterate(
    map_id: MapId, p: Perm, t: int, strategy: Optional[Strategy] = None
) -> Perm:
    """t-fold application; t = 0 returns ``p`` unchanged."""
    if t < 0:
        raise ValueError("iteration count must be nonnegative")
    for _ in range(t):
        p = apply(map_id, p, strategy)
    return p


def sorts_in(map_id: MapId, p: Perm, t_max: int) -> Optional[int]:
    """Least t <= t_max with the t-fold image equal to the identity, else None.

    Stops early when the orbit revisits a state without having reached the
    identity.
    """
    if t_max < 0:
        raise ValueError("t_max must be nonnegative")
    ident = identity(len(p))
    seen = {p}
    cur = p
    for t in range(t_max + 1):
        if cur == ident:
            return t
        if t == t_max:
            break
        cur = apply(map_id, cur)
        if cur in seen:
            return None
        seen.add(cur)
    return None


@dataclass(frozen=True)
class OrbitReport:
    tail_length: int
    cycle_length: int
    reaches_identity_at: Optional[int]
    is_periodic_point: bool


def orbit(map_id: MapId, p: Perm) -> OrbitReport:
    """Iterate until a state recurs; report the tail length, cycle length,
    and the first step at which the identity appears (if it does)."""
    ident = identity(len(p))
    seen: dict[Perm, int] = {}
    cur = p
    step = 0
    reaches: Optional[int] = None
    while cur not in seen:
        seen[cur] = step
        if reaches is None and cur == ident:
            reaches = step
        cur = apply(map_id, cur)
        step += 1
    tail = seen[cur]
    return OrbitReport(
        tail_length=tail,
        cycle_length=step - tail,
        reaches_identity_at=reaches,
        is_periodic_point=tail == 0,
    )


def ord_of_Sn(map_id: MapId, n: int, force: bool = False) -> int:
    """Largest orbit tail over all of S_n: the least k after which every
    permutation has landed on a periodic point."""
    check_guard(n, force)
    best = 0
    p: Optional[Perm] = identity(n)
    while p is not None:
        best = max(best, orbit(map_id, p).tail_length)
        p = successor(p)
    return best
