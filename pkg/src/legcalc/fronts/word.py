"""Front diagrams as words of Morse events.

Reading a front from left to right, strands are stacked at integer
heights 0, 1, ... (0 is the bottom).  Three events change the stack:

``("L", i)``
    a left cusp: two new strands appear at heights i and i+1, everything
    at height >= i moves up by two;
``("R", i)``
    a right cusp: the strands at i and i+1 are joined and disappear;
``("X", i)``
    a crossing: the strands at i and i+1 trade places.  The strand going
    down is in front, as always in a front projection.

Each arc between two cusps runs monotonically left or right.  Components
are oriented so that at their first left cusp the upper branch heads
right, i.e. clockwise, unless listed in ``reversed_components``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from ..errors import FrontError

KINDS = ("L", "R", "X")


@dataclass(frozen=True)
class FrontWord:
    events: tuple[tuple[str, int], ...]
    reversed_components: frozenset[int] = frozenset()

    def __post_init__(self):
        evs = tuple((str(k), int(p)) for k, p in self.events)
        object.__setattr__(self, "events", evs)
        object.__setattr__(self, "reversed_components", frozenset(self.reversed_components))
        validate(evs)
        bad = [c for c in self.reversed_components if not 0 <= c < self.n_components]
        if bad:
            raise FrontError(f"no component(s) {bad} to reverse")

    def __len__(self):
        return len(self.events)

    @cached_property
    def _trace(self) -> _Trace:
        return _Trace(self)

    @property
    def n_components(self) -> int:
        return self._trace.n_components

    def to_json(self):
        doc = {"events": [[k, p] for k, p in self.events]}
        if self.reversed_components:
            doc["reversed"] = sorted(self.reversed_components)
        return doc

    @classmethod
    def from_json(cls, doc) -> FrontWord:
        return cls(tuple((k, p) for k, p in doc["events"]), frozenset(doc.get("reversed", ())))

    def reversed(self, component: int) -> FrontWord:
        return FrontWord(self.events, self.reversed_components ^ {component})


def validate(events) -> int:
    """Check that an event word describes a closed front; returns the peak strand count."""
    count = peak = 0
    for j, (kind, pos) in enumerate(events):
        if kind not in KINDS:
            raise FrontError(f"event {j}: unknown kind {kind!r}")
        hi = count if kind == "L" else count - 2
        if not 0 <= pos <= hi:
            raise FrontError(f"event {j}: {kind} at {pos} with {count} strands")
        count += {"L": 2, "R": -2, "X": 0}[kind]
        peak = max(peak, count)
    if count:
        raise FrontError(f"word ends with {count} open strands")
    return peak


def max_strands(f: FrontWord) -> int:
    return validate(f.events)


def strand_states(events):
    """Yield, for each event, the stack of strand ids just before it.

    Strand ids count up from 0 in order of birth; each left cusp gives birth
    to (lower, upper) = (2k, 2k+1).
    """
    stack: list[int] = []
    born = 0
    for kind, pos in events:
        yield list(stack)
        if kind == "L":
            stack[pos:pos] = [born, born + 1]
            born += 2
        elif kind == "R":
            del stack[pos : pos + 2]
        else:
            stack[pos], stack[pos + 1] = stack[pos + 1], stack[pos]
    yield list(stack)


class _Trace:
    """Strand bookkeeping for one word: components, directions, crossings."""

    def __init__(self, f: FrontWord):
        parent: dict[int, int] = {}

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        # left cusp partners and right cusp partners of each strand
        lpartner, rpartner = {}, {}
        self.cusps = []  # (event index, kind, lower id, upper id)
        self.crossings = []  # (event index, rising id, falling id)
        states = list(strand_states(f.events))
        for j, (kind, pos) in enumerate(f.events):
            before, after = states[j], states[j + 1]
            if kind == "L":
                lo, up = after[pos], after[pos + 1]
                parent[lo], parent[up] = lo, up
                parent[find(up)] = find(lo)
                lpartner[lo], lpartner[up] = up, lo
                self.cusps.append((j, "L", lo, up))
            elif kind == "R":
                lo, up = before[pos], before[pos + 1]
                parent[find(up)] = find(lo)
                rpartner[lo], rpartner[up] = up, lo
                self.cusps.append((j, "R", lo, up))
            else:
                self.crossings.append((j, before[pos], before[pos + 1]))

        roots = {}
        for j, kind, lo, up in self.cusps:
            if kind == "L":
                roots.setdefault(find(lo), (len(roots), up))
        self.n_components = len(roots)
        self.component = {s: roots[find(s)][0] for s in parent}

        # walk each component from its seed strand, flipping at every cusp
        self.rightward: dict[int, bool] = {}
        for comp, seed in roots.values():
            heading_right = comp not in f.reversed_components
            s = seed
            while s not in self.rightward:
                self.rightward[s] = heading_right
                # a rightward strand ends at its right cusp, a leftward one at its left cusp
                s = rpartner[s] if heading_right else lpartner[s]
                heading_right = not heading_right

    def crossing_sign(self, a: int, b: int) -> int:
        return 1 if self.rightward[a] == self.rightward[b] else -1

    def cusp_is_down(self, kind: str, lo: int, up: int) -> bool:
        """Does the curve travel downward through this cusp?"""
        if kind == "R":
            return self.rightward[up]
        return not self.rightward[up]


def _check_component(f: FrontWord, c: int):
    if not 0 <= c < f.n_components:
        raise FrontError(f"front has no component {c}")


def tb_of_component(f: FrontWord, c: int = 0) -> int:
    """Writhe of the component minus its number of right cusps."""
    _check_component(f, c)
    tr = f._trace
    writhe = sum(
        tr.crossing_sign(a, b)
        for _, a, b in tr.crossings
        if tr.component[a] == c and tr.component[b] == c
    )
    right = sum(1 for _, kind, lo, _ in tr.cusps if kind == "R" and tr.component[lo] == c)
    return writhe - right


def r_of_component(f: FrontWord, c: int = 0) -> int:
    _check_component(f, c)
    tr = f._trace
    down = up = 0
    for _, kind, lo, hi in tr.cusps:
        if tr.component[lo] != c:
            continue
        if tr.cusp_is_down(kind, lo, hi):
            down += 1
        else:
            up += 1
    return (down - up) // 2


def linking(f: FrontWord, c1: int, c2: int) -> int:
    _check_component(f, c1)
    _check_component(f, c2)
    if c1 == c2:
        raise FrontError("linking number needs two distinct components")
    tr = f._trace
    total = sum(
        tr.crossing_sign(a, b)
        for _, a, b in tr.crossings
        if {tr.component[a], tr.component[b]} == {c1, c2}
    )
    return total // 2


def component_invariants(f: FrontWord) -> list[tuple[int, int]]:
    return [(tb_of_component(f, c), r_of_component(f, c)) for c in range(f.n_components)]


def linking_matrix(f: FrontWord) -> list[list[int | None]]:
    k = f.n_components
    return [[None if i == j else linking(f, i, j) for j in range(k)] for i in range(k)]


def writhe(f: FrontWord) -> int:
    tr = f._trace
    return sum(tr.crossing_sign(a, b) for _, a, b in tr.crossings)


def strand_direction(f: FrontWord, at: int, pos: int) -> tuple[int, bool]:
    """Component and heading (True = rightward) of the strand at height ``pos``
    just before event ``at`` (``at == len(f)`` means after the last event)."""
    states = list(strand_states(f.events))
    stack = states[at]
    if not 0 <= pos < len(stack):
        raise FrontError(f"no strand at height {pos} before event {at}")
    s = stack[pos]
    return f._trace.component[s], f._trace.rightward[s]
