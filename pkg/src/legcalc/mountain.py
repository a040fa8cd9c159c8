"""Mountain ranges: which (tb, r) pairs a Legendrian-simple knot type realizes.

A range is generated by its peaks (the non-destabilizable classes); every
other class is reached by stabilizing, which lowers tb by one and moves r
by one in either direction.  So (tb, r) sits below a peak P exactly when
P.tb - tb >= |r - P.r| with matching parity.
"""

from __future__ import annotations

import warnings
from collections import deque
from dataclasses import dataclass
from math import gcd
from typing import Iterable

from .errors import BudgetExceeded, InvalidParameters


@dataclass(frozen=True, order=True)
class Invariants:
    """Classical invariants of one Legendrian knot.  tb + r is always odd."""

    tb: int
    r: int

    def __post_init__(self):
        if (self.tb + self.r) % 2 == 0:
            raise InvalidParameters(f"tb + r must be odd, got ({self.tb}, {self.r})")

    def to_json(self):
        return {"tb": self.tb, "r": self.r}

    def __str__(self):
        return f"({self.tb},{self.r})"


Peak = Invariants
ComponentInvariants = Invariants


def in_cone(top: Invariants, tb: int, r: int) -> bool:
    """Is (tb, r) a (possibly empty) stabilization of ``top``?"""
    drop = top.tb - tb
    return drop >= abs(r - top.r) and (drop - (r - top.r)) % 2 == 0


def stabilize(c: Invariants, sign: str) -> Invariants:
    if sign == "+":
        return Invariants(c.tb - 1, c.r + 1)
    if sign == "-":
        return Invariants(c.tb - 1, c.r - 1)
    raise InvalidParameters(f"stabilization sign must be + or -, got {sign!r}")


class MountainRange:
    def __init__(self, peaks: Iterable[Invariants | tuple[int, int]]):
        ps = [p if isinstance(p, Invariants) else Invariants(*p) for p in peaks]
        if not ps:
            raise InvalidParameters("a mountain range needs at least one peak")
        if len(set(ps)) != len(ps):
            raise InvalidParameters("duplicate peaks")
        for a in ps:
            for b in ps:
                if a != b and in_cone(a, b.tb, b.r):
                    raise InvalidParameters(f"peak {b} is a stabilization of {a}")
        if len({p.tb for p in ps}) > 1:
            warnings.warn("mountain range has peaks at several tb levels", stacklevel=2)
        self.peaks = tuple(sorted(ps, key=lambda p: (-p.tb, p.r)))

    @property
    def max_tb(self) -> int:
        return self.peaks[0].tb

    def contains(self, tb: int, r: int) -> bool:
        return any(in_cone(p, tb, r) for p in self.peaks)

    def __contains__(self, c):
        return self.contains(c.tb, c.r)

    def __eq__(self, other):
        return isinstance(other, MountainRange) and self.peaks == other.peaks

    def __hash__(self):
        return hash(self.peaks)

    def __repr__(self):
        return f"MountainRange({list(self.peaks)})"

    def to_json(self):
        return {"peaks": [p.to_json() for p in self.peaks]}

    @classmethod
    def from_json(cls, doc) -> MountainRange:
        return cls(Invariants(int(p["tb"]), int(p["r"])) for p in doc["peaks"])


def contains(mr: MountainRange, tb: int, r: int) -> bool:
    return mr.contains(tb, r)


def torus_knot_range(p: int, q: int, sign: str) -> MountainRange:
    """Peaks of the (p, q) torus knot, positive or negative according to sign."""
    if sign not in ("+", "-"):
        raise InvalidParameters(f"sign must be + or -, got {sign!r}")
    if p < 1 or q < p or gcd(p, q) != 1 or (p >= 2 and q == p):
        raise InvalidParameters(f"need gcd(p,q)=1 and q >= p >= 1 (q > p when p >= 2); got p={p}, q={q}")
    if p == 1:
        return MountainRange([Invariants(-1, 0)])
    if sign == "+":
        return MountainRange([Invariants(p * q - p - q, 0)])
    m = q // p
    rots = set()
    for k in range(m):
        rots.update({q - p - 2 * p * k, -(q - p - 2 * p * k)})
    return MountainRange(Invariants(-p * q, r) for r in rots)


def lattice_points_at_or_above(mr: MountainRange, tb0: int) -> list[Invariants]:
    out = []
    for p in mr.peaks:
        for tb in range(p.tb, tb0 - 1, -1):
            d = p.tb - tb
            out.extend(Invariants(tb, r) for r in range(p.r - d, p.r + d + 1, 2))
    return sorted(set(out), key=lambda c: (-c.tb, c.r))


def unknot_classes_at(tb: int) -> list[Invariants]:
    if tb > -1:
        raise InvalidParameters(f"the unknot has no class with tb = {tb}")
    return [Invariants(tb, r) for r in range(tb + 1, -tb, 2)]


def bfs_contains(mr: MountainRange, tb: int, r: int, budget: int) -> bool:
    """Reference membership test: explore stabilizations of every peak.

    Only classes at most ``budget`` below the highest peak are explored, so
    asking about anything lower is an error rather than a silent no.
    """
    if mr.max_tb - tb > budget:
        raise BudgetExceeded(f"tb={tb} lies below the explored frontier (budget {budget})")
    seen = set()
    todo = deque((pk.tb, pk.r) for pk in mr.peaks)
    while todo:
        c = todo.popleft()
        if c in seen or c[0] < tb:
            continue
        seen.add(c)
        if c == (tb, r):
            return True
        todo.append((c[0] - 1, c[1] + 1))
        todo.append((c[0] - 1, c[1] - 1))
    return False
