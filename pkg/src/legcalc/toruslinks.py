"""Legendrian and transverse (np, +-nq) torus links.

Every Legendrian torus link destabilizes to one of finitely many
non-destabilizable representatives, and links are determined up to
isotopy by the multiset of component invariants.  Realizability therefore
reduces to: does some representative have the given components in the
stabilization cones of its own components, under some matching?
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import permutations
from math import gcd
from typing import Iterable, Sequence

from .errors import (
    InvalidParameters,
    MalformedPermutation,
    SizeGuardExceeded,
    SizeMismatch,
    UnrealizableInput,
)
from .mountain import Invariants, in_cone, torus_knot_range, unknot_classes_at

MAX_PERMUTATION_N = 9


@dataclass(frozen=True)
class TorusLinkSpec:
    """The (np, sign*nq) torus link: n parallel copies of a (p, q) curve."""

    n: int
    p: int
    q: int
    sign: str

    def __post_init__(self):
        if self.sign not in ("+", "-"):
            raise InvalidParameters(f"sign must be + or -, got {self.sign!r}")
        if self.n < 2:
            raise InvalidParameters("a torus link needs n >= 2")
        if self.p < 1 or self.q < self.p or gcd(self.p, self.q) != 1:
            raise InvalidParameters(f"need gcd(p,q)=1 and q >= p >= 1; got p={self.p}, q={self.q}")
        if self.p >= 2 and self.q == self.p:
            raise InvalidParameters("q must exceed p when p >= 2")

    @property
    def knotted(self) -> bool:
        return self.p >= 2

    @property
    def max_tb(self) -> int:
        """Largest tb any single component can have."""
        p, q = self.p, self.q
        if self.sign == "+":
            return p * q - p - q
        return -p * q if self.knotted else -1

    def to_json(self):
        return {"n": self.n, "p": self.p, "q": self.q, "sign": self.sign}


@dataclass(frozen=True)
class NondestabRep:
    """A non-destabilizable link, described by the invariants of its components.

    ``components`` is sorted high tb first; twisted copies have exactly one
    high component and n-1 equal low ones.
    """

    kind: str
    components: tuple[Invariants, ...]
    r0: int | None = None
    t: int | None = None
    sign: str | None = None
    base: Invariants | None = None

    def admits(self, comps: Sequence[Invariants]) -> bool:
        """Can ``comps`` be matched to our components, each below its partner?"""
        if len(comps) != len(self.components):
            return False
        slots = sorted(set(self.components), reverse=True)
        if len(slots) == 1:
            top = slots[0]
            return all(in_cone(top, c.tb, c.r) for c in comps)
        if len(slots) == 2 and self.components.count(slots[0]) == 1:
            high, low = slots
            for i, c in enumerate(comps):
                if in_cone(high, c.tb, c.r) and all(
                    in_cone(low, d.tb, d.r) for j, d in enumerate(comps) if j != i
                ):
                    return True
            return False
        raise InvalidParameters(f"unsupported representative shape {self.components}")

    @property
    def total_component_tb(self) -> int:
        return sum(c.tb for c in self.components)

    def to_json(self):
        doc = {"kind": self.kind}
        if self.r0 is not None:
            doc["r0"] = self.r0
        if self.t is not None:
            doc["t"] = self.t
        if self.sign is not None:
            doc["sign"] = self.sign
        if self.base is not None:
            doc["base"] = self.base.to_json()
        doc["components"] = [c.to_json() for c in self.components]
        return doc


def _copies(n, c: Invariants):
    return (c,) * n


def _twisted(n, high: Invariants, low: Invariants):
    return (high,) + (low,) * (n - 1)


@dataclass(frozen=True)
class Realization:
    realizable: bool
    witnesses: tuple[NondestabRep, ...] = ()
    reason: str = ""

    def __bool__(self):
        return self.realizable


@dataclass(frozen=True)
class OrderedLink:
    """Components in a fixed order.

    ``cyclic_labels`` maps the index of each max-tb component of a negative
    link to its position in the cyclic order on the torus they lie on.
    ``None`` means "in index order".
    """

    components: tuple[Invariants, ...]
    cyclic_labels: dict[int, int] | None = field(default=None, hash=False)


def as_link(n: int, comps: Iterable) -> tuple[Invariants, ...]:
    """Normalize an unordered link to a sorted tuple, checking its size."""
    out = tuple(sorted(c if isinstance(c, Invariants) else Invariants(*c) for c in comps))
    if len(out) != n:
        raise SizeMismatch(f"expected {n} components, got {len(out)}")
    return out


def check_orientations(orientations: Sequence[str]):
    """Only consistently oriented links are classified here."""
    if len(set(orientations)) > 1:
        raise InvalidParameters("mixed component orientations are not supported")


def nondestabilizable_reps(spec: TorusLinkSpec) -> list[NondestabRep]:
    n, p, q = spec.n, spec.p, spec.q
    if spec.sign == "+":
        return [NondestabRep("PosMax", _copies(n, Invariants(p * q - p - q, 0)))]
    if spec.knotted:
        return [
            NondestabRep("NegKnottedMax", _copies(n, pk), r0=pk.r)
            for pk in torus_knot_range(p, q, "-").peaks
        ]
    reps = [NondestabRep("NCopy", _copies(n, c), r0=c.r) for c in unknot_classes_at(-q)]
    for t in range(1, q):
        for c in unknot_classes_at(-q + t):
            low = Invariants(-q - t, c.r)
            reps.append(NondestabRep("Twisted", _twisted(n, c, low), r0=c.r, t=t))
    return reps


def total_tb(spec: TorusLinkSpec, link: Iterable) -> int:
    comps = as_link(spec.n, link)
    sgn = 1 if spec.sign == "+" else -1
    return sum(c.tb for c in comps) + sgn * (spec.n - 1) * spec.n * spec.p * spec.q


def max_component_tb_sum(spec: TorusLinkSpec) -> int:
    if spec.sign == "+":
        return spec.n * (spec.p * spec.q - spec.p - spec.q)
    return -spec.n * spec.p * spec.q


def realize_against(reps: Sequence[NondestabRep], comps: Sequence[Invariants]) -> Realization:
    hits = tuple(rep for rep in reps if rep.admits(comps))
    if hits:
        return Realization(True, hits)
    return Realization(False, (), "no non-destabilizable representative stabilizes to these components")


def is_realizable(spec: TorusLinkSpec, link: Iterable) -> Realization:
    return realize_against(nondestabilizable_reps(spec), as_link(spec.n, link))


def _require_realizable(spec, link, which=None):
    comps = as_link(spec.n, link)
    if not is_realizable(spec, comps):
        label = f"{which} link" if which else "link"
        raise UnrealizableInput(f"{label} {[str(c) for c in comps]} is not realizable", which)
    return comps


def unordered_isotopic(spec: TorusLinkSpec, a: Iterable, b: Iterable) -> bool:
    ca = _require_realizable(spec, a, "first")
    cb = _require_realizable(spec, b, "second")
    return ca == cb


def common_destabilizations(spec: TorusLinkSpec, link: Iterable) -> list[NondestabRep]:
    comps = _require_realizable(spec, link)
    return [rep for rep in nondestabilizable_reps(spec) if rep.admits(comps)]


def check_permutation(sigma: Sequence[int], n: int) -> tuple[int, ...]:
    sigma = tuple(sigma)
    if len(sigma) != n or sorted(sigma) != list(range(n)):
        raise MalformedPermutation(f"{list(sigma)} is not a permutation of 0..{n - 1}")
    return sigma


def resolve_labels(top: list[int], labels: dict[int, int] | None) -> dict[int, int]:
    """Validate cyclic labels on the index set ``top`` (defaulting to index order)."""
    if labels is None:
        return {i: k for k, i in enumerate(top)}
    labels = {int(i): int(k) for i, k in labels.items()}
    if sorted(labels) != top:
        raise InvalidParameters(
            f"cyclic labels must be given exactly for components {top}, got {sorted(labels)}"
        )
    if sorted(labels.values()) != list(range(len(top))):
        raise InvalidParameters("cyclic labels must be the positions 0..k-1")
    return labels


def is_rotation(sigma: Sequence[int], labels: dict[int, int]) -> bool:
    """Does sigma act on the labelled indices as a rotation of the cyclic order?"""
    if not labels:
        return True
    if any(sigma[i] not in labels for i in labels):
        return False
    k = len(labels)
    i0 = next(iter(labels))
    shift = (labels[sigma[i0]] - labels[i0]) % k
    return all((labels[sigma[i]] - labels[i]) % k == shift for i in labels)


def preserves_invariants(sigma, comps, indices) -> bool:
    return all(comps[i] == comps[sigma[i]] for i in indices)


def permutation_realizable(spec: TorusLinkSpec, link: OrderedLink, sigma: Sequence[int]) -> bool:
    comps = tuple(link.components)
    _require_realizable(spec, comps)
    sigma = check_permutation(sigma, spec.n)
    everyone = range(spec.n)
    if spec.sign == "+":
        if link.cyclic_labels:
            raise InvalidParameters("positive torus links carry no cyclic labels")
        return preserves_invariants(sigma, comps, everyone)
    top = [i for i in everyone if comps[i].tb == -spec.p * spec.q]
    labels = resolve_labels(top, link.cyclic_labels)
    rest = [i for i in everyone if i not in labels]
    return is_rotation(sigma, labels) and preserves_invariants(sigma, comps, rest)


def realizable_permutations(spec: TorusLinkSpec, link: OrderedLink) -> list[tuple[int, ...]]:
    if spec.n > MAX_PERMUTATION_N:
        raise SizeGuardExceeded(f"refusing to enumerate {spec.n}! permutations (limit n <= {MAX_PERMUTATION_N})")
    return [s for s in permutations(range(spec.n)) if permutation_realizable(spec, link, s)]


def realizable_permutation_count(spec: TorusLinkSpec, link: OrderedLink) -> int:
    return len(realizable_permutations(spec, link))


def transverse_sl_max_component(p: int, q: int, sign: str) -> int:
    torus_knot_range(p, q, sign)  # parameter validation
    sgn = 1 if sign == "+" else -1
    return sgn * q * (p - 1) - p


def transverse_realizable(spec: TorusLinkSpec, sls: Iterable[int]) -> bool:
    sls = list(sls)
    if len(sls) != spec.n:
        raise SizeMismatch(f"expected {spec.n} self-linking numbers, got {len(sls)}")
    top = transverse_sl_max_component(spec.p, spec.q, spec.sign)
    return all(sl <= top and (top - sl) % 2 == 0 for sl in sls)
