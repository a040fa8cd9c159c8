"""Legendrian cable links of a knot type supplied as data.

The companion K is described by its mountain range plus two trusted
flags (uniform thickness, Legendrian simplicity).  The behaviour of the
(np, nq) cable depends on where q/p sits relative to K's maximal tb.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from math import gcd
from typing import Iterable, Sequence

from .errors import AssumptionViolated, InvalidParameters, RegimeMismatch, UnrealizableInput
from .mountain import Invariants, MountainRange, lattice_points_at_or_above, torus_knot_range
from .toruslinks import (
    NondestabRep,
    OrderedLink,
    Realization,
    as_link,
    check_permutation,
    is_rotation,
    preserves_invariants,
    realize_against,
    resolve_labels,
)


class Regime(str, enum.Enum):
    GREATER = "Greater"
    TB_SLOPE = "TbSlope"
    INTEGRAL_LESSER = "IntegralLesser"
    NONINTEGRAL_LESSER = "NonintegralLesser"


class Verdict(str, enum.Enum):
    YES = "yes"
    NO = "no"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class CableSpec:
    n: int
    p: int
    q: int

    def __post_init__(self):
        if self.n < 1 or self.p < 1:
            raise InvalidParameters("need n >= 1 and p >= 1")
        if gcd(self.p, abs(self.q)) != 1:
            raise InvalidParameters(f"gcd(p, |q|) must be 1; got p={self.p}, q={self.q}")

    def to_json(self):
        return {"n": self.n, "p": self.p, "q": self.q}


@dataclass(frozen=True)
class KnotTypeData:
    name: str
    range: MountainRange
    uniformly_thick: bool
    legendrian_simple: bool
    cable_of: tuple[int, int] | None = None

    @property
    def tb_bar(self) -> int:
        return self.range.max_tb

    @property
    def sl_bar(self) -> int:
        return max(pk.tb - pk.r for pk in self.range.peaks)

    def top_classes(self) -> list[Invariants]:
        return [pk for pk in self.range.peaks if pk.tb == self.tb_bar]

    def to_json(self):
        return {
            "name": self.name,
            "peaks": self.range.to_json()["peaks"],
            "tb_bar": self.tb_bar,
            "sl_bar": self.sl_bar,
            "uniformly_thick": self.uniformly_thick,
            "legendrian_simple": self.legendrian_simple,
            "cable_of": list(self.cable_of) if self.cable_of else None,
        }

    @classmethod
    def from_json(cls, doc) -> KnotTypeData:
        k = cls(
            name=doc["name"],
            range=MountainRange.from_json(doc),
            uniformly_thick=bool(doc["uniformly_thick"]),
            legendrian_simple=bool(doc["legendrian_simple"]),
            cable_of=tuple(doc["cable_of"]) if doc.get("cable_of") else None,
        )
        for key in ("tb_bar", "sl_bar"):
            if key in doc and doc[key] != getattr(k, key):
                raise InvalidParameters(f"{key}={doc[key]} disagrees with the peaks ({getattr(k, key)})")
        return k


UNKNOT = KnotTypeData("unknot", MountainRange([Invariants(-1, 0)]), False, True)
FIGURE_EIGHT = KnotTypeData("fig8", MountainRange([Invariants(-3, 0)]), True, True)


def torus_knot(p: int, q: int) -> KnotTypeData:
    """The (p, q) torus knot for signed q; only negative ones are uniformly thick."""
    if p == 1 or abs(q) == 1:
        return UNKNOT
    a, b = sorted((p, abs(q)))
    sign = "+" if q > 0 else "-"
    return KnotTypeData(
        f"torus:{p}:{q:+d}",
        torus_knot_range(a, b, sign),
        uniformly_thick=q < 0,
        legendrian_simple=True,
        cable_of=(p, q),
    )


def builtin_knot(name: str) -> KnotTypeData:
    if name == "unknot":
        return UNKNOT
    if name in ("fig8", "figure-eight", "4_1"):
        return FIGURE_EIGHT
    if name.startswith("torus:"):
        try:
            _, p, q = name.split(":")
            return torus_knot(int(p), int(q))
        except ValueError:
            pass
    raise InvalidParameters(f"unknown knot {name!r}; expected unknot, fig8 or torus:p:+-q")


def _require_flags(K: KnotTypeData):
    if not K.uniformly_thick:
        raise AssumptionViolated(f"{K.name} is not marked uniformly thick")
    if not K.legendrian_simple:
        raise AssumptionViolated(f"{K.name} is not marked Legendrian simple")


def ceil_div(a: int, b: int) -> int:
    return -((-a) // b)


def slope_regime(K: KnotTypeData, spec: CableSpec) -> Regime:
    lhs, rhs = spec.q, spec.p * K.tb_bar
    if lhs > rhs:
        return Regime.GREATER
    if lhs == rhs:
        return Regime.TB_SLOPE
    return Regime.INTEGRAL_LESSER if spec.p == 1 else Regime.NONINTEGRAL_LESSER


def classes_at(K: KnotTypeData, tb: int) -> list[Invariants]:
    return [c for c in lattice_points_at_or_above(K.range, tb) if c.tb == tb]


def std_cable_components(
    K: KnotTypeData, spec: CableSpec, regime: Regime | None = None
) -> list[NondestabRep]:
    """Invariants of the standard cables, one record per base class (and sign)."""
    actual = slope_regime(K, spec)
    if regime is not None and Regime(regime) != actual:
        raise RegimeMismatch(f"slope {spec.q}/{spec.p} is in regime {actual.value}, not {Regime(regime).value}")
    n, p, q = spec.n, spec.p, spec.q
    out = []
    if actual is Regime.GREATER:
        for lam in K.top_classes():
            c = Invariants(p * q - q + p * K.tb_bar, p * lam.r)
            out.append(NondestabRep("Standard", (c,) * n, base=lam))
    elif actual is Regime.TB_SLOPE:
        for lam in K.top_classes():
            out.append(NondestabRep("NCopy", (lam,) * n, r0=lam.r))
    elif actual is Regime.INTEGRAL_LESSER:
        for lam in classes_at(K, q):
            out.append(NondestabRep("NCopy", (lam,) * n, r0=lam.r))
    else:
        c = ceil_div(q, p)
        s = p * c - q
        for lam in classes_at(K, c):
            for sign, shift in (("+", s), ("-", -s)):
                comp = Invariants(p * q, p * lam.r + shift)
                out.append(NondestabRep("Standard", (comp,) * n, sign=sign, base=lam))
    return out


def nondestabilizable_reps_cable(K: KnotTypeData, spec: CableSpec) -> list[NondestabRep]:
    _require_flags(K)
    if spec.n < 2:
        raise InvalidParameters("cable links need n >= 2")
    regime = slope_regime(K, spec)
    if regime is not Regime.INTEGRAL_LESSER:
        return std_cable_components(K, spec, regime)
    n, q = spec.n, spec.q
    reps = std_cable_components(K, spec, regime)
    for t in range(1, K.tb_bar - q + 1):
        for hi in classes_at(K, q + t):
            low = Invariants(q - t, hi.r)
            reps.append(NondestabRep("Twisted", (hi,) + (low,) * (n - 1), r0=hi.r, t=t))
    return reps


def cable_max_tb_component(K: KnotTypeData, p: int, q: int) -> int:
    _require_flags(K)
    CableSpec(1, p, q)
    if p == 1:
        return K.tb_bar
    if q > p * K.tb_bar:
        return p * q - abs(p * K.tb_bar - q)
    return p * q


def cable_max_tb_sum(K: KnotTypeData, spec: CableSpec) -> int:
    """Upper bound on the sum of component tb over the whole cable link."""
    if spec.p == 1 and spec.q <= K.tb_bar:
        _require_flags(K)
        return spec.n * spec.q
    return spec.n * cable_max_tb_component(K, spec.p, spec.q)


def is_realizable_cable(K: KnotTypeData, spec: CableSpec, link: Iterable) -> Realization:
    return realize_against(nondestabilizable_reps_cable(K, spec), as_link(spec.n, link))


def permutation_realizable_cable(
    K: KnotTypeData, spec: CableSpec, link: OrderedLink, sigma: Sequence[int]
) -> Verdict:
    comps = tuple(link.components)
    if not is_realizable_cable(K, spec, comps):
        raise UnrealizableInput(f"link {[str(c) for c in comps]} is not realizable")
    sigma = check_permutation(sigma, spec.n)
    regime = slope_regime(K, spec)
    everyone = range(spec.n)
    if regime is Regime.GREATER:
        return Verdict.YES if preserves_invariants(sigma, comps, everyone) else Verdict.NO
    if K.cable_of is not None:
        r, s = K.cable_of
        if spec.q == spec.p * r * s:
            return Verdict.UNKNOWN
    if regime is Regime.TB_SLOPE:
        top = [i for i in everyone if comps[i].tb == K.tb_bar]
        rest = [i for i in everyone if i not in top]
        ok = all(sigma[i] == i for i in top) and preserves_invariants(sigma, comps, rest)
    else:
        top = [i for i in everyone if comps[i].tb == spec.p * spec.q]
        labels = resolve_labels(top, link.cyclic_labels)
        rest = [i for i in everyone if i not in labels]
        ok = is_rotation(sigma, labels) and preserves_invariants(sigma, comps, rest)
    return Verdict.YES if ok else Verdict.NO


def transverse_cable_sl_max(K: KnotTypeData, p: int, q: int) -> int:
    """Largest self-linking number of a component of the (p, q) cable.

    Outside the integral lesser case this is pq - q + p*sl_bar(K): the
    transverse push-offs of the standard cables with the most negative
    rotation attain it.
    """
    _require_flags(K)
    CableSpec(1, p, q)
    if p == 1 and q <= K.tb_bar:
        return K.sl_bar
    return p * q - q + p * K.sl_bar
