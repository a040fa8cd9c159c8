"""Constructions of fronts: stabilization, n-copies, twist and cusp tangles,
standard cables and torus links."""

from __future__ import annotations

from typing import Callable

from ..cables import CableSpec, Regime, ceil_div
from ..errors import FrontError, InvalidParameters, SiteError, TbMismatch
from .word import FrontWord, r_of_component, strand_states, tb_of_component

MAX_TB_UNKNOT = FrontWord((("L", 0), ("R", 0)))

# First hit of a depth-first search over words with three cusps of each kind
# and four crossings for one component with tb = -3, r = 0 and the Jones
# polynomial of 4_1.  At four crossings that polynomial pins down the knot.
FIGURE_EIGHT = FrontWord((
    ("L", 0), ("L", 0), ("L", 0), ("X", 1), ("X", 3),
    ("X", 1), ("R", 2), ("X", 1), ("R", 0), ("R", 0),
))


class _Stack:
    """Label-tracking helper for emitting events over a window of heights."""

    def __init__(self, labels, offset=0):
        self.labels = list(labels)
        self.offset = offset
        self.events: list[tuple[str, int]] = []

    def L(self, pos, lower, upper):
        self.labels[pos:pos] = [lower, upper]
        self.events.append(("L", pos + self.offset))

    def R(self, pos):
        del self.labels[pos : pos + 2]
        self.events.append(("R", pos + self.offset))

    def X(self, pos):
        lab = self.labels
        lab[pos], lab[pos + 1] = lab[pos + 1], lab[pos]
        self.events.append(("X", pos + self.offset))

    def sort(self, lo: int, hi: int, goes_below: Callable) -> None:
        """Bubble sort heights [lo, hi), swapping b down past a when goes_below(b, a)."""
        changed = True
        while changed:
            changed = False
            for i in range(lo, hi - 1):
                if goes_below(self.labels[i + 1], self.labels[i]):
                    self.X(i)
                    changed = True


def _single_component(f: FrontWord):
    if f.n_components != 1:
        raise FrontError(f"expected a knot front, got {f.n_components} components")


def _first_strand_site(f: FrontWord, component: int = 0) -> tuple[int, int]:
    """(event index, height) of the upper branch just after the component's first left cusp."""
    births = 0
    for j, (kind, pos) in enumerate(f.events):
        if kind != "L":
            continue
        if f._trace.component[2 * births] == component:
            return j + 1, pos + 1
        births += 1
    raise FrontError(f"front has no component {component}")


def stabilize(f: FrontWord, component: int = 0, sign: str = "+") -> FrontWord:
    """Add a zigzag to one component: tb drops by one, r moves by +-1."""
    if sign not in ("+", "-"):
        raise InvalidParameters(f"sign must be + or -, got {sign!r}")
    at, i = _first_strand_site(f, component)
    rightward = component not in f.reversed_components
    # a zigzag dipping below the strand has two down cusps on a rightward strand
    down = (sign == "+") == rightward
    zig = [("L", i), ("R", i + 1)] if down else [("L", i + 1), ("R", i)]
    return FrontWord(f.events[:at] + tuple(zig) + f.events[at:], f.reversed_components)


def stabilized(f: FrontWord, positive: int, negative: int) -> FrontWord:
    for _ in range(positive):
        f = stabilize(f, 0, "+")
    for _ in range(negative):
        f = stabilize(f, 0, "-")
    return f


def front_with_invariants(base: FrontWord, tb: int, r: int) -> FrontWord:
    """Stabilize a single-component front down to the class (tb, r)."""
    _single_component(base)
    tb0, r0 = tb_of_component(base), r_of_component(base)
    drop = tb0 - tb
    if drop < abs(r - r0) or (drop + r - r0) % 2:
        raise TbMismatch(f"({tb}, {r}) is not a stabilization of ({tb0}, {r0})")
    ups = (drop + r - r0) // 2
    return stabilized(base, ups, drop - ups)


def n_copy(f: FrontWord, n: int) -> FrontWord:
    """n push-offs of a knot front, copy k shifted k steps in the z direction.

    Copy 0 is the bottom strand of every bundle.  Cusps are staggered
    rather than nested, which is what makes pairwise linking equal tb.
    """
    _single_component(f)
    if n < 1:
        raise InvalidParameters("n must be at least 1")
    if n == 1:
        return f
    st = _Stack([])
    states = strand_states(f.events)
    births = 0
    for (kind, pos), before in zip(f.events, states):
        base = n * pos
        if kind == "L":
            lo, up = 2 * births, 2 * births + 1
            births += 1
            for k in range(n):
                st.L(base + 2 * k, (lo, k), (up, k))
            # lower branches of higher copies pass below upper branches of lower ones
            st.sort(base, base + 2 * n, lambda b, a: b[0] == lo and a[0] == up and b[1] > a[1])
        elif kind == "R":
            lo, up = before[pos], before[pos + 1]
            st.sort(base, base + 2 * n, lambda b, a: b[0] == up and a[0] == lo and a[1] > b[1])
            for k in reversed(range(n)):
                st.R(base + 2 * k)
        else:
            for b in range(n):
                for i in range(base + n + b - 1, base + b - 1, -1):
                    st.X(i)
    return FrontWord(tuple(st.events), frozenset(range(n)) if f.reversed_components else frozenset())


def _splice(f: FrontWord, at: int, events) -> FrontWord:
    return FrontWord(f.events[:at] + tuple(events) + f.events[at:], f.reversed_components)


def _check_site(f: FrontWord, at: int | None, start: int, k: int) -> int:
    """Find (or check) an event boundary where heights [start, start+k) are
    parallel strands heading the same way."""
    tr = f._trace
    states = list(strand_states(f.events))
    candidates = range(len(states)) if at is None else [at]
    for j in candidates:
        if not 0 <= j < len(states):
            break
        stack = states[j]
        if start + k > len(stack) or start < 0:
            continue
        heads = {tr.rightward[s] for s in stack[start : start + k]}
        if len(heads) == 1:
            return j
    raise SiteError(f"no trivial {k}-strand tangle at heights {start}..{start + k - 1}")


def positive_twist_events(start: int, k: int) -> list[tuple[str, int]]:
    """The bottom strand of the bundle climbs over the other k-1 strands."""
    return [("X", start + i) for i in range(k - 1)]


def insert_positive_twists(f: FrontWord, start: int, k: int, count: int, at: int | None = None) -> FrontWord:
    if count < 1 or k < 2:
        raise InvalidParameters("need count >= 1 and at least two strands")
    at = _check_site(f, at, start, k)
    return _splice(f, at, positive_twist_events(start, k) * count)


def sz_tangle_events(start: int, k: int, kind: str) -> list[tuple[str, int]]:
    """One strand of the bundle doubles back across the others.

    Z: the top strand turns back and re-emerges at the bottom.
    S: the bottom strand turns back and re-emerges at the top.
    Each costs a left and a right cusp and k-1 crossings.
    """
    st = _Stack(range(k), offset=start)
    if kind == "Z":
        st.L(0, "lo", "up")
        for i in range(1, k):
            st.X(i)
        st.R(k)
    elif kind == "S":
        st.L(k, "lo", "up")
        for i in range(k - 1, 0, -1):
            st.X(i)
        st.R(0)
    else:
        raise InvalidParameters(f"tangle kind must be S or Z, got {kind!r}")
    return st.events


def insert_sz_tangles(
    f: FrontWord, start: int, k: int, kind: str, count: int, at: int | None = None
) -> FrontWord:
    if count == 0:
        return f
    if not 0 < count < k:
        raise InvalidParameters(f"need 0 <= count < {k} tangles, got {count}")
    at = _check_site(f, at, start, k)
    return _splice(f, at, sz_tangle_events(start, k, kind) * count)


def twist_tangle_events(start: int, n: int) -> list[tuple[str, int]]:
    """Pass strands start+1 .. start+n-1 once around the strand at ``start``.

    The n-1 upper strands dip below the bottom one through a staggered pair
    of cusps and come back up through a nested pair, so each of them loses
    two from tb and one from its linking with every other strand.
    """
    m = n - 1
    st = _Stack(["A"] + [("B", j) for j in range(m)], offset=start)
    for k in range(m):
        st.L(2 * k, ("cL", k), ("cU", k))
    st.sort(0, 2 * m, lambda b, a: b[0] == "cL" and a[0] == "cU")
    for i in range(2 * m - 1, m - 1, -1):
        st.X(i)
    st.sort(m + 1, 3 * m + 1, lambda b, a: b[0] == "B" and a[0] == "cU" and b[1] < a[1])
    for k in reversed(range(m)):
        st.R(m + 1 + 2 * k)
    for k in range(m):
        st.L(m + 1 + k, ("eL", k), ("eU", k))
    for i in range(m, 2 * m):
        st.X(i)
    for i in range(m - 1, -1, -1):
        st.R(i)
    return st.events


def _after_first_block(n: int) -> int:
    """Event index just past the n-copy of a word's opening left cusp."""
    return n + n * (n - 1) // 2


def twisted_n_copy(f: FrontWord, n: int, t: int) -> FrontWord:
    """The n-copy with t twist tangles: copy 0 keeps tb, the others lose 2t."""
    _single_component(f)
    if t < 1:
        raise InvalidParameters("need t >= 1")
    if n < 2:
        raise InvalidParameters("need n >= 2")
    g = n_copy(f, n)
    at = _check_site(g, _after_first_block(n), n, n)
    return _splice(g, at, twist_tangle_events(n, n) * t)


def standard_cable_front(f: FrontWord, spec: CableSpec, tb_bar: int, kind: str = "Z") -> FrontWord:
    """Front of the standard (np, nq) cable built on the knot front f.

    f must already have the tb the slope calls for: tb_bar when q/p >= tb_bar,
    ceil(q/p) when q/p < tb_bar.  ``kind`` picks the S or Z tangles in the
    non-integral lesser case.
    """
    _single_component(f)
    n, p, q = spec.n, spec.p, spec.q
    tb = tb_of_component(f)
    if q > p * tb_bar:
        regime = Regime.GREATER
        need = tb_bar
    elif q == p * tb_bar:
        regime, need = Regime.TB_SLOPE, tb_bar
    elif p == 1:
        regime, need = Regime.INTEGRAL_LESSER, q
    else:
        regime, need = Regime.NONINTEGRAL_LESSER, ceil_div(q, p)
    if tb != need:
        raise TbMismatch(f"{regime.value} cable needs a base front with tb={need}, got tb={tb}")
    if regime in (Regime.TB_SLOPE, Regime.INTEGRAL_LESSER):
        return n_copy(f, n)
    if regime is Regime.GREATER:
        s = q - p * tb_bar
        g = n_copy(f, n * p)
        return insert_positive_twists(g, n * p, n * p, n * s, at=_after_first_block(n * p))
    s = p * need - q
    g = n_copy(f, p)
    g = insert_sz_tangles(g, p, p, kind, s, at=_after_first_block(p))
    return n_copy(g, n)


def positive_torus_front(n: int, p: int, q: int) -> FrontWord:
    """The (np, nq) torus link as np nested max-tb unknots closed up by
    nq fundamental positive twists on their upper strands."""
    k = n * p
    if k < 1 or q < 1:
        raise InvalidParameters("need n, p, q >= 1")
    events = [("L", i) for i in range(k)]
    events += positive_twist_events(k, k) * (n * q)
    events += [("R", i) for i in reversed(range(k))]
    return FrontWord(tuple(events))


def builtin_front(name: str) -> FrontWord:
    if name == "unknot":
        return MAX_TB_UNKNOT
    if name in ("fig8", "figure-eight", "4_1"):
        return FIGURE_EIGHT
    raise InvalidParameters(f"no built-in front for {name!r}; available: unknot, fig8")


def _torus_peak_fronts(p: int, q: int):
    """Max-tb fronts of the (p, q) torus knot, built as cables of the unknot."""
    a, b = sorted((p, abs(q)))
    if q < 0:
        spec = CableSpec(1, a, -b)
        c = ceil_div(-b, a)
        for r in range(c + 1, -c, 2):
            base = front_with_invariants(MAX_TB_UNKNOT, c, r)
            for kind in ("Z", "S"):
                yield standard_cable_front(base, spec, -1, kind)
    else:
        yield standard_cable_front(MAX_TB_UNKNOT, CableSpec(1, a, b), -1)


def knot_front(name: str, tb: int | None = None, r: int | None = None) -> FrontWord:
    """A front of a built-in knot type in the class (tb, r); max tb by default.

    Torus knots are written ``torus:p:q`` with q signed.
    """
    from ..cables import builtin_knot

    K = builtin_knot(name)
    if K.name == "unknot":
        peaks = {(-1, 0): MAX_TB_UNKNOT}
    elif K.name == "fig8":
        peaks = {(-3, 0): FIGURE_EIGHT}
    elif K.cable_of is not None:
        peaks = {}
        for f in _torus_peak_fronts(*K.cable_of):
            peaks.setdefault((tb_of_component(f), r_of_component(f)), f)
    else:
        raise InvalidParameters(f"no front construction for {name!r}")
    if tb is None and r is None:
        return peaks[min(peaks, key=lambda c: (-c[0], abs(c[1]), c[1]))]
    if tb is None or r is None:
        raise InvalidParameters("give both tb and r, or neither")
    for (ptb, pr), f in sorted(peaks.items()):
        if ptb - tb >= abs(r - pr) and (ptb - tb + r - pr) % 2 == 0:
            return front_with_invariants(f, tb, r)
    raise TbMismatch(f"{K.name} has no Legendrian representative with tb={tb}, r={r}")


def cable_base_front(name: str, spec: CableSpec, r: int | None = None) -> FrontWord:
    """The front of K that the standard cable of slope q/p is built on."""
    from ..cables import builtin_knot, classes_at, slope_regime

    K = builtin_knot(name)
    regime = slope_regime(K, spec)
    if regime in (Regime.GREATER, Regime.TB_SLOPE):
        tb = K.tb_bar
    elif regime is Regime.INTEGRAL_LESSER:
        tb = spec.q
    else:
        tb = ceil_div(spec.q, spec.p)
    options = sorted((c.r for c in classes_at(K, tb)), key=lambda x: (abs(x), x))
    if r is None:
        r = options[0]
    elif r not in options:
        raise TbMismatch(f"{K.name} has no class at tb={tb} with r={r}; choose from {sorted(options)}")
    return knot_front(name, tb, r)
