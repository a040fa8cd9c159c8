"""Slopes as vertices of the Farey graph.

Slopes live on the boundary circle of the Farey disk: 0 at the top,
infinity at the bottom, positive slopes on the right half.  Walking
clockwise from 0 therefore visits the positive rationals in increasing
order, then infinity, then the negative rationals from -inf up to 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import InvalidParameters, UndefinedMediant


@dataclass(frozen=True)
class Slope:
    """Reduced fraction num/den with den >= 0; infinity is 1/0."""

    num: int
    den: int = 1

    def __post_init__(self):
        num, den = int(self.num), int(self.den)
        if num == 0 and den == 0:
            raise InvalidParameters("0/0 is not a slope")
        if den < 0:
            num, den = -num, -den
        if den == 0:
            num = 1
        else:
            g = gcd(num, den)
            num, den = num // g, den // g
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    @classmethod
    def parse(cls, text: str) -> Slope:
        text = text.strip()
        if text.lower() in ("inf", "infinity", "∞"):
            return INFINITY
        try:
            if "/" in text:
                a, b = text.split("/")
                return cls(int(a), int(b))
            return cls(int(text), 1)
        except ValueError:
            raise InvalidParameters(f"cannot parse slope {text!r}") from None

    @property
    def is_infinite(self) -> bool:
        return self.den == 0

    def as_fraction(self) -> Fraction:
        if self.is_infinite:
            raise InvalidParameters("infinity has no finite value")
        return Fraction(self.num, self.den)

    def __str__(self):
        if self.is_infinite:
            return "inf"
        if self.den == 1:
            return str(self.num)
        return f"{self.num}/{self.den}"


INFINITY = Slope(1, 0)


def clockwise_key(s: Slope) -> tuple:
    """Position on the boundary circle, read clockwise starting at 0."""
    if s.is_infinite:
        return (1, Fraction(0))
    v = s.as_fraction()
    return (0, v) if v >= 0 else (2, v)


def intersection_number(a: Slope, b: Slope) -> int:
    return abs(a.num * b.den - b.num * a.den)


def is_edge(a: Slope, b: Slope) -> bool:
    return intersection_number(a, b) == 1


def mediant(a: Slope, b: Slope) -> Slope:
    """Farey sum of two slopes.

    Infinity is read as -1/0 next to a negative slope and 1/0 otherwise, so
    the mediant of -1 and infinity is -2 while that of 0 and infinity is 1.
    """
    if a == b:
        raise UndefinedMediant(f"mediant of {a} with itself is undefined")
    if a.is_infinite and b.is_infinite:
        raise UndefinedMediant("mediant of infinity with itself is undefined")
    an, bn = a.num, b.num
    if a.is_infinite and b.num < 0:
        an = -1
    if b.is_infinite and a.num < 0:
        bn = -1
    return Slope(an + bn, a.den + b.den)


def clockwise_contains(s0: Slope, s1: Slope, s: Slope) -> bool:
    """Is ``s`` on the closed clockwise arc running from ``s0`` to ``s1``?"""
    if s0 == s1:
        raise InvalidParameters("arc endpoints must differ")
    k0, k1, k = clockwise_key(s0), clockwise_key(s1), clockwise_key(s)
    if k0 <= k1:
        return k0 <= k <= k1
    return k >= k0 or k <= k1


def _to_infinity(v: Slope) -> tuple[int, int, int, int]:
    """An orientation-preserving integral Mobius map sending v to infinity.

    Returned as (a, b, c, d) acting by (x, y) -> (a x + b y, c x + d y).
    """
    q, p = v.num, v.den
    # extended Euclid for a*q + b*p = 1
    old_r, r = q, p
    old_s, s_ = 1, 0
    old_t, t = 0, 1
    while r:
        k = old_r // r
        old_r, r = r, old_r - k * r
        old_s, s_ = s_, old_s - k * s_
        old_t, t = t, old_t - k * t
    if old_r < 0:
        old_s, old_t = -old_s, -old_t
    return old_s, old_t, -p, q


def _apply(m, s: Slope) -> Slope:
    a, b, c, d = m
    return Slope(a * s.num + b * s.den, c * s.num + d * s.den)


def _inverse(m):
    a, b, c, d = m
    return (d, -b, -c, a)


def minimal_path(s0: Slope, s1: Slope) -> list[Slope]:
    """Shortest clockwise edge path from s0 to s1 in the Farey graph.

    Greedy: from the current vertex jump to the neighbour on the remaining
    arc that lies closest to the target.  After moving the current vertex to
    infinity its neighbours are the integers and that neighbour is simply
    the floor of the image of the target.
    """
    if s0 == s1:
        raise InvalidParameters("path endpoints must differ")
    path = [s0]
    cur = s0
    while cur != s1:
        m = _to_infinity(cur)
        target = _apply(m, s1)
        if target.is_infinite or target.den == 1:
            step = s1
        else:
            step = _apply(_inverse(m), Slope(target.num // target.den, 1))
        path.append(step)
        cur = step
    return path
