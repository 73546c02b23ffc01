"""The projective line under the half-transition-probability relation.

Points live on a circle of circumference 3 (exact rational coordinates,
reduced modulo 3 by the wrap map), and two points are q-distinct exactly when
their circular gap lies in [1, 2].  The proper non-trivial q-subsets are the
closed arcs of length at most 1, so the whole q-subset lattice is
representable by a tagged empty / arc / full value and all arithmetic stays
rational.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional

from .errors import InputError, QsetsError
from .exact import as_fraction

CIRCUMFERENCE = Fraction(3)
MAX_ARC_LENGTH = Fraction(1)


def wrap_theta(value) -> Fraction:
    """Reduce a coordinate into [0, 3)."""
    return as_fraction(value) % CIRCUMFERENCE


def points_q_distinct(x, y) -> bool:
    """Pointwise relation: circular gap in [1, 2]."""
    gap = (as_fraction(x) - as_fraction(y)) % CIRCUMFERENCE
    return 1 <= gap <= 2


@dataclass(frozen=True)
class ArcSet:
    """Empty set, a closed arc of length <= 1, or the whole circle."""

    kind: str
    start: Optional[Fraction] = None
    length: Optional[Fraction] = None

    def __post_init__(self):
        if self.kind not in ("empty", "arc", "full"):
            raise InputError(f"unknown arc kind {self.kind!r}")
        if self.kind == "arc":
            if self.start is None or self.length is None:
                raise InputError("an arc needs a start and a length")
            if not 0 <= self.start < CIRCUMFERENCE:
                raise InputError("arc start must lie in [0, 3)")
            if not 0 <= self.length <= MAX_ARC_LENGTH:
                raise InputError("arc length must lie in [0, 1]")
        elif self.start is not None or self.length is not None:
            raise InputError(f"{self.kind} arc set carries no start/length")

    # -- construction ---------------------------------------------------------

    @classmethod
    def empty(cls) -> "ArcSet":
        return cls("empty")

    @classmethod
    def full(cls) -> "ArcSet":
        return cls("full")

    @classmethod
    def arc(cls, start, length) -> "ArcSet":
        return cls("arc", wrap_theta(start), as_fraction(length))

    @classmethod
    def point(cls, theta) -> "ArcSet":
        return cls.arc(theta, 0)

    # -- predicates -----------------------------------------------------------

    def is_empty(self) -> bool:
        return self.kind == "empty"

    def is_full(self) -> bool:
        return self.kind == "full"

    def is_singleton(self) -> bool:
        return self.kind == "arc" and self.length == 0

    def contains_point(self, theta) -> bool:
        if self.kind == "empty":
            return False
        if self.kind == "full":
            return True
        return (wrap_theta(theta) - self.start) % CIRCUMFERENCE <= self.length

    def issubset(self, other: "ArcSet") -> bool:
        if self.kind == "empty" or other.kind == "full":
            return True
        if self.kind == "full" or other.kind == "empty":
            return False
        offset = (self.start - other.start) % CIRCUMFERENCE
        return offset + self.length <= other.length

    # -- lattice operations -----------------------------------------------------

    def qcomp(self) -> "ArcSet":
        """All points whose circular gap to every member lies in [1, 2]."""
        if self.kind == "empty":
            return ArcSet.full()
        if self.kind == "full":
            return ArcSet.empty()
        return ArcSet.arc(self.start + self.length + 1, 1 - self.length)

    def intersect(self, other: "ArcSet") -> "ArcSet":
        if self.kind == "empty" or other.kind == "empty":
            return ArcSet.empty()
        if self.kind == "full":
            return other
        if other.kind == "full":
            return self
        # Work in the universal cover: self spans [s, s+len]; other appears as
        # translates by multiples of 3.  For arcs of length <= 1 the result is
        # provably a single component; fail loudly if that is ever violated.
        s_lo, s_hi = self.start, self.start + self.length
        pieces = []
        for k in (-1, 0, 1):
            o_lo = other.start + 3 * k
            o_hi = o_lo + other.length
            lo = max(s_lo, o_lo)
            hi = min(s_hi, o_hi)
            if lo <= hi:
                pieces.append((lo, hi))
        if not pieces:
            return ArcSet.empty()
        if len(pieces) > 1:
            raise QsetsError(f"arc intersection produced {len(pieces)} components")
        lo, hi = pieces[0]
        return ArcSet.arc(lo, hi - lo)

    def qunion(self, other: "ArcSet") -> "ArcSet":
        """Join in the q-subset lattice, via the complement of the
        intersection of complements."""
        return self.qcomp().intersect(other.qcomp()).qcomp()


def closure_points(points: Iterable) -> ArcSet:
    """Smallest arc of length <= 1 containing the points, or the full circle.

    An empty input gives the empty set by convention.
    """
    thetas = sorted({wrap_theta(p) for p in points})
    if not thetas:
        return ArcSet.empty()
    if len(thetas) == 1:
        return ArcSet.point(thetas[0])
    best_gap = None
    best_index = 0
    for i, t in enumerate(thetas):
        nxt = thetas[(i + 1) % len(thetas)]
        gap = (nxt - t) % CIRCUMFERENCE
        if best_gap is None or gap > best_gap:
            best_gap = gap
            best_index = i
    length = CIRCUMFERENCE - best_gap
    if length > MAX_ARC_LENGTH:
        return ArcSet.full()
    start = thetas[(best_index + 1) % len(thetas)]
    return ArcSet.arc(start, length)


def arc_commutes(s: ArcSet, t: ArcSet) -> bool:
    """Kalmbach commutativity s = (s ^ t) v (s ^ t') with exact arc meets."""
    return s.intersect(t).qunion(s.intersect(t.qcomp())) == s


def arc_qcommutes(s: ArcSet, t: ArcSet) -> bool:
    """Symmetric commutation via the subset law with exact arc meets."""
    both = s.intersect(t).qcomp()
    return s.intersect(both).issubset(t.intersect(both).qcomp())
