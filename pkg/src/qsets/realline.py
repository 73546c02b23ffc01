"""The real line under an uncertainty scale: points are q-distinct when they
are at least delta apart.

Subsets are finite disjoint unions of closed intervals with exact rational
endpoints (rays carry infinity markers), which is closed under every
operation performed here: the q-complement of a union of intervals is again
such a union, and the q-subsets are exactly the unions whose consecutive gaps
reach 2*delta.  Only finitely many intervals are representable; that is
enough for every computation this package performs.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import InputError, PreconditionError
from .exact import NEG_INF, POS_INF, Endpoint, as_fraction, is_finite, parse_endpoint

Interval = tuple[Endpoint, Endpoint]


@dataclass(frozen=True)
class IntervalUnion:
    """Sorted disjoint closed intervals plus the q-distinctness scale delta."""

    delta: Fraction
    intervals: tuple[Interval, ...]

    def __post_init__(self):
        if not isinstance(self.delta, Fraction) or self.delta <= 0:
            raise InputError("delta must be a positive rational")
        previous_hi = None
        last = len(self.intervals) - 1
        for i, (lo, hi) in enumerate(self.intervals):
            if isinstance(lo, float) and (lo != NEG_INF or i != 0):
                raise InputError("-inf may appear only as the first left endpoint")
            if isinstance(hi, float) and (hi != POS_INF or i != last):
                raise InputError("inf may appear only as the last right endpoint")
            if not isinstance(lo, float) and not isinstance(lo, Fraction):
                raise InputError(f"endpoint {lo!r} is not exact")
            if not isinstance(hi, float) and not isinstance(hi, Fraction):
                raise InputError(f"endpoint {hi!r} is not exact")
            if lo > hi:
                raise InputError(f"interval [{lo}, {hi}] is reversed")
            if previous_hi is not None and previous_hi >= lo:
                raise InputError("intervals must be sorted and disjoint")
            previous_hi = hi

    # -- construction -------------------------------------------------------

    @classmethod
    def make(cls, delta, pairs: Iterable[Sequence]) -> "IntervalUnion":
        """Normalize arbitrary closed intervals: sort and merge overlaps."""
        delta = as_fraction(delta)
        items: list[Interval] = []
        for lo, hi in pairs:
            lo = parse_endpoint(lo)
            hi = parse_endpoint(hi)
            if lo > hi:
                raise InputError(f"interval [{lo}, {hi}] is reversed")
            items.append((lo, hi))
        items.sort(key=lambda p: (p[0], p[1]))
        merged: list[Interval] = []
        for lo, hi in items:
            if merged and lo <= merged[-1][1]:
                if hi > merged[-1][1]:
                    merged[-1] = (merged[-1][0], hi)
            else:
                merged.append((lo, hi))
        return cls(delta, tuple(merged))

    @classmethod
    def empty(cls, delta) -> "IntervalUnion":
        return cls(as_fraction(delta), ())

    @classmethod
    def full_line(cls, delta) -> "IntervalUnion":
        return cls(as_fraction(delta), ((NEG_INF, POS_INF),))

    @classmethod
    def from_points(cls, delta, points: Iterable) -> "IntervalUnion":
        pts = [as_fraction(p) for p in points]
        return cls.make(delta, [(p, p) for p in pts])

    # -- predicates -----------------------------------------------------------

    def is_empty(self) -> bool:
        return not self.intervals

    def contains_point(self, x) -> bool:
        x = as_fraction(x)
        return any(lo <= x <= hi for lo, hi in self.intervals)

    def _check_scale(self, other: "IntervalUnion") -> None:
        if self.delta != other.delta:
            raise InputError(f"scale mismatch: {self.delta} vs {other.delta}")

    def issubset(self, other: "IntervalUnion") -> bool:
        self._check_scale(other)
        return self.intersect(other) == self

    # -- set operations ---------------------------------------------------------

    def intersect(self, other: "IntervalUnion") -> "IntervalUnion":
        self._check_scale(other)
        out: list[Interval] = []
        i = j = 0
        a, b = self.intervals, other.intervals
        while i < len(a) and j < len(b):
            lo = max(a[i][0], b[j][0])
            hi = min(a[i][1], b[j][1])
            if lo <= hi:
                out.append((lo, hi))
            if a[i][1] <= b[j][1]:
                i += 1
            else:
                j += 1
        return IntervalUnion(self.delta, tuple(out))

    def union(self, other: "IntervalUnion") -> "IntervalUnion":
        self._check_scale(other)
        return IntervalUnion.make(self.delta, list(self.intervals) + list(other.intervals))

    # -- closure operations ---------------------------------------------------

    def qcomp(self) -> "IntervalUnion":
        """All points at distance >= delta from every point of the union."""
        if not self.intervals:
            return IntervalUnion.full_line(self.delta)
        d = self.delta
        # Open delta-neighborhoods; adjacent ones merge only on strict overlap,
        # which is what leaves degenerate points in the complement.
        opens: list[Interval] = []
        for lo, hi in self.intervals:
            nlo = NEG_INF if not is_finite(lo) else lo - d
            nhi = POS_INF if not is_finite(hi) else hi + d
            if opens and nlo < opens[-1][1]:
                opens[-1] = (opens[-1][0], nhi)
            else:
                opens.append((nlo, nhi))
        out: list[Interval] = []
        if is_finite(opens[0][0]):
            out.append((NEG_INF, opens[0][0]))
        for (_, h1), (l2, _) in zip(opens, opens[1:]):
            out.append((h1, l2))
        if is_finite(opens[-1][1]):
            out.append((opens[-1][1], POS_INF))
        return IntervalUnion(self.delta, tuple(out))

    def closure(self) -> "IntervalUnion":
        """Double q-complement: smallest q-subset containing the union."""
        return self.qcomp().qcomp()

    def is_qsubset(self) -> bool:
        """Closed-set test: consecutive gaps must reach 2*delta."""
        bound = 2 * self.delta
        for (_, hi), (lo, _) in zip(self.intervals, self.intervals[1:]):
            if lo - hi < bound:
                return False
        return True

    def relative_closure(self, s: "IntervalUnion") -> "IntervalUnion":
        """Closure of ``s`` inside self, both being q-subsets."""
        self._check_scale(s)
        if not s.issubset(self):
            raise PreconditionError("relative closure requires the subset to lie inside the carrier")
        if not self.is_qsubset() or not s.is_qsubset():
            raise PreconditionError("relative closure requires q-subset arguments")
        return s.qcomp().intersect(self).qcomp().intersect(self)

    def scaled(self, factor) -> "IntervalUnion":
        """Image under x -> factor * x with the scale stretched to match."""
        factor = as_fraction(factor)
        if factor <= 0:
            raise InputError("scale factor must be positive")

        def mul(e: Endpoint) -> Endpoint:
            return e if isinstance(e, float) else e * factor

        return IntervalUnion(self.delta * factor,
                             tuple((mul(lo), mul(hi)) for lo, hi in self.intervals))
