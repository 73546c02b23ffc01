"""Finite quantum sets and their pointwise closure operations.

A quantum set is a finite ground set together with a symmetric, irreflexive
q-distinctness relation (equivalently a loop-free graph).  Subsets are held as
dense bit-vectors, and the q-complement is a fold of precomputed relation
rows, so every operation here is word-parallel on Python ints.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import InputError, PreconditionError

#: Safety bound on closed-set enumerations (overridable per call).
DEFAULT_LIMIT = 1 << 20


def mask_indices(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class ElementSet:
    """Membership bit-vector over a quantum set's elements (bit i = element i)."""

    width: int
    bits: int

    def __post_init__(self):
        if self.width < 0:
            raise InputError(f"negative width {self.width}")
        if not 0 <= self.bits < (1 << self.width):
            raise InputError(f"bits 0x{self.bits:x} out of range for width {self.width}")

    @classmethod
    def from_indices(cls, width: int, indices: Iterable[int]) -> "ElementSet":
        bits = 0
        for i in indices:
            if not 0 <= i < width:
                raise InputError(f"element index {i} out of range for width {width}")
            bits |= 1 << i
        return cls(width, bits)

    @classmethod
    def from_bits(cls, text: str) -> "ElementSet":
        """Parse a bit-string such as "0101" (character i is element i)."""
        if set(text) - {"0", "1"}:
            raise InputError(f"bit-string may contain only 0/1: {text!r}")
        bits = 0
        for i, ch in enumerate(text):
            if ch == "1":
                bits |= 1 << i
        return cls(len(text), bits)

    def to_bits(self) -> str:
        return "".join("1" if self.bits >> i & 1 else "0" for i in range(self.width))

    def indices(self) -> tuple[int, ...]:
        return tuple(mask_indices(self.bits))

    def __len__(self) -> int:
        return bin(self.bits).count("1")

    def __contains__(self, index: int) -> bool:
        return 0 <= index < self.width and bool(self.bits >> index & 1)

    def __bool__(self) -> bool:
        return self.bits != 0

    def _check_width(self, other: "ElementSet") -> None:
        if self.width != other.width:
            raise InputError(f"width mismatch: {self.width} vs {other.width}")

    def __and__(self, other: "ElementSet") -> "ElementSet":
        self._check_width(other)
        return ElementSet(self.width, self.bits & other.bits)

    def __or__(self, other: "ElementSet") -> "ElementSet":
        self._check_width(other)
        return ElementSet(self.width, self.bits | other.bits)

    def issubset(self, other: "ElementSet") -> bool:
        self._check_width(other)
        return self.bits & ~other.bits == 0

    def complement(self) -> "ElementSet":
        """Ordinary set complement within the ground set (not the q-complement)."""
        return ElementSet(self.width, ~self.bits & ((1 << self.width) - 1))

    def __repr__(self) -> str:
        return f"ElementSet({self.to_bits()!r})"


def _qcomp_mask(rows: Sequence[int], full: int, mask: int) -> int:
    # Intersection of the relation rows of all members; empty fold gives the
    # whole ground set.  Early exit once the accumulator is empty.
    out = full
    m = mask
    while m:
        low = m & -m
        out &= rows[low.bit_length() - 1]
        if not out:
            return 0
        m ^= low
    return out


def _closure_mask(rows: Sequence[int], full: int, mask: int) -> int:
    return _qcomp_mask(rows, full, _qcomp_mask(rows, full, mask))


def iter_closed_masks(rows: Sequence[int], full: int, limit: int = DEFAULT_LIMIT) -> Iterator[int]:
    """Yield the fixed points of the double-q-complement closure in lectic order.

    Lectic order treats index 0 as the most significant position.  This is the
    standard next-closure enumeration: it walks closure-to-closure and never
    scans the full power set.
    """
    from .errors import ResourceLimitError

    n = len(rows)
    current = _closure_mask(rows, full, 0)
    count = 1
    if count > limit:
        raise ResourceLimitError(f"closed-set limit {limit} exceeded ({count} reached)", count)
    yield current
    while True:
        nxt = None
        a = current
        for i in range(n - 1, -1, -1):
            bit = 1 << i
            if a & bit:
                a &= ~bit
            else:
                b = _closure_mask(rows, full, a | bit)
                # Canonical step: the closure may not add any element more
                # significant (smaller index) than i.
                if not (b & ~a & (bit - 1)):
                    nxt = b
                    break
        if nxt is None:
            return
        count += 1
        if count > limit:
            raise ResourceLimitError(f"closed-set limit {limit} exceeded ({count} reached)", count)
        yield nxt
        current = nxt


@dataclass(frozen=True)
class QuantumSet:
    """Ground set with a symmetric irreflexive q-distinctness relation.

    ``rows[i]`` is the bitmask of elements q-distinct from element i.
    """

    labels: tuple[str, ...]
    rows: tuple[int, ...]

    def __post_init__(self):
        n = len(self.labels)
        if len(set(self.labels)) != n:
            raise InputError("element labels must be distinct")
        if len(self.rows) != n:
            raise InputError("relation rows do not match element count")
        full = (1 << n) - 1 if n else 0
        for i, row in enumerate(self.rows):
            if not 0 <= row <= full:
                raise InputError(f"relation row {i} out of range")
            if row >> i & 1:
                raise InputError(f"self-pair ({self.labels[i]}, {self.labels[i]}) is not irreflexive")
        for i in range(n):
            for j in mask_indices(self.rows[i]):
                if not self.rows[j] >> i & 1:
                    raise InputError(f"relation not symmetric at ({self.labels[i]}, {self.labels[j]})")

    # -- construction -----------------------------------------------------

    @classmethod
    def from_pairs(cls, labels: Sequence[str], pairs: Iterable[tuple[str, str]]) -> "QuantumSet":
        """Build from unordered label pairs; symmetrized, duplicates tolerated.

        A self-pair is rejected because q-distinctness refines inequality.
        """
        labels = tuple(labels)
        index = {lab: i for i, lab in enumerate(labels)}
        if len(index) != len(labels):
            raise InputError("element labels must be distinct")
        rows = [0] * len(labels)
        for a, b in pairs:
            if a not in index:
                raise InputError(f"unknown element {a!r} in q_distinct pair")
            if b not in index:
                raise InputError(f"unknown element {b!r} in q_distinct pair")
            if a == b:
                raise InputError(f"self-pair ({a!r}, {b!r}) is not irreflexive")
            i, j = index[a], index[b]
            rows[i] |= 1 << j
            rows[j] |= 1 << i
        return cls(labels, tuple(rows))

    @classmethod
    def from_index_pairs(cls, n: int, pairs: Iterable[tuple[int, int]],
                         labels: Sequence[str] | None = None) -> "QuantumSet":
        labels = tuple(labels) if labels is not None else tuple(str(i) for i in range(n))
        rows = [0] * n
        for i, j in pairs:
            if not (0 <= i < n and 0 <= j < n):
                raise InputError(f"index pair ({i}, {j}) out of range")
            if i == j:
                raise InputError(f"self-pair ({i}, {i}) is not irreflexive")
            rows[i] |= 1 << j
            rows[j] |= 1 << i
        return cls(labels, tuple(rows))

    @classmethod
    def classical(cls, labels_or_n) -> "QuantumSet":
        """Quantum set whose q-distinctness is plain inequality (complete graph)."""
        if isinstance(labels_or_n, int):
            labels = tuple(str(i) for i in range(labels_or_n))
        else:
            labels = tuple(labels_or_n)
        n = len(labels)
        full = (1 << n) - 1 if n else 0
        return cls(labels, tuple(full & ~(1 << i) for i in range(n)))

    @classmethod
    def cycle(cls, n: int) -> "QuantumSet":
        """Cycle graph on labels 1..n (n >= 3)."""
        if n < 3:
            raise InputError("cycle needs at least 3 elements")
        labels = tuple(str(i + 1) for i in range(n))
        return cls.from_index_pairs(n, [(i, (i + 1) % n) for i in range(n)], labels)

    # -- basic access ------------------------------------------------------

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1 if self.n else 0

    def index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise InputError(f"unknown element {label!r}") from None

    def orth(self, i: int, j: int) -> bool:
        return bool(self.rows[i] >> j & 1)

    def pair_count(self) -> int:
        return sum(bin(r).count("1") for r in self.rows) // 2

    def empty_set(self) -> ElementSet:
        return ElementSet(self.n, 0)

    def full_set(self) -> ElementSet:
        return ElementSet(self.n, self.full_mask)

    def singleton(self, element: int | str) -> ElementSet:
        i = self.index(element) if isinstance(element, str) else element
        return ElementSet.from_indices(self.n, [i])

    def subset(self, elements: Iterable[int | str]) -> ElementSet:
        idx = [self.index(e) if isinstance(e, str) else e for e in elements]
        return ElementSet.from_indices(self.n, idx)

    def labels_of(self, ds: ElementSet) -> tuple[str, ...]:
        self._check(ds)
        return tuple(self.labels[i] for i in ds.indices())

    def _check(self, ds: ElementSet) -> None:
        if ds.width != self.n:
            raise InputError(f"width mismatch: set has {ds.width}, quantum set has {self.n}")

    # -- closure operations ------------------------------------------------

    def qcomplement(self, ds: ElementSet) -> ElementSet:
        """All elements q-distinct from every member of ``ds``."""
        self._check(ds)
        return ElementSet(self.n, _qcomp_mask(self.rows, self.full_mask, ds.bits))

    def closure(self, ds: ElementSet) -> ElementSet:
        """Double q-complement: the smallest q-subset containing ``ds``."""
        self._check(ds)
        return ElementSet(self.n, _closure_mask(self.rows, self.full_mask, ds.bits))

    def is_qsubset(self, ds: ElementSet) -> bool:
        self._check(ds)
        return _closure_mask(self.rows, self.full_mask, ds.bits) == ds.bits

    def qunion(self, s: ElementSet, t: ElementSet) -> ElementSet:
        """Join of two q-subsets: the closure of their union."""
        self._check(s)
        self._check(t)
        if not self.is_qsubset(s):
            raise PreconditionError("first argument of qunion is not a q-subset")
        if not self.is_qsubset(t):
            raise PreconditionError("second argument of qunion is not a q-subset")
        return ElementSet(self.n, _closure_mask(self.rows, self.full_mask, s.bits | t.bits))

    def relative_closure(self, c: ElementSet, d: ElementSet) -> ElementSet:
        """Closure of ``d`` inside the induced quantum set on ``c``."""
        self._check(c)
        self._check(d)
        if d.bits & ~c.bits:
            raise PreconditionError("relative closure requires the subset to lie inside the carrier")
        rows, full = self.rows, self.full_mask
        inner = _qcomp_mask(rows, full, d.bits) & c.bits
        return ElementSet(self.n, _qcomp_mask(rows, full, inner) & c.bits)

    def subsets_qcommute(self, c: ElementSet, d: ElementSet) -> bool:
        """Whether C cap (C cap D)^comp is contained in (D cap (C cap D)^comp)^comp."""
        self._check(c)
        self._check(d)
        rows, full = self.rows, self.full_mask
        both = _qcomp_mask(rows, full, c.bits & d.bits)
        left = c.bits & both
        right = _qcomp_mask(rows, full, d.bits & both)
        return left & ~right == 0

    def induced(self, c: ElementSet) -> "QuantumSet":
        """Restriction of the relation to ``c``, label order inherited."""
        self._check(c)
        keep = c.indices()
        pos = {orig: new for new, orig in enumerate(keep)}
        labels = tuple(self.labels[i] for i in keep)
        rows = []
        for orig in keep:
            row = 0
            for j in mask_indices(self.rows[orig] & c.bits):
                row |= 1 << pos[j]
            rows.append(row)
        return QuantumSet(labels, tuple(rows))


@dataclass(frozen=True)
class ElementMap:
    """Total assignment of domain elements to codomain elements."""

    domain: QuantumSet
    codomain: QuantumSet
    images: tuple[int, ...]

    def __post_init__(self):
        if len(self.images) != self.domain.n:
            raise InputError("image list does not cover the domain")
        for i in self.images:
            if not 0 <= i < self.codomain.n:
                raise InputError(f"image index {i} out of codomain range")

    @classmethod
    def from_labels(cls, domain: QuantumSet, codomain: QuantumSet,
                    mapping: dict[str, str]) -> "ElementMap":
        images = []
        for lab in domain.labels:
            if lab not in mapping:
                raise InputError(f"map does not assign element {lab!r}")
            images.append(codomain.index(mapping[lab]))
        return cls(domain, codomain, tuple(images))

    def is_bijection(self) -> bool:
        return (self.domain.n == self.codomain.n
                and len(set(self.images)) == self.domain.n)

    def image(self, ds: ElementSet) -> ElementSet:
        if ds.width != self.domain.n:
            raise InputError(f"width mismatch: set has {ds.width}, domain has {self.domain.n}")
        bits = 0
        for i in mask_indices(ds.bits):
            bits |= 1 << self.images[i]
        return ElementSet(self.codomain.n, bits)

    def is_strict_quantum_bijection(self) -> bool:
        """Whether the map preserves q-distinctness in both directions."""
        if not self.is_bijection():
            raise PreconditionError("strict quantum bijection check requires a bijection")
        dom, cod, img = self.domain, self.codomain, self.images
        for i in range(dom.n):
            for j in range(i + 1, dom.n):
                if dom.orth(i, j) != cod.orth(img[i], img[j]):
                    return False
        return True
