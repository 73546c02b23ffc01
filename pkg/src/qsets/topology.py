"""Quantum topologies over q-subset lattices, plus finite point-set topology.

A quantum topology is a family of lattice elements containing bottom and top,
closed under meets, and closed under joins of q-commuting pairs.  For finite
carriers, meet closure is checked pairwise together with the global meet.
Also provides the regular-open Boolean algebra of a finite topological space
and the classical discrete bridge where quantum topologies coincide with
ordinary topologies.
"""

from __future__ import annotations

from dataclasses import dataclass
from random import Random
from typing import Iterable, Iterator, Sequence

from .core import ElementMap, ElementSet, QuantumSet
from .errors import InputError, PreconditionError, QsetsError
from .lattice import OrthoLattice, Verdict, qcommutes
from .qsubsets import QSubsetLattice, enumerate_qsubsets


# -- quantum topologies -------------------------------------------------------


@dataclass(frozen=True)
class QuantumTopology:
    """A quantum set together with a family of quantum closed q-subsets."""

    carrier: QSubsetLattice
    closed_family: tuple[ElementSet, ...]

    def __post_init__(self):
        for member in self.closed_family:
            self.carrier.index_of(member)

    def family_bits(self) -> frozenset[int]:
        return frozenset(member.bits for member in self.closed_family)


def _family_indices(carrier, family) -> tuple[OrthoLattice, frozenset[int]]:
    if isinstance(carrier, QSubsetLattice):
        lat = carrier.lattice
        try:
            indices = frozenset(carrier.index_of(member) for member in family)
        except InputError as exc:
            raise InputError(f"family member not in carrier: {exc}") from None
        return lat, indices
    if isinstance(carrier, OrthoLattice):
        return carrier, frozenset(carrier.idx(member) for member in family)
    raise InputError(f"unsupported carrier type {type(carrier).__name__}")


def verify_quantum_topology(carrier, family) -> Verdict:
    """Check the closed-family axioms; name the first violated one.

    Accepts a :class:`QSubsetLattice` carrier with element sets, or an
    :class:`OrthoLattice` carrier with element indices/labels.
    """
    lat, indices = _family_indices(carrier, family)
    members = sorted(indices)
    labels = lat.labels
    if lat.bottom not in indices or lat.top not in indices:
        return Verdict(False, "S1", ())
    meet = lat.meet_table
    acc = lat.top
    for p in members:
        acc = meet[acc][p]
    if acc not in indices:
        return Verdict(False, "S2", (labels[acc],))
    for p in members:
        row = meet[p]
        for q in members:
            if q > p:
                break
            if row[q] not in indices:
                return Verdict(False, "S2", (labels[p], labels[q]))
    join = lat.join_table
    for p in members:
        for q in members:
            if q > p:
                break
            if qcommutes(lat, p, q) and join[p][q] not in indices:
                return Verdict(False, "S3", (labels[p], labels[q]))
    return Verdict(True)


def generate_family(lat: OrthoLattice, generators: Iterable[int | str]) -> tuple[int, ...]:
    """Least index family containing the generators that satisfies the axioms.

    Fixed-point iteration; unique because both closure conditions are
    intersection-stable.
    """
    members = {lat.bottom, lat.top}
    members.update(lat.idx(g) for g in generators)
    meet, join = lat.meet_table, lat.join_table
    while True:
        new = set()
        current = sorted(members)
        for i, p in enumerate(current):
            for q in current[:i + 1]:
                m = meet[p][q]
                if m not in members:
                    new.add(m)
                if qcommutes(lat, p, q):
                    k = join[p][q]
                    if k not in members:
                        new.add(k)
        if not new:
            return tuple(sorted(members))
        members |= new


def generate_topology(carrier: QSubsetLattice,
                      generators: Iterable[ElementSet]) -> QuantumTopology:
    """Smallest quantum topology on the carrier containing the generators."""
    lat, gen_indices = _family_indices(carrier, generators)
    family = generate_family(lat, gen_indices)
    return QuantumTopology(carrier, tuple(carrier.element_set(i) for i in family))


def is_strict_quantum_homeomorphism(mapping: ElementMap, source: QuantumTopology,
                                    target: QuantumTopology) -> bool:
    """Whether the map is a strict quantum bijection carrying one closed
    family exactly onto the other."""
    if mapping.domain != source.carrier.parent or mapping.codomain != target.carrier.parent:
        raise InputError("map endpoints do not match the topological spaces")
    if not mapping.is_strict_quantum_bijection():
        raise PreconditionError("underlying map is not a strict quantum bijection")
    image = {mapping.image(member).bits for member in source.closed_family}
    return image == set(target.family_bits())


def classical_gelfand(n: int) -> QuantumTopology:
    """Spectrum of the commutative algebra of functions on n discrete points.

    Point evaluations are pairwise orthogonal, so the quantum set is
    classical and the closed family consists of all subsets; this is the
    degenerate case where quantum topologies coincide with ordinary
    topologies.
    """
    if n < 0:
        raise InputError("point count must be non-negative")
    carrier = enumerate_qsubsets(QuantumSet.classical(n))
    return QuantumTopology(carrier, carrier.closed_sets)


# -- finite point-set topology ---------------------------------------------------


@dataclass(frozen=True)
class FiniteTopology:
    """Finite topological space given by its open-set masks.

    The closed sets and the closure operator are derived by complementation,
    avoiding a second, possibly inconsistent input format.
    """

    points: tuple[str, ...]
    opens: tuple[int, ...]

    def __post_init__(self):
        n = len(self.points)
        if len(set(self.points)) != n:
            raise InputError("point labels must be distinct")
        full = (1 << n) - 1 if n else 0
        family = set(self.opens)
        if len(family) != len(self.opens) or tuple(sorted(self.opens)) != self.opens:
            raise InputError("opens must be sorted and duplicate-free")
        for mask in self.opens:
            if not 0 <= mask <= full:
                raise InputError("open set out of range")
        if 0 not in family or full not in family:
            raise InputError("a topology contains the empty set and the full set")
        for a in family:
            for b in family:
                if a | b not in family:
                    raise InputError("opens are not closed under union")
                if a & b not in family:
                    raise InputError("opens are not closed under intersection")

    @classmethod
    def from_label_sets(cls, points: Sequence[str], open_sets: Iterable[Iterable[str]]) -> "FiniteTopology":
        points = tuple(points)
        index = {p: i for i, p in enumerate(points)}
        if len(index) != len(points):
            raise InputError("point labels must be distinct")
        masks = set()
        for family_member in open_sets:
            mask = 0
            for label in family_member:
                if label not in index:
                    raise InputError(f"unknown point {label!r} in open set")
                mask |= 1 << index[label]
            masks.add(mask)
        return cls(points, tuple(sorted(masks)))

    @classmethod
    def discrete(cls, points: Sequence[str]) -> "FiniteTopology":
        n = len(points)
        return cls(tuple(points), tuple(range(1 << n)))

    @property
    def n(self) -> int:
        return len(self.points)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1 if self.n else 0

    def interior(self, mask: int) -> int:
        acc = 0
        for u in self.opens:
            if u & ~mask == 0:
                acc |= u
        return acc

    def closure_of(self, mask: int) -> int:
        full = self.full_mask
        return full & ~self.interior(full & ~mask)

    def regular_opens(self) -> list[int]:
        """Open sets equal to the interior of their closure."""
        return [u for u in self.opens if self.interior(self.closure_of(u)) == u]


def regular_open_lattice(top: FiniteTopology) -> OrthoLattice:
    """The ortholattice of regular open sets.

    Meet is intersection, join is the interior of the union of closures, and
    the complement is the complement of the closure; the result is expected
    to pass verification, orthomodularity and distributivity (it is a
    Boolean algebra), which callers assert.
    """
    regs = sorted(top.regular_opens(),
                  key=lambda m: ElementSet(top.n, m).to_bits())
    index = {m: i for i, m in enumerate(regs)}
    labels = [ElementSet(top.n, m).to_bits() for m in regs]
    down = []
    for m in regs:
        acc = 0
        for j, other in enumerate(regs):
            if other & ~m == 0:
                acc |= 1 << j
        down.append(acc)
    full = top.full_mask
    ortho = []
    for m in regs:
        comp = full & ~top.closure_of(m)
        if comp not in index:
            raise QsetsError("complement of a regular open set is not regular")
        ortho.append(index[comp])
    return OrthoLattice(labels, down, ortho)


def regular_open_join(top: FiniteTopology, u: int, v: int) -> int:
    """Join formula on regular opens: interior of the union of closures."""
    return top.interior(top.closure_of(u) | top.closure_of(v))


# -- enumeration and sampling helpers ----------------------------------------------


def iter_topologies(points: Sequence[str]) -> Iterator[FiniteTopology]:
    """All topologies on a small labelled point set, by exhaustive filtering."""
    n = len(points)
    full = (1 << n) - 1 if n else 0
    subsets = list(range(full + 1))
    for picks in range(1 << len(subsets)):
        family = [s for i, s in enumerate(subsets) if picks >> i & 1]
        fam = set(family)
        if 0 not in fam or full not in fam:
            continue
        if all(a | b in fam and a & b in fam for a in fam for b in fam):
            yield FiniteTopology(tuple(points), tuple(sorted(fam)))


def random_topology(rng: Random, points: Sequence[str], seeds: int = 3) -> FiniteTopology:
    """Topology generated by a few random open sets."""
    n = len(points)
    full = (1 << n) - 1 if n else 0
    family = {0, full}
    for _ in range(seeds):
        family.add(rng.randrange(full + 1))
    while True:
        extra = set()
        for a in family:
            for b in family:
                if a | b not in family:
                    extra.add(a | b)
                if a & b not in family:
                    extra.add(a & b)
        if not extra:
            break
        family |= extra
    return FiniteTopology(tuple(points), tuple(sorted(family)))
