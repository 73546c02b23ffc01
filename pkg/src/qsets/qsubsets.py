"""The complete ortholattice of q-subsets of a finite quantum set.

Enumeration walks closure-to-closure in lectic order (index 0 most
significant); it never scans the power set.  A brute-force power-set filter
is kept alongside as the independent oracle for equivalence checks.
"""

from __future__ import annotations

from typing import Optional

from .core import (DEFAULT_LIMIT, ElementMap, ElementSet, QuantumSet,
                   _closure_mask, _qcomp_mask, iter_closed_masks, mask_indices)
from .errors import InputError
from .lattice import OrthoLattice


class QSubsetLattice:
    """All q-subsets of a quantum set, in lectic order, with lattice structure.

    Meet is intersection, join is the q-union, complement is the
    q-complement.  The :class:`OrthoLattice` view is materialized lazily since
    it is quadratic in the number of closed sets.
    """

    __slots__ = ("parent", "masks", "_index", "_lattice")

    def __init__(self, parent: QuantumSet, masks: list[int]):
        self.parent = parent
        self.masks = tuple(masks)
        self._index = {m: i for i, m in enumerate(self.masks)}
        self._lattice = None

    @property
    def closed_sets(self) -> tuple[ElementSet, ...]:
        n = self.parent.n
        return tuple(ElementSet(n, m) for m in self.masks)

    def __len__(self) -> int:
        return len(self.masks)

    def __eq__(self, other) -> bool:
        if not isinstance(other, QSubsetLattice):
            return NotImplemented
        return self.parent == other.parent and self.masks == other.masks

    def __hash__(self) -> int:
        return hash((self.parent, self.masks))

    def element_set(self, i: int) -> ElementSet:
        return ElementSet(self.parent.n, self.masks[i])

    def index_of(self, ds: ElementSet | int) -> int:
        bits = ds.bits if isinstance(ds, ElementSet) else ds
        if bits not in self._index:
            raise InputError("set is not a q-subset of this quantum set")
        return self._index[bits]

    @property
    def lattice(self) -> OrthoLattice:
        if self._lattice is None:
            masks = self.masks
            k = len(masks)
            rows, full = self.parent.rows, self.parent.full_mask
            labels = [ElementSet(self.parent.n, m).to_bits() for m in masks]
            down = []
            for i in range(k):
                mi = masks[i]
                acc = 0
                for j in range(k):
                    if masks[j] & ~mi == 0:
                        acc |= 1 << j
                down.append(acc)
            ortho = [self._index[_qcomp_mask(rows, full, m)] for m in masks]
            self._lattice = OrthoLattice(labels, down, ortho)
        return self._lattice

    def atom_sets(self) -> list[ElementSet]:
        """Minimal non-empty q-subsets."""
        from .lattice import atoms

        return [self.element_set(i) for i in atoms(self.lattice)]


def enumerate_qsubsets(qset: QuantumSet, limit: int = DEFAULT_LIMIT) -> QSubsetLattice:
    """Enumerate exactly the fixed points of the double-complement closure.

    Raises :class:`ResourceLimitError` naming the count reached when the
    closed-set count exceeds ``limit``.
    """
    masks = list(iter_closed_masks(qset.rows, qset.full_mask, limit))
    return QSubsetLattice(qset, masks)


def powerset_qsubset_masks(qset: QuantumSet) -> list[int]:
    """Oracle route: filter the full power set for closure fixed points.

    Exponential; only for cross-checking the lectic enumeration.
    """
    rows, full = qset.rows, qset.full_mask
    return [m for m in range(full + 1) if _closure_mask(rows, full, m) == m]


def is_atomic(qset: QuantumSet) -> bool:
    """Whether every singleton is a q-subset."""
    rows, full = qset.rows, qset.full_mask
    return all(_closure_mask(rows, full, 1 << i) == 1 << i for i in range(qset.n))


def _relative_closure_mask(rows, full: int, c: int, d: int) -> int:
    return _qcomp_mask(rows, full, _qcomp_mask(rows, full, d) & c) & c


def _hereditary_witness_masks(rows, full: int, masks) -> Optional[tuple[int, int]]:
    # (S, T) closed with S <= T, T ^ S-comp empty, S != T.
    for t in masks:
        for s in masks:
            if s != t and s & ~t == 0 and t & _qcomp_mask(rows, full, s) == 0:
                return s, t
    return None


def is_hereditary(qset: QuantumSet, limit: int = DEFAULT_LIMIT) -> bool:
    """Whether relative q-subsets of each q-subset are exactly the q-subsets inside it."""
    masks = list(iter_closed_masks(qset.rows, qset.full_mask, limit))
    rows, full = qset.rows, qset.full_mask
    for t in masks:
        for s in masks:
            if s & ~t == 0 and _relative_closure_mask(rows, full, t, s) != s:
                return False
    return True


def hereditary_witness(qset: QuantumSet,
                       limit: int = DEFAULT_LIMIT) -> Optional[tuple[ElementSet, ElementSet]]:
    """Some (S, T) with S <= T, T disjoint from S's q-complement and S != T.

    Returns None exactly when the quantum set is hereditary.
    """
    masks = list(iter_closed_masks(qset.rows, qset.full_mask, limit))
    found = _hereditary_witness_masks(qset.rows, qset.full_mask, masks)
    if found is None:
        return None
    s, t = found
    return ElementSet(qset.n, s), ElementSet(qset.n, t)


def _qcommute_masks(rows, full: int, c: int, d: int) -> bool:
    both = _qcomp_mask(rows, full, c & d)
    return (c & both) & ~_qcomp_mask(rows, full, d & both) == 0


def qcentral_elements(qset: QuantumSet, limit: int = DEFAULT_LIMIT) -> list[ElementSet]:
    """All q-subsets that q-commute with every q-subset, in lectic order."""
    masks = list(iter_closed_masks(qset.rows, qset.full_mask, limit))
    rows, full = qset.rows, qset.full_mask
    out = []
    for s in masks:
        if all(_qcommute_masks(rows, full, s, t) for t in masks):
            out.append(ElementSet(qset.n, s))
    return out


def induces_lattice_isomorphism(mapping: ElementMap, limit: int = DEFAULT_LIMIT) -> bool:
    """Whether S -> mapping(S) carries the q-subset lattice of the domain onto
    that of the codomain, preserving intersection, q-union and q-complement."""
    if not mapping.is_bijection():
        return False
    dom, cod = mapping.domain, mapping.codomain
    dmasks = list(iter_closed_masks(dom.rows, dom.full_mask, limit))
    cmasks = set(iter_closed_masks(cod.rows, cod.full_mask, limit))

    def fwd(bits: int) -> int:
        out = 0
        for i in mask_indices(bits):
            out |= 1 << mapping.images[i]
        return out

    images = [fwd(m) for m in dmasks]
    if set(images) != cmasks:
        return False
    drows, dfull = dom.rows, dom.full_mask
    crows, cfull = cod.rows, cod.full_mask
    for s, fs in zip(dmasks, images):
        if fwd(_qcomp_mask(drows, dfull, s)) != _qcomp_mask(crows, cfull, fs):
            return False
        for t, ft in zip(dmasks, images):
            if fwd(_closure_mask(drows, dfull, s | t)) != _closure_mask(crows, cfull, fs | ft):
                return False
    return True
