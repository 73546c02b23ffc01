"""Finite ortholattices as first-class values.

The order is stored as per-element down-set bitmasks, so axiom checks and
meet/join table construction stay O(n^2) word-parallel.  Includes the
commutation relations, generated sub-ortholattices, the orthogonality quantum
set of a lattice, and the down-set completions that identify a complete
ortholattice with the q-subset lattice of its orthogonality quantum set.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .core import ElementSet, QuantumSet, iter_closed_masks, mask_indices
from .errors import InputError, PreconditionError, QsetsError


@dataclass(frozen=True)
class Verdict:
    """Outcome of an axiom verification: first violated axiom plus witness."""

    ok: bool
    axiom: Optional[str] = None
    witness: Optional[tuple] = None

    def __bool__(self) -> bool:
        return self.ok


class OrthoLattice:
    """Ordered labels, down-set masks, and an orthocomplement index map.

    Construction checks shapes only; call :func:`verify_ortholattice` to test
    the lattice axioms.  Meet/join tables and bounds are materialized on first
    use and require the axioms to hold.
    """

    __slots__ = ("labels", "down", "ortho", "up", "_index", "_bounds", "_tables")

    def __init__(self, labels: Sequence[str], down: Sequence[int], ortho: Sequence[int]):
        labels = tuple(labels)
        down = tuple(down)
        ortho = tuple(ortho)
        n = len(labels)
        if len(set(labels)) != n:
            raise InputError("lattice labels must be distinct")
        if len(down) != n or len(ortho) != n:
            raise InputError("down masks / ortho map do not match element count")
        full = (1 << n) - 1 if n else 0
        for i, mask in enumerate(down):
            if not 0 <= mask <= full:
                raise InputError(f"down mask {i} out of range")
        for i, j in enumerate(ortho):
            if not 0 <= j < n:
                raise InputError(f"orthocomplement of {labels[i]!r} is out of range")
        up = [0] * n
        for j in range(n):
            for i in mask_indices(down[j]):
                up[i] |= 1 << j
        self.labels = labels
        self.down = down
        self.ortho = ortho
        self.up = tuple(up)
        self._index = {lab: i for i, lab in enumerate(labels)}
        self._bounds = None
        self._tables = None

    # -- construction -------------------------------------------------------

    @classmethod
    def from_relations(cls, labels: Sequence[str], pairs: Iterable[tuple[str, str]],
                       ortho: dict[str, str], transitive: bool) -> "OrthoLattice":
        """Build from (lower, upper) label pairs.

        Reflexive pairs are implied.  With ``transitive=True`` the pairs are
        treated as a cover (Hasse) relation and transitively closed.
        """
        labels = tuple(labels)
        index = {lab: i for i, lab in enumerate(labels)}
        if len(index) != len(labels):
            raise InputError("lattice labels must be distinct")
        n = len(labels)
        down = [1 << i for i in range(n)]
        for a, b in pairs:
            if a not in index:
                raise InputError(f"unknown element {a!r} in order pair")
            if b not in index:
                raise InputError(f"unknown element {b!r} in order pair")
            down[index[b]] |= 1 << index[a]
        if transitive:
            changed = True
            while changed:
                changed = False
                for j in range(n):
                    acc = down[j]
                    for i in mask_indices(acc):
                        acc |= down[i]
                    if acc != down[j]:
                        down[j] = acc
                        changed = True
        omap = [0] * n
        seen = set()
        for a, b in ortho.items():
            if a not in index:
                raise InputError(f"unknown element {a!r} in ortho map")
            if b not in index:
                raise InputError(f"unknown element {b!r} in ortho map")
            omap[index[a]] = index[b]
            omap[index[b]] = index[a]
            seen.add(index[a])
            seen.add(index[b])
        if len(seen) != n:
            missing = [lab for i, lab in enumerate(labels) if i not in seen]
            raise InputError(f"ortho map does not cover element(s) {missing}")
        return cls(labels, down, omap)

    # -- access ---------------------------------------------------------------

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1 if self.n else 0

    def idx(self, element: int | str) -> int:
        if isinstance(element, str):
            if element not in self._index:
                raise InputError(f"unknown lattice element {element!r}")
            return self._index[element]
        if not 0 <= element < self.n:
            raise InputError(f"lattice index {element} out of range")
        return element

    def leq(self, i: int, j: int) -> bool:
        return bool(self.down[j] >> i & 1)

    def _find_bounds(self) -> tuple[int, int]:
        if self._bounds is None:
            full = self.full_mask
            bottom = top = None
            for i in range(self.n):
                if self.up[i] == full:
                    bottom = i
                if self.down[i] == full:
                    top = i
            if bottom is None or top is None:
                raise QsetsError("lattice has no bottom/top; run verify_ortholattice first")
            self._bounds = (bottom, top)
        return self._bounds

    def _build_tables(self):
        n = self.n
        bottom, top = self._find_bounds()
        by_down = {self.down[i]: i for i in range(n)}
        by_up = {self.up[i]: i for i in range(n)}
        meet = [[0] * n for _ in range(n)]
        join = [[0] * n for _ in range(n)]
        down, up = self.down, self.up
        for i in range(n):
            mrow, jrow = meet[i], join[i]
            di, ui = down[i], up[i]
            for j in range(n):
                m = by_down.get(di & down[j])
                k = by_up.get(ui & up[j])
                if m is None or k is None:
                    raise QsetsError("lattice is missing a meet or join; run verify_ortholattice first")
                mrow[j] = m
                jrow[j] = k
        self._tables = (bottom, top, meet, join)

    @property
    def bottom(self) -> int:
        return self._find_bounds()[0]

    @property
    def top(self) -> int:
        return self._find_bounds()[1]

    @property
    def meet_table(self) -> list[list[int]]:
        if self._tables is None:
            self._build_tables()
        return self._tables[2]

    @property
    def join_table(self) -> list[list[int]]:
        if self._tables is None:
            self._build_tables()
        return self._tables[3]

    def meet(self, p: int | str, q: int | str) -> int:
        return self.meet_table[self.idx(p)][self.idx(q)]

    def join(self, p: int | str, q: int | str) -> int:
        return self.join_table[self.idx(p)][self.idx(q)]

    def covers(self) -> list[tuple[int, int]]:
        """Cover pairs (i, j) with i covered by j, in index order."""
        out = []
        n = self.n
        for j in range(n):
            strictly_below = self.down[j] & ~(1 << j)
            for i in mask_indices(strictly_below):
                between = self.down[j] & self.up[i] & ~(1 << i) & ~(1 << j)
                if not between:
                    out.append((i, j))
        return sorted(out)

    def __eq__(self, other) -> bool:
        if not isinstance(other, OrthoLattice):
            return NotImplemented
        return (self.labels == other.labels and self.down == other.down
                and self.ortho == other.ortho)

    def __hash__(self) -> int:
        return hash((self.labels, self.down, self.ortho))

    def __repr__(self) -> str:
        return f"OrthoLattice({self.n} elements)"


def verify_ortholattice(lat: OrthoLattice) -> Verdict:
    """Check every ortholattice axiom; name the first violation with a witness."""
    n = lat.n
    labels = lat.labels
    down, up, ortho = lat.down, lat.up, lat.ortho
    full = lat.full_mask
    if n == 0:
        return Verdict(False, "empty", ())
    for i in range(n):
        if not down[i] >> i & 1:
            return Verdict(False, "not-reflexive", (labels[i],))
    for i in range(n):
        both = down[i] & up[i] & ~(1 << i)
        if both:
            j = next(mask_indices(both))
            return Verdict(False, "not-antisymmetric", (labels[i], labels[j]))
    for i in range(n):
        for j in mask_indices(up[i]):
            stray = up[j] & ~up[i]
            if stray:
                k = next(mask_indices(stray))
                return Verdict(False, "not-transitive", (labels[i], labels[j], labels[k]))
    bottom = top = None
    for i in range(n):
        if up[i] == full:
            bottom = i
        if down[i] == full:
            top = i
    if bottom is None:
        return Verdict(False, "no-bottom", ())
    if top is None:
        return Verdict(False, "no-top", ())
    by_down = {down[i]: i for i in range(n)}
    by_up = {up[i]: i for i in range(n)}
    for i in range(n):
        for j in range(i, n):
            if down[i] & down[j] not in by_down:
                return Verdict(False, "missing-meet", (labels[i], labels[j]))
            if up[i] & up[j] not in by_up:
                return Verdict(False, "missing-join", (labels[i], labels[j]))
    for i in range(n):
        if ortho[ortho[i]] != i:
            return Verdict(False, "involution", (labels[i],))
    for i in range(n):
        if by_down[down[i] & down[ortho[i]]] != bottom:
            return Verdict(False, "complement-meet", (labels[i],))
    for i in range(n):
        for j in mask_indices(up[i]):
            # i <= j must force j' <= i'
            if not down[ortho[i]] >> ortho[j] & 1:
                return Verdict(False, "antitone", (labels[i], labels[j]))
    if ortho[bottom] != top:
        return Verdict(False, "top-not-complement-of-bottom", ())
    return Verdict(True)


def orthomodular_witness(lat: OrthoLattice) -> Optional[tuple[str, str]]:
    """First pair (p, q) with p <= q but q != p v (q ^ p'), or None."""
    meet, join, ortho = lat.meet_table, lat.join_table, lat.ortho
    for p in range(lat.n):
        for q in mask_indices(lat.up[p]):
            if join[p][meet[q][ortho[p]]] != q:
                return (lat.labels[p], lat.labels[q])
    return None


def is_orthomodular(lat: OrthoLattice) -> bool:
    return orthomodular_witness(lat) is None


def atoms(lat: OrthoLattice) -> list[int]:
    """Indices of elements covering the bottom."""
    b = lat.bottom
    base = 1 << b
    return [i for i in range(lat.n)
            if i != b and lat.down[i] == base | (1 << i)]


def is_atomistic(lat: OrthoLattice) -> tuple[bool, bool]:
    """(atomic, atomistic) for the lattice."""
    b = lat.bottom
    ats = atoms(lat)
    atom_mask = 0
    for a in ats:
        atom_mask |= 1 << a
    join = lat.join_table
    atomic = True
    atomistic = True
    for p in range(lat.n):
        if p == b:
            continue
        below = lat.down[p] & atom_mask
        if not below:
            atomic = False
            atomistic = False
            continue
        acc = b
        for a in mask_indices(below):
            acc = join[acc][a]
        if acc != p:
            atomistic = False
    return atomic, atomistic


def commutes(lat: OrthoLattice, p: int | str, q: int | str) -> bool:
    """Kalmbach commutativity p = (p ^ q) v (p ^ q'); may be asymmetric."""
    i, j = lat.idx(p), lat.idx(q)
    meet, join = lat.meet_table, lat.join_table
    return join[meet[i][j]][meet[i][lat.ortho[j]]] == i


def qcommutes(lat: OrthoLattice, p: int | str, q: int | str) -> bool:
    """Symmetric commutation p ^ (p ^ q)' <= (q ^ (p ^ q)')'."""
    i, j = lat.idx(p), lat.idx(q)
    meet = lat.meet_table
    c = lat.ortho[meet[i][j]]
    left = meet[i][c]
    right = lat.ortho[meet[j][c]]
    return lat.leq(left, right)


def generated_subortholattice(lat: OrthoLattice, seeds: Iterable[int | str]) -> OrthoLattice:
    """Smallest subset containing the seeds, 0, 1, closed under ^, v, '."""
    meet, join, ortho = lat.meet_table, lat.join_table, lat.ortho
    members = {lat.bottom, lat.top}
    members.update(lat.idx(s) for s in seeds)
    while True:
        new = set()
        current = sorted(members)
        for i in current:
            o = ortho[i]
            if o not in members:
                new.add(o)
            for j in current:
                m, k = meet[i][j], join[i][j]
                if m not in members:
                    new.add(m)
                if k not in members:
                    new.add(k)
        if not new:
            break
        members |= new
    keep = sorted(members)
    pos = {orig: new for new, orig in enumerate(keep)}
    labels = tuple(lat.labels[i] for i in keep)
    down = []
    for i in keep:
        mask = 0
        for j in mask_indices(lat.down[i]):
            if j in pos:
                mask |= 1 << pos[j]
        down.append(mask)
    sub_ortho = tuple(pos[ortho[i]] for i in keep)
    return OrthoLattice(labels, down, sub_ortho)


def is_distributive(lat: OrthoLattice) -> bool:
    """Exhaustive triple check of p ^ (q v r) = (p ^ q) v (p ^ r)."""
    meet, join = lat.meet_table, lat.join_table
    rng = range(lat.n)
    for p in rng:
        mp = meet[p]
        for q in rng:
            pq = mp[q]
            for r in rng:
                if mp[join[q][r]] != join[pq][mp[r]]:
                    return False
    return True


# -- correspondence with quantum sets ----------------------------------------


def to_quantum_set(lat: OrthoLattice) -> QuantumSet:
    """Orthogonality quantum set on the non-zero elements: p distinct q iff p <= q'."""
    b = lat.bottom
    keep = [i for i in range(lat.n) if i != b]
    pos = {orig: new for new, orig in enumerate(keep)}
    labels = tuple(lat.labels[i] for i in keep)
    rows = []
    for i in keep:
        mask = 0
        for j in keep:
            if lat.leq(i, lat.ortho[j]):
                mask |= 1 << pos[j]
        rows.append(mask)
    return QuantumSet(labels, tuple(rows))


def _completion_checks(lat: OrthoLattice, ground: QuantumSet,
                       image_bits: list[int]) -> bool:
    """Whether p -> image_bits[p] is a bijective ortholattice homomorphism
    onto the q-subset lattice of ``ground``."""
    n = lat.n
    rows, full = ground.rows, ground.full_mask
    from .core import _closure_mask, _qcomp_mask

    if len(set(image_bits)) != n:
        return False
    for p in range(n):
        if _closure_mask(rows, full, image_bits[p]) != image_bits[p]:
            return False
        if _qcomp_mask(rows, full, image_bits[p]) != image_bits[lat.ortho[p]]:
            return False
    meet, join = lat.meet_table, lat.join_table
    for p in range(n):
        bp = image_bits[p]
        for q in range(n):
            bq = image_bits[q]
            if image_bits[meet[p][q]] != bp & bq:
                return False
            if image_bits[join[p][q]] != _closure_mask(rows, full, bp | bq):
                return False
            if lat.leq(p, q) != (bp & ~bq == 0):
                return False
    closed = set(iter_closed_masks(rows, full))
    return closed == set(image_bits)


def downset_completion(lat: OrthoLattice) -> tuple[list[ElementSet], bool]:
    """Map each element to its down-set inside the orthogonality quantum set.

    Returns the images and whether the map is a bijective ortholattice
    homomorphism onto the q-subset lattice of that quantum set.  For a finite
    (hence complete) ortholattice this realizes the MacNeille completion and
    the flag must come back True.
    """
    ground = to_quantum_set(lat)
    b = lat.bottom
    keep = [i for i in range(lat.n) if i != b]
    pos = {orig: new for new, orig in enumerate(keep)}
    image_bits = []
    for p in range(lat.n):
        mask = 0
        for q in mask_indices(lat.down[p]):
            if q != b:
                mask |= 1 << pos[q]
        image_bits.append(mask)
    iso = _completion_checks(lat, ground, image_bits)
    images = [ElementSet(ground.n, bits) for bits in image_bits]
    return images, iso


def atom_quantum_set(lat: OrthoLattice) -> QuantumSet:
    """Orthogonality quantum set restricted to the atoms."""
    ats = atoms(lat)
    labels = tuple(lat.labels[i] for i in ats)
    rows = []
    for i in ats:
        mask = 0
        for new_j, j in enumerate(ats):
            if lat.leq(i, lat.ortho[j]):
                mask |= 1 << new_j
        rows.append(mask)
    return QuantumSet(labels, tuple(rows))


def atom_completion(lat: OrthoLattice) -> tuple[list[ElementSet], bool]:
    """Map each element to the set of atoms below it.

    Requires an atomistic lattice.  For a finite atomistic ortholattice the
    map is a bijective ortholattice homomorphism onto the q-subset lattice of
    the atom quantum set, and the returned flag asserts exactly that.
    """
    atomic, atomistic = is_atomistic(lat)
    if not atomistic:
        raise PreconditionError("atom completion requires an atomistic lattice")
    ground = atom_quantum_set(lat)
    ats = atoms(lat)
    image_bits = []
    for p in range(lat.n):
        mask = 0
        for new_a, a in enumerate(ats):
            if lat.leq(a, p):
                mask |= 1 << new_a
        image_bits.append(mask)
    iso = _completion_checks(lat, ground, image_bits)
    images = [ElementSet(ground.n, bits) for bits in image_bits]
    return images, iso


# -- built-in corpus generators ----------------------------------------------

_ATOM_LETTERS = "abcdefgh"


def boolean_lattice(n_atoms: int) -> OrthoLattice:
    """Power-set Boolean algebra on ``n_atoms`` atoms."""
    if not 0 <= n_atoms <= len(_ATOM_LETTERS):
        raise InputError(f"boolean_lattice supports 0..{len(_ATOM_LETTERS)} atoms")
    size = 1 << n_atoms
    labels = []
    for m in range(size):
        name = "".join(_ATOM_LETTERS[i] for i in range(n_atoms) if m >> i & 1)
        labels.append(name if name else "0")
    down = []
    for m in range(size):
        mask = 0
        for s in range(size):
            if s & ~m == 0:
                mask |= 1 << s
        down.append(mask)
    ortho = tuple(m ^ (size - 1) for m in range(size))
    return OrthoLattice(labels, down, ortho)


def mo_lattice(k: int) -> OrthoLattice:
    """Chinese-lantern orthomodular lattice with k complementary atom pairs."""
    if k < 1:
        raise InputError("mo_lattice needs at least one atom pair")
    labels = ["0"]
    for i in range(1, k + 1):
        labels.extend([f"a{i}", f"a{i}'"])
    labels.append("1")
    n = len(labels)
    top = n - 1
    down = []
    for i in range(n):
        if i == 0:
            down.append(1)
        elif i == top:
            down.append((1 << n) - 1)
        else:
            down.append(1 | (1 << i))

    ortho = [top] + [0] * (n - 2) + [0]
    for i in range(1, top, 2):
        ortho[i] = i + 1
        ortho[i + 1] = i
    ortho[top] = 0
    return OrthoLattice(labels, down, ortho)


def benzene_lattice() -> OrthoLattice:
    """The hexagon ortholattice O6, the canonical non-orthomodular example."""
    labels = ["0", "a", "b", "b'", "a'", "1"]
    pairs = [("0", "a"), ("a", "b"), ("b", "1"), ("0", "b'"), ("b'", "a'"), ("a'", "1")]
    ortho = {"0": "1", "a": "a'", "b": "b'"}
    return OrthoLattice.from_relations(labels, pairs, ortho, transitive=True)


def chain_lattice(n: int) -> OrthoLattice:
    """Chain ortholattice; only sizes 1 and 2 admit an orthocomplementation."""
    if n == 1:
        return OrthoLattice(("0",), (1,), (0,))
    if n == 2:
        return OrthoLattice(("0", "1"), (1, 3), (1, 0))
    raise InputError("a chain with more than 2 elements has no orthocomplementation")
