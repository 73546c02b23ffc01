"""Exhaustive and seeded verification suites with a deterministic run report.

Each suite re-derives expected behaviour through an independent route (brute
force filters, definitional case analyses, exhaustive family searches) and
compares it with the library's primary implementations.  All randomness is
injected through explicit integer seeds; report serialization excludes
timing, so identical seeds and versions give byte-identical reports.
"""

from __future__ import annotations

import hashlib
import json
import time
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from random import Random
from typing import Iterator, Optional

from .core import (DEFAULT_LIMIT, ElementMap, ElementSet, QuantumSet,
                   iter_closed_masks)
from .errors import InputError
from .lattice import (OrthoLattice, atom_completion, atom_quantum_set, atoms,
                      benzene_lattice, boolean_lattice, chain_lattice, commutes,
                      downset_completion, is_atomistic, is_distributive,
                      is_orthomodular, mo_lattice, qcommutes, verify_ortholattice)
from .projline import ArcSet, arc_commutes, arc_qcommutes, closure_points
from .qsubsets import (_hereditary_witness_masks, enumerate_qsubsets,
                       is_atomic, is_hereditary, powerset_qsubset_masks)
from .realline import IntervalUnion
from .topology import (FiniteTopology, generate_topology, iter_topologies,
                       random_topology, regular_open_join, regular_open_lattice,
                       verify_quantum_topology)

REPORT_FORMAT = "qsets-report/1"

DEFAULT_SUITES = ("exhaustive-4", "exhaustive-5", "oracle", "named-lattices",
                  "examples", "arc-grid", "interval-random", "regular-open",
                  "quantum-topology")


@dataclass(frozen=True)
class CorpusSpec:
    """Selection of suites plus the seed and enumeration limit to run with."""

    suites: tuple[str, ...] = DEFAULT_SUITES
    seed: int = 0
    limit: int = DEFAULT_LIMIT


@dataclass
class CheckResult:
    name: str
    ok: bool
    witness: Optional[object] = None
    details: dict = field(default_factory=dict)
    seconds: float = 0.0  # measurement only; kept out of the canonical bytes

    def to_dict(self) -> dict:
        return {"name": self.name, "ok": self.ok,
                "witness": self.witness, "details": self.details}


@dataclass
class RunReport:
    """Verdicts of a corpus run.

    ``durations`` and ``total_seconds`` are measurement metadata and are
    deliberately excluded from the canonical byte serialization.
    """

    command: str
    seed: int
    limit: int
    suites: tuple[str, ...]
    checks: list[CheckResult]
    durations: dict[str, float] = field(default_factory=dict)
    total_seconds: float = 0.0

    @property
    def status(self) -> int:
        return 0 if all(check.ok for check in self.checks) else 1

    def to_dict(self) -> dict:
        inputs = {"suites": list(self.suites), "seed": self.seed,
                  "limit": self.limit}
        digest = hashlib.sha256(
            json.dumps(inputs, sort_keys=True).encode("ascii")).hexdigest()
        return {
            "format": REPORT_FORMAT,
            "command": self.command,
            "inputs": inputs,
            "inputs_digest": digest,
            "checks": [check.to_dict() for check in self.checks],
            "status": self.status,
        }

    def to_canonical_bytes(self) -> bytes:
        return json.dumps(self.to_dict(), sort_keys=True,
                          separators=(",", ":"), ensure_ascii=True).encode("ascii")

    def check(self, name: str) -> CheckResult:
        for item in self.checks:
            if item.name == name:
                return item
        raise KeyError(name)


def _suite_rng(seed: int, suite: str) -> Random:
    digest = hashlib.sha256(f"{seed}:{suite}".encode("ascii")).digest()
    return Random(int.from_bytes(digest[:8], "big"))


def iter_all_quantum_sets(n: int) -> Iterator[QuantumSet]:
    """Every q-distinctness relation on n labelled elements."""
    pairs = list(combinations(range(n), 2))
    for picks in range(1 << len(pairs)):
        chosen = [pairs[i] for i in range(len(pairs)) if picks >> i & 1]
        yield QuantumSet.from_index_pairs(n, chosen)


def random_quantum_set(rng: Random, max_n: int = 12) -> QuantumSet:
    n = rng.randrange(0, max_n + 1)
    p = rng.choice([0.15, 0.3, 0.5, 0.7])
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
    return QuantumSet.from_index_pairs(n, pairs)


def _qset_witness(qset: QuantumSet) -> dict:
    pairs = [[qset.labels[i], qset.labels[j]] for i in range(qset.n)
             for j in range(i + 1, qset.n) if qset.orth(i, j)]
    return {"elements": list(qset.labels), "q_distinct": pairs}


# -- exhaustive lemma suites ---------------------------------------------------


def _check_lemma_suite(n: int) -> list[CheckResult]:
    """Ortholattice axioms, the hereditary equivalences, and atomicity
    consequences over every quantum set on n elements."""
    started = time.perf_counter()
    axioms_bad = None
    equiv_bad = None
    atomic_bad = None
    count = 0
    for qset in iter_all_quantum_sets(n):
        count += 1
        qsl = enumerate_qsubsets(qset)
        lat = qsl.lattice
        if axioms_bad is None:
            verdict = verify_ortholattice(lat)
            if not verdict.ok:
                axioms_bad = {"quantum_set": _qset_witness(qset),
                              "axiom": verdict.axiom}
        if equiv_bad is None:
            hered = is_hereditary(qset)
            omod = is_orthomodular(lat)
            wit = _hereditary_witness_masks(qset.rows, qset.full_mask, qsl.masks)
            if not (hered == omod == (wit is None)):
                equiv_bad = {"quantum_set": _qset_witness(qset),
                             "hereditary": hered, "orthomodular": omod,
                             "witness_found": wit is not None}
        if atomic_bad is None and is_atomic(qset):
            _, atomistic = is_atomistic(lat)
            singleton_bits = {1 << i for i in range(qset.n)}
            atom_bits = {qsl.masks[i] for i in atoms(lat)}
            if not atomistic or atom_bits != singleton_bits:
                atomic_bad = {"quantum_set": _qset_witness(qset),
                              "atomistic": atomistic}
    elapsed = time.perf_counter() - started
    return [
        CheckResult(f"ortholattice-axioms-n{n}", axioms_bad is None, axioms_bad,
                    {"quantum_sets": count}, seconds=elapsed),
        CheckResult(f"hereditary-equivalences-n{n}", equiv_bad is None,
                    equiv_bad, {"quantum_sets": count}, seconds=elapsed),
        CheckResult(f"atomic-atomistic-n{n}", atomic_bad is None,
                    atomic_bad, {"quantum_sets": count}, seconds=elapsed),
    ]


def _check_completion_roundtrip(n: int) -> list[CheckResult]:
    """Down-set completion and atom representation over all Q(X) lattices."""
    bad = None
    count = 0
    for qset in iter_all_quantum_sets(n):
        count += 1
        qsl = enumerate_qsubsets(qset)
        lat = qsl.lattice
        _, iso = downset_completion(lat)
        if not iso and bad is None:
            bad = {"quantum_set": _qset_witness(qset), "stage": "downset"}
            continue
        _, atomistic = is_atomistic(lat)
        if atomistic:
            _, atom_iso = atom_completion(lat)
            if not atom_iso and bad is None:
                bad = {"quantum_set": _qset_witness(qset), "stage": "atoms"}
                continue
        if is_atomic(qset) and qset.n:
            # The atoms are the singletons; peeling them off must give back
            # the original quantum set up to a strict quantum bijection.
            ground = atom_quantum_set(lat)
            images = []
            for label in ground.labels:
                bits = int(label[::-1], 2)
                images.append(bits.bit_length() - 1)
            mapping = ElementMap(ground, qset, tuple(images))
            if not mapping.is_strict_quantum_bijection() and bad is None:
                bad = {"quantum_set": _qset_witness(qset), "stage": "atom-bijection"}
    return [CheckResult(f"completion-roundtrip-n{n}", bad is None, bad,
                        {"quantum_sets": count})]


def _commutation_agreement(lat: OrthoLattice) -> tuple[bool, Optional[tuple[str, str]]]:
    """Whether the two commutation relations coincide; first differing pair."""
    for p in range(lat.n):
        for q in range(lat.n):
            if commutes(lat, p, q) != qcommutes(lat, p, q):
                return False, (lat.labels[p], lat.labels[q])
    return True, None


def _check_commutation(n: int) -> list[CheckResult]:
    bad = None
    count = 0
    for qset in iter_all_quantum_sets(n):
        count += 1
        lat = enumerate_qsubsets(qset).lattice
        agree, pair = _commutation_agreement(lat)
        if agree != is_orthomodular(lat) and bad is None:
            bad = {"quantum_set": _qset_witness(qset), "agree": agree,
                   "pair": pair}
    return [CheckResult(f"commutation-iff-orthomodular-n{n}", bad is None, bad,
                        {"quantum_sets": count})]


def _check_boolean_atoms(n: int) -> list[CheckResult]:
    """For atomic X: Q(X) Boolean iff all singletons q-commute iff classical."""
    bad = None
    count = 0
    for qset in iter_all_quantum_sets(n):
        if not is_atomic(qset):
            continue
        count += 1
        lat = enumerate_qsubsets(qset).lattice
        boolean = is_distributive(lat)
        atoms_commute = all(
            qset.subsets_qcommute(qset.singleton(i), qset.singleton(j))
            for i in range(qset.n) for j in range(qset.n))
        classical = all(qset.orth(i, j) for i in range(qset.n)
                        for j in range(qset.n) if i != j)
        if not (boolean == atoms_commute == classical) and bad is None:
            bad = {"quantum_set": _qset_witness(qset), "boolean": boolean,
                   "atoms_commute": atoms_commute, "classical": classical}
    return [CheckResult(f"boolean-atoms-n{n}", bad is None, bad,
                        {"atomic_quantum_sets": count})]


def _suite_exhaustive(spec: CorpusSpec, n: int) -> list[CheckResult]:
    results = _check_lemma_suite(n)
    results += _check_completion_roundtrip(n)
    results += _check_commutation(n)
    results += _check_boolean_atoms(n)
    return results


# -- oracle equivalence ---------------------------------------------------------


def _suite_oracle(spec: CorpusSpec) -> list[CheckResult]:
    rng = _suite_rng(spec.seed, "oracle")
    bad = None
    samples = 200
    for _ in range(samples):
        qset = random_quantum_set(rng, max_n=12)
        lectic = list(iter_closed_masks(qset.rows, qset.full_mask, spec.limit))
        brute = powerset_qsubset_masks(qset)
        if set(lectic) != set(brute) or len(lectic) != len(brute):
            bad = {"quantum_set": _qset_witness(qset)}
            break
        ordered = [ElementSet(qset.n, m).to_bits() for m in lectic]
        if ordered != sorted(ordered):
            bad = {"quantum_set": _qset_witness(qset), "stage": "lectic-order"}
            break
    return [CheckResult("oracle-powerset-equivalence", bad is None, bad,
                        {"samples": samples})]


# -- named corpus lattices -------------------------------------------------------


def named_corpus_lattices() -> list[tuple[str, OrthoLattice]]:
    named: list[tuple[str, OrthoLattice]] = []
    for n in range(0, 6):
        named.append((f"boolean-{n}", boolean_lattice(n)))
    for k in range(1, 7):
        named.append((f"mo-{k}", mo_lattice(k)))
    named.append(("benzene", benzene_lattice()))
    named.append(("chain-1", chain_lattice(1)))
    named.append(("chain-2", chain_lattice(2)))
    named.append(("qsubsets-5-cycle", enumerate_qsubsets(QuantumSet.cycle(5)).lattice))
    return named


def _suite_named_lattices(spec: CorpusSpec) -> list[CheckResult]:
    results = []
    roundtrip_bad = None
    commutation_bad = None
    symmetry_bad = None
    differing_pairs = {}
    for name, lat in named_corpus_lattices():
        if not verify_ortholattice(lat).ok and roundtrip_bad is None:
            roundtrip_bad = {"lattice": name, "stage": "axioms"}
            continue
        _, iso = downset_completion(lat)
        if not iso and roundtrip_bad is None:
            roundtrip_bad = {"lattice": name, "stage": "downset"}
        _, atomistic = is_atomistic(lat)
        if atomistic:
            _, atom_iso = atom_completion(lat)
            if not atom_iso and roundtrip_bad is None:
                roundtrip_bad = {"lattice": name, "stage": "atoms"}
        agree, pair = _commutation_agreement(lat)
        omod = is_orthomodular(lat)
        if agree != omod and commutation_bad is None:
            commutation_bad = {"lattice": name, "agree": agree,
                               "orthomodular": omod}
        if not omod:
            differing_pairs[name] = list(pair) if pair else None
        symmetric = all(commutes(lat, p, q) == commutes(lat, q, p)
                        for p in range(lat.n) for q in range(lat.n))
        if symmetric != omod and symmetry_bad is None:
            symmetry_bad = {"lattice": name, "symmetric": symmetric,
                            "orthomodular": omod}
    required = {"benzene", "qsubsets-5-cycle"}
    missing = [name for name in required if differing_pairs.get(name) is None]
    results.append(CheckResult("named-completion-roundtrip", roundtrip_bad is None,
                               roundtrip_bad, {"lattices": 15}))
    results.append(CheckResult(
        "named-commutation-iff-orthomodular",
        commutation_bad is None and not missing,
        commutation_bad or ({"missing_differing_pairs": missing} if missing else None),
        {"differing_pairs": {k: differing_pairs[k] for k in sorted(differing_pairs)}}))
    results.append(CheckResult("named-commutes-symmetric-iff-orthomodular",
                               symmetry_bad is None, symmetry_bad, {}))
    return results


# -- worked-example goldens ------------------------------------------------------


def _suite_examples(spec: CorpusSpec) -> list[CheckResult]:
    results = []
    F = Fraction

    u = IntervalUnion.make(1, [(0, F(1, 2))])
    got = u.qcomp()
    expected = IntervalUnion.make(1, [(float("-inf"), -1), (F(3, 2), float("inf"))])
    results.append(CheckResult("examples-interval-qcomp", got == expected,
                               None if got == expected else
                               {"got": [[str(a), str(b)] for a, b in got.intervals]}))

    ok = True
    witness = None
    for v, upper in [(F(0), F(2)), (F(0), F(5, 2)), (F(-3), F(1, 2))]:
        pts = IntervalUnion.from_points(1, [v, upper])
        want = IntervalUnion.make(1, [(float("-inf"), v - 1), (v + 1, upper - 1),
                                      (upper + 1, float("inf"))])
        if pts.qcomp() != want or pts.closure() != pts:
            ok = False
            witness = {"points": [str(v), str(upper)]}
            break
    small = IntervalUnion.from_points(1, [F(0), F(3, 2)])
    if small.closure() != IntervalUnion.make(1, [(0, F(3, 2))]):
        ok = False
        witness = {"stage": "small-diameter"}
    results.append(CheckResult("examples-interval-two-points", ok, witness))

    t = IntervalUnion.make(1, [(0, 1)])
    s = IntervalUnion.make(1, [(0, F(1, 2))])
    hered_ok = (s.qcomp().intersect(t).is_empty()
                and t.relative_closure(s) == t)
    results.append(CheckResult("examples-interval-nonhereditary", hered_ok, None))

    arc_ok = True
    arc_witness = None
    for theta in [F(0), F(1, 2), F(2), F(5, 2), F(11, 4)]:
        if ArcSet.point(theta).qcomp() != ArcSet.arc(theta + 1, 1):
            arc_ok = False
            arc_witness = {"theta": str(theta)}
            break
    results.append(CheckResult("examples-arc-singleton-complement", arc_ok, arc_witness))

    dichotomy_ok = (closure_points([F(0), F(1, 2)]) == ArcSet.arc(0, F(1, 2))
                    and closure_points([F(0), F(3, 2)]) == ArcSet.full()
                    and closure_points([F(7, 3)]) == ArcSet.point(F(7, 3)))
    results.append(CheckResult("examples-arc-closure-dichotomy", dichotomy_ok, None))

    at = ArcSet.arc(0, 1)
    as_ = ArcSet.arc(0, F(1, 2))
    arc_hered_ok = (as_.qcomp().intersect(at).is_empty()
                    and as_.qcomp().intersect(at).qcomp().intersect(at) == at)
    results.append(CheckResult("examples-arc-nonhereditary", arc_hered_ok, None))

    central_ok = True
    central_witness = None
    grid = _arc_grid_elements()
    proper = [a for a in grid if a.kind == "arc"]
    for trivial in [ArcSet.empty(), ArcSet.full()]:
        if not all(arc_qcommutes(trivial, other) for other in grid):
            central_ok = False
            central_witness = {"stage": "trivial-not-central"}
    for candidate in proper:
        if all(arc_qcommutes(candidate, other) for other in grid):
            central_ok = False
            central_witness = {"stage": "proper-arc-central",
                               "arc": [str(candidate.start), str(candidate.length)]}
            break
    results.append(CheckResult("examples-arc-qcentral", central_ok, central_witness))
    return results


# -- arc characterization grid ----------------------------------------------------


def expected_arc_commutes(s: ArcSet, t: ArcSet) -> bool:
    """Case description of commutation for the arc model.

    Trivial elements commute with everything; an arc shorter than 1 commutes
    exactly with the arcs containing it or contained in its complement; an
    arc of length 1 commutes exactly when equal to the other side or its
    complement, or cutting both in singletons.
    """
    if s.kind != "arc" or t.kind != "arc":
        return True
    if s.length < 1:
        return s.issubset(t) or s.issubset(t.qcomp())
    return (s == t or s == t.qcomp()
            or (s.intersect(t).is_singleton()
                and s.intersect(t.qcomp()).is_singleton()))


def expected_arc_qcommutes(s: ArcSet, t: ArcSet) -> bool:
    """Case description of q-commutation: overlap or orthogonal containment."""
    if s.kind != "arc" or t.kind != "arc":
        return True
    return not s.intersect(t).is_empty() or s.issubset(t.qcomp())


def _arc_grid_elements() -> list[ArcSet]:
    F = Fraction
    out = [ArcSet.empty(), ArcSet.full()]
    for start_twelfths in range(36):
        for length_twelfths in range(13):
            out.append(ArcSet.arc(F(start_twelfths, 12), F(length_twelfths, 12)))
    return out


def _suite_arc_grid(spec: CorpusSpec) -> list[CheckResult]:
    """Characterization agreement on the full 1/12 grid.

    Both relations and both case descriptions are invariant under rotation,
    and the grid is closed under rotation by twelfths, so checking one
    representative start per left arc covers every grid pair.
    """
    started = time.perf_counter()
    F = Fraction
    grid = _arc_grid_elements()
    lefts = [ArcSet.empty(), ArcSet.full()]
    lefts += [ArcSet.arc(0, F(length_twelfths, 12)) for length_twelfths in range(13)]
    bad = None
    pairs = 0
    mixed = 0
    for s in lefts:
        for t in grid:
            pairs += 1
            got_c = arc_commutes(s, t)
            got_q = arc_qcommutes(s, t)
            if got_c != expected_arc_commutes(s, t):
                bad = {"relation": "commutes", "s": _arc_repr(s), "t": _arc_repr(t)}
                break
            if got_q != expected_arc_qcommutes(s, t):
                bad = {"relation": "qcommutes", "s": _arc_repr(s), "t": _arc_repr(t)}
                break
            if got_q != arc_qcommutes(t, s):
                bad = {"relation": "qcommutes-symmetry", "s": _arc_repr(s),
                       "t": _arc_repr(t)}
                break
            if got_q and not got_c:
                mixed += 1
        if bad:
            break
    ok = bad is None and mixed > 0
    if bad is None and mixed == 0:
        bad = {"stage": "no-qcommuting-noncommuting-pair"}
    return [CheckResult("arc-characterization-grid", ok, bad,
                        {"pairs": pairs, "qcommuting-noncommuting-pairs": mixed},
                        seconds=time.perf_counter() - started)]


def _arc_repr(a: ArcSet):
    if a.kind == "arc":
        return ["arc", str(a.start), str(a.length)]
    return [a.kind]


# -- randomized interval invariants -------------------------------------------------


def _random_interval_union(rng: Random, delta: Fraction) -> IntervalUnion:
    pairs = []
    for _ in range(rng.randrange(0, 5)):
        a = Fraction(rng.randrange(-24, 25), rng.randrange(1, 9))
        b = a + Fraction(rng.randrange(0, 17), rng.randrange(1, 5))
        pairs.append((a, b))
    if rng.random() < 0.15:
        pairs.append((float("-inf"), Fraction(rng.randrange(-24, 0))))
    if rng.random() < 0.15:
        pairs.append((Fraction(rng.randrange(0, 24)), float("inf")))
    return IntervalUnion.make(delta, pairs)


def _suite_interval_random(spec: CorpusSpec) -> list[CheckResult]:
    rng = _suite_rng(spec.seed, "interval-random")
    bad = None
    cases = 300
    deltas = [Fraction(1), Fraction(1, 2), Fraction(3, 4), Fraction(2)]
    for index in range(cases):
        delta = deltas[index % len(deltas)]
        u = _random_interval_union(rng, delta)
        v = _random_interval_union(rng, delta)
        uc, vc = u.qcomp(), v.qcomp()
        closure = u.closure()
        checks = [
            uc.qcomp().qcomp() == uc,
            u.issubset(vc) == v.issubset(uc),
            (not u.issubset(v)) or vc.issubset(uc),
            u.issubset(closure),
            closure.closure() == closure,
            closure.is_qsubset(),
            u.is_qsubset() == (closure == u),
            u.qcomp().scaled(Fraction(3, 2)) == u.scaled(Fraction(3, 2)).qcomp(),
        ]
        if not all(checks):
            bad = {"case": index,
                   "u": [[str(a), str(b)] for a, b in u.intervals],
                   "v": [[str(a), str(b)] for a, b in v.intervals],
                   "delta": str(delta)}
            break

    grid_bad = None
    step_grid = [Fraction(k, 2) for k in range(-8, 9)]
    qs = QuantumSet(tuple(str(g) for g in step_grid),
                    tuple(sum(1 << j for j, h in enumerate(step_grid)
                              if abs(h - g) >= 1) for g in step_grid))
    inner = [g for g in step_grid if -2 <= g <= 2]
    for _ in range(50):
        members = [g for g in inner if rng.random() < 0.3]
        if not members:
            continue
        finite = qs.closure(qs.subset([str(g) for g in members]))
        exact = IntervalUnion.from_points(1, members).closure()
        if {step_grid[i] for i in finite.indices()} != {g for g in step_grid
                                                        if exact.contains_point(g)}:
            grid_bad = {"points": [str(g) for g in members]}
            break
    return [
        CheckResult("interval-law-battery", bad is None, bad, {"cases": cases}),
        CheckResult("interval-sampled-oracle", grid_bad is None, grid_bad,
                    {"cases": 50}),
    ]


# -- regular-open Booleanity ---------------------------------------------------------


def _regular_open_checks(top: FiniteTopology) -> Optional[str]:
    lat = regular_open_lattice(top)
    if not verify_ortholattice(lat).ok:
        return "axioms"
    if not is_orthomodular(lat):
        return "orthomodular"
    if not is_distributive(lat):
        return "distributive"
    regs = sorted(top.regular_opens(),
                  key=lambda m: ElementSet(top.n, m).to_bits())
    for i, u in enumerate(regs):
        for j, v in enumerate(regs):
            if regs[lat.join(i, j)] != regular_open_join(top, u, v):
                return "join-formula"
            if regs[lat.meet(i, j)] != u & v:
                return "meet-formula"
    return None


def _suite_regular_open(spec: CorpusSpec) -> list[CheckResult]:
    bad = None
    count3 = 0
    for top in iter_topologies(["a", "b", "c"]):
        count3 += 1
        failure = _regular_open_checks(top)
        if failure and bad is None:
            bad = {"points": 3, "opens": [bin(m) for m in top.opens],
                   "stage": failure}
    rng = _suite_rng(spec.seed, "regular-open")
    sampled = 100
    labels = ["a", "b", "c", "d", "e", "f"]
    for index in range(sampled):
        n = 4 + index % 3
        top = random_topology(rng, labels[:n])
        failure = _regular_open_checks(top)
        if failure and bad is None:
            bad = {"points": n, "opens": [bin(m) for m in top.opens],
                   "stage": failure}
    ok = bad is None and count3 == 29
    if count3 != 29 and bad is None:
        bad = {"stage": "topology-count", "count": count3}
    return [CheckResult("regular-open-boolean", ok, bad,
                        {"three-point-topologies": count3, "sampled": sampled})]


# -- quantum topology axioms ------------------------------------------------------------


def _suite_quantum_topology(spec: CorpusSpec) -> list[CheckResult]:
    coincidence_bad = None
    families_checked = 0
    for n in range(0, 5):
        qs = QuantumSet.classical(n)
        carrier = enumerate_qsubsets(qs)
        full = qs.full_mask
        subset_count = full + 1
        for picks in range(1 << subset_count):
            family_masks = [m for m in range(subset_count) if picks >> m & 1]
            family = [ElementSet(n, m) for m in family_masks]
            members = set(family_masks)
            families_checked += 1
            closed_system = (
                0 in members and full in members
                and all(a & b in members and a | b in members
                        for a in members for b in members))
            if verify_quantum_topology(carrier, family).ok != closed_system:
                coincidence_bad = {"n": n, "family": family_masks}
                break
        if coincidence_bad:
            break

    minimality_bad = None
    generator_cases = 0
    carriers = [
        QuantumSet.cycle(4),
        QuantumSet.from_pairs(["a", "a'", "b", "b'"], [("a", "a'"), ("b", "b'")]),
        QuantumSet.classical(3),
        QuantumSet.cycle(5),
        QuantumSet.classical(4),
    ]
    for qset in carriers:
        carrier = enumerate_qsubsets(qset)
        if len(carrier) > 16:
            continue
        proper = [m for m in carrier.masks if m not in (0, qset.full_mask)]
        if len(carrier) >= 16:
            # 2^13 superset families already; one generator set is plenty.
            generator_sets = [proper[:1]]
        else:
            generator_sets = [[], proper[:1], proper[1:2], proper[:2]]
        for gen_masks in generator_sets:
            generator_cases += 1
            gens = [ElementSet(qset.n, m) for m in gen_masks]
            generated = generate_topology(carrier, gens)
            gen_bits = set(generated.family_bits())
            if not verify_quantum_topology(carrier, generated.closed_family).ok:
                minimality_bad = {"quantum_set": _qset_witness(qset),
                                  "stage": "generated-does-not-verify"}
                break
            seed_bits = {0, qset.full_mask} | set(gen_masks)
            free = [m for m in carrier.masks if m not in seed_bits]
            for picks in range(1 << len(free)):
                family_bits = set(seed_bits)
                family_bits.update(free[i] for i in range(len(free)) if picks >> i & 1)
                family = [ElementSet(qset.n, m) for m in sorted(family_bits)]
                if verify_quantum_topology(carrier, family).ok:
                    if not gen_bits <= family_bits:
                        minimality_bad = {"quantum_set": _qset_witness(qset),
                                          "stage": "not-minimal"}
                        break
            if minimality_bad:
                break
        if minimality_bad:
            break
    return [
        CheckResult("quantum-topology-classical-coincidence",
                    coincidence_bad is None, coincidence_bad,
                    {"families": families_checked}),
        CheckResult("quantum-topology-generate-minimality",
                    minimality_bad is None, minimality_bad,
                    {"generator_cases": generator_cases}),
    ]


# -- runner ---------------------------------------------------------------------------


def _run_suite(spec: CorpusSpec, suite: str) -> list[CheckResult]:
    if suite == "exhaustive-4":
        return _suite_exhaustive(spec, 4)
    if suite == "exhaustive-5":
        return _suite_exhaustive(spec, 5)
    if suite == "oracle":
        return _suite_oracle(spec)
    if suite == "named-lattices":
        return _suite_named_lattices(spec)
    if suite == "examples":
        return _suite_examples(spec)
    if suite == "arc-grid":
        return _suite_arc_grid(spec)
    if suite == "interval-random":
        return _suite_interval_random(spec)
    if suite == "regular-open":
        return _suite_regular_open(spec)
    if suite == "quantum-topology":
        return _suite_quantum_topology(spec)
    raise InputError(f"unknown suite {suite!r}; available: {', '.join(DEFAULT_SUITES)}")


def run_corpus(spec: CorpusSpec) -> RunReport:
    """Run the selected suites and assemble the deterministic report."""
    checks: list[CheckResult] = []
    durations: dict[str, float] = {}
    started = time.perf_counter()
    for suite in spec.suites:
        suite_start = time.perf_counter()
        results = _run_suite(spec, suite)
        elapsed = time.perf_counter() - suite_start
        durations[suite] = elapsed
        checks.extend(results)
    total = time.perf_counter() - started
    command = "corpus --suites {} --seed {} --limit {}".format(
        ",".join(spec.suites), spec.seed, spec.limit)
    return RunReport(command=command, seed=spec.seed, limit=spec.limit,
                     suites=tuple(spec.suites), checks=checks,
                     durations=durations, total_seconds=total)
