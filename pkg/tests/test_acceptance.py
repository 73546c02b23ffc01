"""Acceptance gate: every criterion at its stated tolerance.

Runs the full verification corpus twice with one fixed seed (the second run
feeds the determinism criterion) and prints one pass/fail line per
criterion.  Run with ``pytest tests/test_acceptance.py -v -s``.
"""

import pytest

from qsets.corpus import DEFAULT_SUITES, CorpusSpec, run_corpus

SEED = 20260810


@pytest.fixture(scope="module")
def corpus_runs():
    spec = CorpusSpec(suites=DEFAULT_SUITES, seed=SEED)
    return run_corpus(spec), run_corpus(spec)


def _assert_checks(report, number, label, names, extra_ok=True, extra_note=""):
    checks = [report.check(name) for name in names]
    ok = all(check.ok for check in checks) and extra_ok
    print(f"ACCEPTANCE {number} {label}: {'PASS' if ok else 'FAIL'}{extra_note}")
    for check in checks:
        assert check.ok, f"{check.name} failed: {check.witness}"
    assert extra_ok, extra_note


def test_criterion_1_exhaustive_structure_suite(corpus_runs):
    report, _ = corpus_runs
    elapsed = (report.check("ortholattice-axioms-n4").seconds
               + report.check("ortholattice-axioms-n5").seconds)
    assert report.check("ortholattice-axioms-n4").details["quantum_sets"] == 64
    assert report.check("ortholattice-axioms-n5").details["quantum_sets"] == 1024
    _assert_checks(
        report, 1, "exhaustive structure suite (64 + 1024 quantum sets)",
        ["ortholattice-axioms-n4", "ortholattice-axioms-n5",
         "hereditary-equivalences-n4", "hereditary-equivalences-n5",
         "atomic-atomistic-n4", "atomic-atomistic-n5"],
        extra_ok=elapsed < 10.0,
        extra_note=f" ({elapsed:.2f}s, budget 10s)")


def test_criterion_2_oracle_equivalence(corpus_runs):
    report, _ = corpus_runs
    assert report.check("oracle-powerset-equivalence").details["samples"] == 200
    _assert_checks(report, 2, "lectic enumeration equals power-set filter",
                   ["oracle-powerset-equivalence"])


def test_criterion_3_correspondence_round_trips(corpus_runs):
    report, _ = corpus_runs
    _assert_checks(
        report, 3, "completion round trips over the whole corpus",
        ["completion-roundtrip-n4", "completion-roundtrip-n5",
         "named-completion-roundtrip"])


def test_criterion_4_commutation_equivalence(corpus_runs):
    report, _ = corpus_runs
    named = report.check("named-commutation-iff-orthomodular")
    pairs = named.details["differing_pairs"]
    has_required = "benzene" in pairs and "qsubsets-5-cycle" in pairs
    _assert_checks(
        report, 4, "orthomodular iff commutation relations agree",
        ["commutation-iff-orthomodular-n4", "commutation-iff-orthomodular-n5",
         "named-commutation-iff-orthomodular",
         "named-commutes-symmetric-iff-orthomodular"],
        extra_ok=has_required,
        extra_note=f" (differing pairs: {pairs})")


def test_criterion_5_worked_example_goldens(corpus_runs):
    report, _ = corpus_runs
    names = [check.name for check in report.checks
             if check.name.startswith("examples-")]
    assert len(names) == 7
    _assert_checks(report, 5, "worked-example goldens (exact rational equality)",
                   names)


def test_criterion_6_arc_characterization_grid(corpus_runs):
    report, _ = corpus_runs
    check = report.check("arc-characterization-grid")
    _assert_checks(
        report, 6, "arc commutation characterizations on the 1/12 grid",
        ["arc-characterization-grid"],
        extra_ok=check.seconds < 60.0,
        extra_note=f" ({check.details['pairs']} pairs, {check.seconds:.2f}s, budget 60s)")


def test_criterion_7_regular_open_booleanity(corpus_runs):
    report, _ = corpus_runs
    check = report.check("regular-open-boolean")
    counts_ok = (check.details["three-point-topologies"] == 29
                 and check.details["sampled"] == 100)
    _assert_checks(report, 7, "regular-open algebras are Boolean",
                   ["regular-open-boolean"], extra_ok=counts_ok,
                   extra_note=f" ({check.details})")


def test_criterion_8_quantum_topology_axioms(corpus_runs):
    report, _ = corpus_runs
    _assert_checks(
        report, 8, "quantum topology axioms and generator minimality",
        ["quantum-topology-classical-coincidence",
         "quantum-topology-generate-minimality"])


def test_criterion_9_determinism(corpus_runs):
    first, second = corpus_runs
    ok = first.to_canonical_bytes() == second.to_canonical_bytes()
    print(f"ACCEPTANCE 9 byte-identical reports under a fixed seed: "
          f"{'PASS' if ok else 'FAIL'}")
    assert ok


def test_overall_status(corpus_runs):
    report, _ = corpus_runs
    failing = [check.name for check in report.checks if not check.ok]
    assert report.status == 0, f"failing checks: {failing}"
