"""Command-line surface.

Subcommands: analyze, lattice, check, complete, interval, arc, topology,
corpus.  Exit codes: 0 success, 1 property/check failure, 2 input or
resource error.  All output is deterministic; timing goes to stderr.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .core import DEFAULT_LIMIT
from .corpus import DEFAULT_SUITES, CorpusSpec, run_corpus
from .errors import QsetsError
from .exact import as_fraction
from .jsonio import (canonical_json, export_hasse, lattice_to_dict, parse_input,
                     qsubset_lattice_report, serialize)
from .lattice import (atom_completion, downset_completion, is_atomistic,
                      is_distributive, is_orthomodular, orthomodular_witness,
                      to_quantum_set, verify_ortholattice)
from .projline import arc_commutes, arc_qcommutes, closure_points
from .qsubsets import (enumerate_qsubsets, hereditary_witness, is_atomic,
                       is_hereditary, qcentral_elements)
from .topology import regular_open_lattice, verify_quantum_topology


def _print_json(payload) -> None:
    sys.stdout.write(canonical_json(payload) + "\n")


def _write_text(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text, encoding="utf-8")


def _cmd_analyze(args) -> int:
    qset = parse_input(args.input, "quantum-set")
    qsl = enumerate_qsubsets(qset, args.limit)
    witness = hereditary_witness(qset, args.limit)
    if len(qsl) <= 1024:
        orthomodular = is_orthomodular(qsl.lattice)
    else:
        # Dense lattice tables are quadratic in the closed-set count.
        orthomodular = witness is None
    payload = {
        "elements": qset.n,
        "q_distinct_pairs": qset.pair_count(),
        "qsubsets": len(qsl),
        "atomic": is_atomic(qset),
        "hereditary": is_hereditary(qset, args.limit),
        "orthomodular": orthomodular,
        "qcentral": [s.to_bits() for s in qcentral_elements(qset, args.limit)],
        "hereditary_witness": None if witness is None else
            {"s": witness[0].to_bits(), "t": witness[1].to_bits()},
    }
    _print_json(payload)
    return 0


def _cmd_lattice(args) -> int:
    qset = parse_input(args.input, "quantum-set")
    qsl = enumerate_qsubsets(qset, args.limit)
    if args.dot is not None:
        _write_text(args.dot, export_hasse(qsl))
    if args.dot is None or args.json:
        _print_json(qsubset_lattice_report(qsl))
    return 0


def _cmd_check(args) -> int:
    lat = parse_input(args.input, "ortholattice")
    verdict = verify_ortholattice(lat)
    payload = {"ortholattice": verdict.ok,
               "axiom": verdict.axiom,
               "witness": list(verdict.witness) if verdict.witness else None}
    if verdict.ok:
        witness = orthomodular_witness(lat)
        atomic, atomistic = is_atomistic(lat)
        payload.update({
            "orthomodular": witness is None,
            "orthomodular_witness": list(witness) if witness else None,
            "atomic": atomic,
            "atomistic": atomistic,
            "distributive": is_distributive(lat),
        })
        if args.tables:
            payload["lattice"] = lattice_to_dict(lat, include_tables=True)
    if args.dot is not None and verdict.ok:
        _write_text(args.dot, export_hasse(lat))
    _print_json(payload)
    return 0 if verdict.ok else 1


def _cmd_complete(args) -> int:
    lat = parse_input(args.input, "ortholattice")
    verdict = verify_ortholattice(lat)
    if not verdict.ok:
        _print_json({"ortholattice": False, "axiom": verdict.axiom})
        return 1
    star = to_quantum_set(lat)
    qsl = enumerate_qsubsets(star, args.limit)
    _, iso = downset_completion(lat)
    payload = {"elements": lat.n, "star_elements": star.n,
               "qsubsets_of_star": len(qsl), "downset_iso": iso}
    atomic, atomistic = is_atomistic(lat)
    if atomistic:
        _, atom_iso = atom_completion(lat)
        payload["atom_iso"] = atom_iso
    _print_json(payload)
    return 0 if iso else 1


def _cmd_interval(args) -> int:
    if args.op == "relclosure":
        if args.second is None:
            raise QsetsError("relclosure needs the carrier file and the subset file")
        t = parse_input(args.input, "interval-union")
        s = parse_input(args.second, "interval-union")
        _print_json(serialize(t.relative_closure(s)))
        return 0
    u = parse_input(args.input, "interval-union")
    if args.op == "qcomp":
        _print_json(serialize(u.qcomp()))
    elif args.op == "closure":
        _print_json(serialize(u.closure()))
    elif args.op == "isq1":
        _print_json({"closed": u.is_qsubset()})
        return 0 if u.is_qsubset() else 1
    return 0


def _cmd_arc(args) -> int:
    if args.op == "closure":
        if args.points is None:
            raise QsetsError("closure needs --points")
        pts = [as_fraction(p) for p in args.points.split(",") if p.strip()]
        _print_json(serialize(closure_points(pts)))
        return 0
    first = parse_input(args.input, "arc-set")
    if args.op == "qcomp":
        _print_json(serialize(first.qcomp()))
        return 0
    second = parse_input(args.second, "arc-set")
    if args.op == "commutes":
        result = arc_commutes(first, second)
    else:
        result = arc_qcommutes(first, second)
    _print_json({args.op: result})
    return 0


def _cmd_topology(args) -> int:
    if args.action == "regopen":
        top = parse_input(args.input, "topology")
        lat = regular_open_lattice(top)
        verdict = verify_ortholattice(lat)
        payload = lattice_to_dict(lat)
        payload["verdicts"] = {
            "ortholattice": verdict.ok,
            "orthomodular": is_orthomodular(lat) if verdict.ok else False,
            "distributive": is_distributive(lat) if verdict.ok else False,
        }
        if args.dot is not None:
            _write_text(args.dot, export_hasse(lat))
        _print_json(payload)
        return 0 if all(payload["verdicts"].values()) else 1
    if args.action == "verify":
        qtop = parse_input(args.input, "quantum-topology", limit=args.limit)
        verdict = verify_quantum_topology(qtop.carrier, qtop.closed_family)
        _print_json({"quantum_topology": verdict.ok, "axiom": verdict.axiom,
                     "witness": list(verdict.witness) if verdict.witness else None})
        return 0 if verdict.ok else 1
    if args.action == "gelfand":
        from .topology import classical_gelfand

        qtop = classical_gelfand(args.n)
        _print_json(serialize(qtop))
        return 0
    raise QsetsError(f"unknown topology action {args.action!r}")


def _cmd_corpus(args) -> int:
    suites = tuple(args.suites.split(",")) if args.suites else DEFAULT_SUITES
    spec = CorpusSpec(suites=suites, seed=args.seed, limit=args.limit)
    report = run_corpus(spec)
    text = report.to_canonical_bytes().decode("ascii") + "\n"
    if args.out is None or args.out == "-":
        sys.stdout.write(text)
    else:
        Path(args.out).write_text(text, encoding="ascii")
    for suite in report.suites:
        sys.stderr.write(f"{suite}: {report.durations[suite]:.2f}s\n")
    sys.stderr.write(f"total: {report.total_seconds:.2f}s\n")
    for check in report.checks:
        if not check.ok:
            sys.stderr.write(f"FAIL {check.name}\n")
    return report.status


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qsets",
        description="Quantum sets, q-subset ortholattices, exact interval and "
                    "arc models, and quantum topologies.")
    parser.add_argument("--limit", type=int, default=DEFAULT_LIMIT,
                        help="closed-set enumeration bound")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="quantum set file -> property summary")
    p.add_argument("input")
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("lattice", help="quantum set file -> q-subset lattice")
    p.add_argument("input")
    p.add_argument("--dot", nargs="?", const="-", default=None,
                   help="write the cover diagram (DOT) to a file or stdout")
    p.add_argument("--json", action="store_true",
                   help="also print the JSON report when --dot is used")
    p.set_defaults(func=_cmd_lattice)

    p = sub.add_parser("check", help="ortholattice file -> axiom verdicts")
    p.add_argument("input")
    p.add_argument("--dot", nargs="?", const="-", default=None)
    p.add_argument("--tables", action="store_true",
                   help="include the derived meet/join tables in the output")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("complete", help="ortholattice file -> down-set completion round trip")
    p.add_argument("input")
    p.set_defaults(func=_cmd_complete)

    p = sub.add_parser("interval", help="operations on interval unions")
    p.add_argument("op", choices=["qcomp", "closure", "isq1", "relclosure"])
    p.add_argument("input")
    p.add_argument("second", nargs="?", default=None,
                   help="subset file for relclosure")
    p.set_defaults(func=_cmd_interval)

    p = sub.add_parser("arc", help="operations on circle arcs")
    p.add_argument("op", choices=["qcomp", "closure", "commutes", "qcommutes"])
    p.add_argument("input", nargs="?", default=None)
    p.add_argument("second", nargs="?", default=None)
    p.add_argument("--points", default=None,
                   help="comma-separated rational angles for closure")
    p.set_defaults(func=_cmd_arc)

    p = sub.add_parser("topology", help="finite and quantum topology tools")
    p.add_argument("action", choices=["regopen", "verify", "gelfand"])
    p.add_argument("input", nargs="?", default=None)
    p.add_argument("-n", type=int, default=0, help="point count for gelfand")
    p.add_argument("--dot", nargs="?", const="-", default=None)
    p.set_defaults(func=_cmd_topology)

    p = sub.add_parser("corpus", help="run verification suites, print the report")
    p.add_argument("--suites", default=None,
                   help=f"comma-separated subset of: {','.join(DEFAULT_SUITES)}")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", default=None, help="report destination (default stdout)")
    p.set_defaults(func=_cmd_corpus)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except QsetsError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
