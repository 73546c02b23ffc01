"""JSON ingestion/serialization for every exported type, plus DOT export.

Parsing enforces all type invariants and cites the offending field; output is
canonical (sorted keys, fixed separators) so identical values always
serialize to identical bytes.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import IO, Union

from .core import ElementSet, QuantumSet
from .errors import InputError
from .exact import format_endpoint, parse_endpoint
from .lattice import OrthoLattice
from .projline import ArcSet
from .qsubsets import QSubsetLattice, enumerate_qsubsets
from .realline import IntervalUnion
from .topology import FiniteTopology, QuantumTopology

KINDS = ("quantum-set", "ortholattice", "interval-union", "arc-set",
         "topology", "quantum-topology")


def canonical_json(payload) -> str:
    return json.dumps(payload, sort_keys=True, separators=(",", ":"), ensure_ascii=True)


# -- per-type converters ------------------------------------------------------


def quantum_set_to_dict(qs: QuantumSet) -> dict:
    pairs = []
    for i in range(qs.n):
        for j in range(i + 1, qs.n):
            if qs.orth(i, j):
                pairs.append([qs.labels[i], qs.labels[j]])
    return {"elements": list(qs.labels), "q_distinct": pairs}


def quantum_set_from_dict(payload: dict) -> QuantumSet:
    if not isinstance(payload, dict):
        raise InputError("quantum set document must be an object")
    elements = payload.get("elements")
    if not isinstance(elements, list) or not all(isinstance(e, str) for e in elements):
        raise InputError("field 'elements' must be a list of strings")
    raw_pairs = payload.get("q_distinct", [])
    if not isinstance(raw_pairs, list):
        raise InputError("field 'q_distinct' must be a list of pairs")
    pairs = []
    for item in raw_pairs:
        if not isinstance(item, list) or len(item) != 2:
            raise InputError(f"field 'q_distinct' holds a non-pair entry: {item!r}")
        pairs.append((item[0], item[1]))
    return QuantumSet.from_pairs(elements, pairs)


def lattice_to_dict(lat: OrthoLattice, include_tables: bool = False) -> dict:
    covers = [[lat.labels[i], lat.labels[j]] for i, j in lat.covers()]
    ortho = {lat.labels[i]: lat.labels[lat.ortho[i]] for i in range(lat.n)}
    payload = {"elements": list(lat.labels), "covers": covers, "ortho": ortho}
    if include_tables:
        payload["meet"] = [[lat.labels[m] for m in row] for row in lat.meet_table]
        payload["join"] = [[lat.labels[j] for j in row] for row in lat.join_table]
    return payload


def lattice_from_dict(payload: dict) -> OrthoLattice:
    if not isinstance(payload, dict):
        raise InputError("lattice document must be an object")
    elements = payload.get("elements")
    if not isinstance(elements, list) or not all(isinstance(e, str) for e in elements):
        raise InputError("field 'elements' must be a list of strings")
    ortho = payload.get("ortho")
    if not isinstance(ortho, dict):
        raise InputError("field 'ortho' must be an object mapping labels to labels")
    has_covers = "covers" in payload
    has_leq = "leq" in payload
    if has_covers == has_leq:
        raise InputError("give exactly one of 'covers' or 'leq'")
    raw = payload["covers"] if has_covers else payload["leq"]
    if not isinstance(raw, list):
        raise InputError("order relation must be a list of pairs")
    pairs = []
    for item in raw:
        if not isinstance(item, list) or len(item) != 2:
            raise InputError(f"order relation holds a non-pair entry: {item!r}")
        pairs.append((item[0], item[1]))
    return OrthoLattice.from_relations(elements, pairs, ortho, transitive=has_covers)


def interval_union_to_dict(u: IntervalUnion) -> dict:
    return {"delta": str(u.delta),
            "intervals": [[format_endpoint(lo), format_endpoint(hi)]
                          for lo, hi in u.intervals]}


def interval_union_from_dict(payload: dict) -> IntervalUnion:
    if not isinstance(payload, dict):
        raise InputError("interval document must be an object")
    if "delta" not in payload:
        raise InputError("field 'delta' is required")
    raw = payload.get("intervals", [])
    if not isinstance(raw, list):
        raise InputError("field 'intervals' must be a list of endpoint pairs")
    pairs = []
    for item in raw:
        if not isinstance(item, list) or len(item) != 2:
            raise InputError(f"field 'intervals' holds a non-pair entry: {item!r}")
        pairs.append((parse_endpoint(item[0]), parse_endpoint(item[1])))
    return IntervalUnion.make(payload["delta"], pairs)


def arc_set_to_dict(a: ArcSet) -> dict:
    if a.kind == "arc":
        return {"kind": "arc", "start": str(a.start), "length": str(a.length)}
    return {"kind": a.kind}


def arc_set_from_dict(payload: dict) -> ArcSet:
    if not isinstance(payload, dict):
        raise InputError("arc document must be an object")
    kind = payload.get("kind")
    if kind == "empty":
        return ArcSet.empty()
    if kind == "full":
        return ArcSet.full()
    if kind == "arc":
        if "start" not in payload or "length" not in payload:
            raise InputError("an arc needs 'start' and 'length' fields")
        return ArcSet.arc(payload["start"], payload["length"])
    raise InputError(f"field 'kind' must be empty/arc/full, got {kind!r}")


def finite_topology_to_dict(top: FiniteTopology) -> dict:
    opens = [[top.points[i] for i in range(top.n) if mask >> i & 1]
             for mask in top.opens]
    return {"points": list(top.points), "opens": opens}


def finite_topology_from_dict(payload: dict) -> FiniteTopology:
    if not isinstance(payload, dict):
        raise InputError("topology document must be an object")
    points = payload.get("points")
    if not isinstance(points, list) or not all(isinstance(p, str) for p in points):
        raise InputError("field 'points' must be a list of strings")
    opens = payload.get("opens")
    if not isinstance(opens, list) or not all(isinstance(o, list) for o in opens):
        raise InputError("field 'opens' must be a list of point lists")
    return FiniteTopology.from_label_sets(points, opens)


def quantum_topology_to_dict(top: QuantumTopology) -> dict:
    return {"quantum_set": quantum_set_to_dict(top.carrier.parent),
            "closed_family": [member.to_bits() for member in top.closed_family]}


def quantum_topology_from_dict(payload: dict, limit: int | None = None) -> QuantumTopology:
    if not isinstance(payload, dict):
        raise InputError("quantum topology document must be an object")
    if "quantum_set" not in payload:
        raise InputError("field 'quantum_set' is required")
    qs = quantum_set_from_dict(payload["quantum_set"])
    raw = payload.get("closed_family")
    if not isinstance(raw, list) or not all(isinstance(b, str) for b in raw):
        raise InputError("field 'closed_family' must be a list of bit-strings")
    kwargs = {} if limit is None else {"limit": limit}
    carrier = enumerate_qsubsets(qs, **kwargs)
    members = []
    for bits in raw:
        member = ElementSet.from_bits(bits)
        if member.width != qs.n:
            raise InputError(f"closed_family entry {bits!r} has wrong width")
        members.append(member)
    return QuantumTopology(carrier, tuple(members))


def qsubset_lattice_report(qsl: QSubsetLattice) -> dict:
    """Summary document for an enumerated q-subset lattice."""
    from .lattice import is_orthomodular
    from .qsubsets import hereditary_witness, is_atomic, is_hereditary

    qs = qsl.parent
    if len(qsl) <= 1024:
        orthomodular = is_orthomodular(qsl.lattice)
    else:
        # The dense meet/join tables are quadratic in the closed-set count;
        # past that, decide through the witness characterization instead.
        orthomodular = hereditary_witness(qs) is None
    return {
        "closed_sets": [s.to_bits() for s in qsl.closed_sets],
        "atoms": [s.to_bits() for s in qsl.atom_sets()],
        "properties": {
            "atomic": is_atomic(qs),
            "hereditary": is_hereditary(qs),
            "orthomodular": orthomodular,
        },
    }


# -- generic entry points --------------------------------------------------------

_PARSERS = {
    "quantum-set": quantum_set_from_dict,
    "ortholattice": lattice_from_dict,
    "interval-union": interval_union_from_dict,
    "arc-set": arc_set_from_dict,
    "topology": finite_topology_from_dict,
    "quantum-topology": quantum_topology_from_dict,
}

_SERIALIZERS = [
    (QuantumSet, quantum_set_to_dict),
    (OrthoLattice, lattice_to_dict),
    (IntervalUnion, interval_union_to_dict),
    (ArcSet, arc_set_to_dict),
    (FiniteTopology, finite_topology_to_dict),
    (QuantumTopology, quantum_topology_to_dict),
]


def serialize(value) -> dict:
    for cls, fn in _SERIALIZERS:
        if isinstance(value, cls):
            return fn(value)
    raise InputError(f"no serializer for {type(value).__name__}")


def parse_input(source: Union[str, Path, IO, dict], expected_kind: str,
                limit: int | None = None):
    """Parse a JSON document into a fully validated typed value.

    ``source`` may be a path, an open stream, or an already decoded object.
    ``limit`` bounds the closed-set enumeration behind quantum topologies.
    """
    if expected_kind not in _PARSERS:
        raise InputError(f"unknown kind {expected_kind!r}; expected one of {', '.join(KINDS)}")
    if source is None:
        raise InputError(f"a {expected_kind} input file is required")
    if isinstance(source, dict):
        payload = source
    else:
        if isinstance(source, (str, Path)):
            try:
                text = Path(source).read_text(encoding="utf-8")
            except OSError as exc:
                raise InputError(f"cannot read {source}: {exc}") from exc
        else:
            text = source.read()
        try:
            payload = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InputError(f"malformed JSON: {exc}") from exc
    if expected_kind == "quantum-topology":
        return quantum_topology_from_dict(payload, limit)
    return _PARSERS[expected_kind](payload)


# -- DOT export --------------------------------------------------------------------


def _dot_quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def export_hasse(lattice: Union[OrthoLattice, QSubsetLattice]) -> str:
    """Cover diagram in DOT text; byte-deterministic for a given lattice.

    Nodes appear in canonical element order and carry their orthocomplement
    as a ``comp`` attribute.
    """
    lat = lattice.lattice if isinstance(lattice, QSubsetLattice) else lattice
    lines = ["digraph hasse {", "  rankdir=BT;"]
    for i, label in enumerate(lat.labels):
        comp = lat.labels[lat.ortho[i]]
        lines.append(f"  n{i} [label={_dot_quote(label)} comp={_dot_quote(comp)}];")
    for i, j in lat.covers():
        lines.append(f"  n{i} -> n{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"
