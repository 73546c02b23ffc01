"""Round trips, validation messages, and DOT determinism."""

import json
from fractions import Fraction

import pytest

from qsets.core import QuantumSet
from qsets.errors import InputError
from qsets.jsonio import (arc_set_from_dict, canonical_json, export_hasse,
                          interval_union_from_dict, lattice_from_dict,
                          parse_input, qsubset_lattice_report, serialize)
from qsets.lattice import benzene_lattice, boolean_lattice, mo_lattice
from qsets.projline import ArcSet
from qsets.qsubsets import enumerate_qsubsets
from qsets.realline import IntervalUnion
from qsets.topology import FiniteTopology, classical_gelfand


class TestRoundTrips:
    def test_quantum_set(self, mo2_graph):
        assert parse_input(serialize(mo2_graph), "quantum-set") == mo2_graph

    def test_empty_quantum_set(self):
        qs = QuantumSet.from_pairs([], [])
        assert parse_input(serialize(qs), "quantum-set") == qs

    def test_ortholattice(self):
        for lat in [boolean_lattice(3), benzene_lattice(), mo_lattice(4)]:
            assert parse_input(serialize(lat), "ortholattice") == lat

    def test_interval_union(self):
        u = IntervalUnion.make(Fraction(1, 2), [("-inf", -1), (0, "3/2"), (4, "inf")])
        assert parse_input(serialize(u), "interval-union") == u

    def test_arc_set(self):
        for a in [ArcSet.empty(), ArcSet.full(), ArcSet.arc("5/2", "1/3")]:
            assert parse_input(serialize(a), "arc-set") == a

    def test_topology(self):
        top = FiniteTopology.from_label_sets(
            ["a", "b", "c"], [[], ["a"], ["a", "b"], ["a", "b", "c"]])
        assert parse_input(serialize(top), "topology") == top

    def test_quantum_topology(self):
        top = classical_gelfand(2)
        assert parse_input(serialize(top), "quantum-topology") == top

    def test_bytes_stable(self, mo2_graph):
        one = canonical_json(serialize(mo2_graph))
        two = canonical_json(serialize(parse_input(json.loads(one), "quantum-set")))
        assert one == two


class TestValidation:
    def test_self_pair_named(self):
        with pytest.raises(InputError, match="self-pair"):
            parse_input({"elements": ["a"], "q_distinct": [["a", "a"]]}, "quantum-set")

    def test_unknown_kind(self):
        with pytest.raises(InputError, match="unknown kind"):
            parse_input({}, "poset")

    def test_malformed_json(self, tmp_path):
        bad = tmp_path / "bad.json"
        bad.write_text("{not json", encoding="utf-8")
        with pytest.raises(InputError, match="malformed JSON"):
            parse_input(bad, "quantum-set")

    def test_missing_file(self, tmp_path):
        with pytest.raises(InputError, match="cannot read"):
            parse_input(tmp_path / "absent.json", "quantum-set")

    def test_elements_field_cited(self):
        with pytest.raises(InputError, match="'elements'"):
            parse_input({"elements": "abc"}, "quantum-set")

    def test_lattice_requires_one_relation_form(self):
        base = {"elements": ["0", "1"], "ortho": {"0": "1"}}
        with pytest.raises(InputError, match="covers"):
            lattice_from_dict(base)
        both = dict(base, covers=[["0", "1"]], leq=[["0", "1"]])
        with pytest.raises(InputError, match="exactly one"):
            lattice_from_dict(both)

    def test_lattice_leq_accepted(self):
        payload = {"elements": ["0", "1"], "leq": [["0", "1"]], "ortho": {"0": "1"}}
        lat = lattice_from_dict(payload)
        assert lat.leq(0, 1)

    def test_interval_requires_delta(self):
        with pytest.raises(InputError, match="'delta'"):
            interval_union_from_dict({"intervals": []})

    def test_arc_kind_checked(self):
        with pytest.raises(InputError, match="'kind'"):
            arc_set_from_dict({"kind": "ray"})

    def test_duplicate_elements_rejected(self):
        with pytest.raises(InputError, match="distinct"):
            parse_input({"elements": ["a", "a"], "q_distinct": []}, "quantum-set")


class TestLatticeReport:
    def test_four_cycle_report(self, four_cycle):
        report = qsubset_lattice_report(enumerate_qsubsets(four_cycle))
        assert report["closed_sets"] == ["0000", "0101", "1010", "1111"]
        assert report["properties"] == {"atomic": False, "hereditary": True,
                                        "orthomodular": True}
        assert report["atoms"] == ["0101", "1010"]


class TestDotExport:
    def test_b2_counts(self):
        text = export_hasse(boolean_lattice(2))
        assert text.count("->") == 4
        assert text.count("label=") == 4

    def test_benzene_hexagon(self):
        text = export_hasse(benzene_lattice())
        assert text.count("->") == 6
        assert text.count("label=") == 6

    def test_qsubset_lattice_accepted(self, four_cycle):
        text = export_hasse(enumerate_qsubsets(four_cycle))
        assert text.count("label=") == 4
        assert 'comp="1010"' in text

    def test_deterministic(self):
        assert export_hasse(benzene_lattice()) == export_hasse(benzene_lattice())

    def test_frozen_bytes(self, four_cycle):
        assert export_hasse(enumerate_qsubsets(four_cycle)) == (
            'digraph hasse {\n'
            '  rankdir=BT;\n'
            '  n0 [label="0000" comp="1111"];\n'
            '  n1 [label="0101" comp="1010"];\n'
            '  n2 [label="1010" comp="0101"];\n'
            '  n3 [label="1111" comp="0000"];\n'
            '  n0 -> n1;\n'
            '  n0 -> n2;\n'
            '  n1 -> n3;\n'
            '  n2 -> n3;\n'
            '}\n')
