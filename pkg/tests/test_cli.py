"""Command-line surface: outputs, exit codes, determinism."""

import json

import pytest

from qsets.cli import main


def write_json(path, payload):
    path.write_text(json.dumps(payload), encoding="utf-8")
    return str(path)


@pytest.fixture
def mo2_file(tmp_path):
    return write_json(tmp_path / "mo2.json", {
        "elements": ["a", "a'", "b", "b'"],
        "q_distinct": [["a", "a'"], ["b", "b'"]],
    })


@pytest.fixture
def benzene_file(tmp_path):
    return write_json(tmp_path / "o6.json", {
        "elements": ["0", "a", "b", "b'", "a'", "1"],
        "covers": [["0", "a"], ["a", "b"], ["b", "1"],
                   ["0", "b'"], ["b'", "a'"], ["a'", "1"]],
        "ortho": {"0": "1", "a": "a'", "b": "b'"},
    })


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestAnalyze:
    def test_mo2(self, capsys, mo2_file):
        code, out, _ = run_cli(capsys, "analyze", mo2_file)
        payload = json.loads(out)
        assert code == 0
        assert payload["elements"] == 4
        assert payload["qsubsets"] == 6
        assert payload["hereditary"] is True
        assert payload["orthomodular"] is True
        assert payload["qcentral"] == ["0000", "1111"]

    def test_bad_file_exit_2(self, capsys, tmp_path):
        bad = write_json(tmp_path / "bad.json", {"elements": ["a"], "q_distinct": [["a", "a"]]})
        code, _, err = run_cli(capsys, "analyze", bad)
        assert code == 2
        assert "self-pair" in err


class TestLattice:
    def test_report(self, capsys, mo2_file):
        code, out, _ = run_cli(capsys, "lattice", mo2_file)
        payload = json.loads(out)
        assert code == 0
        assert len(payload["closed_sets"]) == 6
        assert payload["properties"]["orthomodular"] is True

    def test_dot(self, capsys, mo2_file, tmp_path):
        target = tmp_path / "mo2.dot"
        code, out, _ = run_cli(capsys, "lattice", mo2_file, "--dot", str(target))
        assert code == 0
        text = target.read_text(encoding="utf-8")
        assert text.startswith("digraph hasse {")
        assert text.count("->") == 8

    def test_limit_exit_2(self, capsys, tmp_path):
        classical = write_json(tmp_path / "cl.json", {
            "elements": ["x", "y", "z"],
            "q_distinct": [["x", "y"], ["x", "z"], ["y", "z"]],
        })
        code, _, err = run_cli(capsys, "--limit", "4", "lattice", classical)
        assert code == 2
        assert "limit" in err


class TestCheck:
    def test_benzene(self, capsys, benzene_file):
        code, out, _ = run_cli(capsys, "check", benzene_file)
        payload = json.loads(out)
        assert code == 0
        assert payload["ortholattice"] is True
        assert payload["orthomodular"] is False
        assert payload["orthomodular_witness"] == ["a", "b"]
        assert payload["atomic"] is True and payload["atomistic"] is False

    def test_broken_lattice_exit_1(self, capsys, tmp_path):
        broken = write_json(tmp_path / "broken.json", {
            "elements": ["0", "a", "a'", "1"],
            "covers": [["0", "a"], ["0", "a'"], ["a", "1"], ["a'", "1"]],
            "ortho": {"0": "1", "a": "a", "a'": "a'"},
        })
        code, out, _ = run_cli(capsys, "check", broken)
        payload = json.loads(out)
        assert code == 1
        assert payload["axiom"] == "complement-meet"


class TestComplete:
    def test_benzene_completes_to_itself(self, capsys, benzene_file):
        code, out, _ = run_cli(capsys, "complete", benzene_file)
        payload = json.loads(out)
        assert code == 0
        assert payload["downset_iso"] is True
        assert payload["qsubsets_of_star"] == 6


class TestInterval:
    def test_qcomp_golden(self, capsys, tmp_path):
        src = write_json(tmp_path / "u.json",
                         {"delta": "1", "intervals": [["0", "1/2"]]})
        code, out, _ = run_cli(capsys, "interval", "qcomp", src)
        assert code == 0
        assert json.loads(out) == {"delta": "1",
                                   "intervals": [["-inf", "-1"], ["3/2", "inf"]]}

    def test_isq1_exit_codes(self, capsys, tmp_path):
        closed = write_json(tmp_path / "closed.json",
                            {"delta": "1", "intervals": [["0", "1"], ["3", "4"]]})
        open_ = write_json(tmp_path / "open.json",
                           {"delta": "1", "intervals": [["0", "1"], ["5/2", "3"]]})
        assert run_cli(capsys, "interval", "isq1", closed)[0] == 0
        assert run_cli(capsys, "interval", "isq1", open_)[0] == 1

    def test_relclosure_golden(self, capsys, tmp_path):
        t = write_json(tmp_path / "t.json", {"delta": "1", "intervals": [["0", "1"]]})
        s = write_json(tmp_path / "s.json", {"delta": "1", "intervals": [["0", "1/2"]]})
        code, out, _ = run_cli(capsys, "interval", "relclosure", t, s)
        assert code == 0
        assert json.loads(out) == {"delta": "1", "intervals": [["0", "1"]]}


class TestArc:
    def test_qcomp_golden(self, capsys, tmp_path):
        src = write_json(tmp_path / "a.json",
                         {"kind": "arc", "start": "0", "length": "0"})
        code, out, _ = run_cli(capsys, "arc", "qcomp", src)
        assert code == 0
        assert json.loads(out) == {"kind": "arc", "start": "1", "length": "1"}

    def test_closure_points(self, capsys):
        code, out, _ = run_cli(capsys, "arc", "closure", "--points", "0,3/2")
        assert code == 0
        assert json.loads(out) == {"kind": "full"}

    def test_qcommutes(self, capsys, tmp_path):
        s = write_json(tmp_path / "s.json", {"kind": "arc", "start": "0", "length": "1"})
        t = write_json(tmp_path / "t.json", {"kind": "arc", "start": "1/2", "length": "1"})
        code, out, _ = run_cli(capsys, "arc", "qcommutes", s, t)
        assert code == 0
        assert json.loads(out) == {"qcommutes": True}


class TestTopology:
    def test_regopen(self, capsys, tmp_path):
        src = write_json(tmp_path / "top.json", {
            "points": ["a", "b", "c"],
            "opens": [[], ["a"], ["b"], ["a", "b"], ["a", "b", "c"]],
        })
        code, out, _ = run_cli(capsys, "topology", "regopen", src)
        payload = json.loads(out)
        assert code == 0
        assert payload["verdicts"] == {"ortholattice": True, "orthomodular": True,
                                       "distributive": True}
        assert len(payload["elements"]) == 4

    def test_gelfand(self, capsys):
        code, out, _ = run_cli(capsys, "topology", "gelfand", "-n", "2")
        payload = json.loads(out)
        assert code == 0
        assert len(payload["closed_family"]) == 4

    def test_verify(self, capsys, tmp_path):
        src = write_json(tmp_path / "qtop.json", {
            "quantum_set": {"elements": ["a", "a'", "b", "b'"],
                            "q_distinct": [["a", "a'"], ["b", "b'"]]},
            "closed_family": ["0000", "1000", "0010", "1111"],
        })
        code, out, _ = run_cli(capsys, "topology", "verify", src)
        assert code == 0
        assert json.loads(out)["quantum_topology"] is True


class TestCorpus:
    def test_small_suite_deterministic(self, capsys):
        code1, out1, err1 = run_cli(capsys, "corpus", "--suites",
                                    "exhaustive-4,examples", "--seed", "9")
        code2, out2, _ = run_cli(capsys, "corpus", "--suites",
                                 "exhaustive-4,examples", "--seed", "9")
        assert code1 == code2 == 0
        assert out1 == out2
        payload = json.loads(out1)
        assert payload["format"] == "qsets-report/1"
        assert payload["status"] == 0
        assert "total" in err1

    def test_unknown_suite_exit_2(self, capsys):
        code, _, err = run_cli(capsys, "corpus", "--suites", "nope")
        assert code == 2
        assert "unknown suite" in err

    def test_report_file(self, capsys, tmp_path):
        target = tmp_path / "report.json"
        code, out, _ = run_cli(capsys, "corpus", "--suites", "examples",
                               "--out", str(target))
        assert code == 0
        assert out == ""
        assert json.loads(target.read_text())["status"] == 0
