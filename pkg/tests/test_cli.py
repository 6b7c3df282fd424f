from __future__ import annotations

import json

import pytest

from ddf import bisets, characterize, oracle
from ddf.cli import main

WORKED = {"n": 4, "m_o": [2, 2, 2, 3], "m_i": [2, 2, 2, 3], "k": 2}
# x, y, z, v = 0, 1, 2, 3
WORKED_ARCS = [[0, 3], [3, 0], [1, 3], [3, 1], [2, 3], [3, 2], [0, 1], [1, 2], [2, 0]]


@pytest.fixture
def write(tmp_path):
    def _write(name: str, payload) -> str:
        path = tmp_path / name
        path.write_text(payload if isinstance(payload, str) else json.dumps(payload))
        return str(path)

    return _write


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, json.loads(out) if out.strip() else None


def test_kseq_worked_example_feasible(capsys, write):
    code, out = run(capsys, "check", write("w.json", WORKED), "--theorem", "kseq")
    assert code == 0
    assert out["schema"] == "ddf-1" and out["result"]["feasible"] is True
    assert out["config"]["theorem"] == "kseq"


def test_kseq_single_node_certificate_and_recheck(capsys, write):
    inst = write("one.json", {"n": 1, "m_o": [1], "m_i": [1], "k": 1})
    code, out = run(capsys, "check", inst, "--theorem", "kseq")
    assert code == 1
    assert out["result"]["certificate"] == {"X": [0], "Z": [0]}
    cert = write("cert.json", out)
    code, out = run(capsys, "check", inst, "--theorem", "kseq", "--recheck-certificate", cert)
    assert code == 0 and out["result"]["recheck"] == "violation confirmed"


def test_forged_certificate_rejected(capsys, write):
    inst = write("one.json", {"n": 1, "m_o": [1], "m_i": [1], "k": 1})
    fake = write("fake.json", {"feasible": False, "condition": "simple", "certificate": {"X": [], "Z": [0]}, "lhs": 5, "rhs": 1})
    code, out = run(capsys, "check", inst, "--theorem", "kseq", "--recheck-certificate", fake)
    assert code == 1 and out["result"]["recheck"] == "rejected"


def test_check_recheck_roundtrip_for_each_checker(capsys, write):
    cases = [
        ("strong", {"m_o": [3, 0, 0, 0], "m_i": [0, 1, 1, 1]}),
        ("simple", {"m_o": [2, 0], "m_i": [1, 1]}),
        ("edge-multi", {"n": 3, "arcs": [], "m_o": [1, 1, 0], "m_i": [1, 1, 0], "k": 1}),
        ("node-multi", {"n": 3, "arcs": [], "m_o": [1, 1, 0], "m_i": [0, 1, 1], "k": 1}),
        ("strong-augment", {"n": 2, "arcs": [[0, 1]], "m_o": [0, 0], "m_i": [0, 0]}),
        ("node-simple", {"n": 3, "arcs": [[0, 1], [1, 2]], "m_o": [1, 0, 0], "m_i": [0, 1, 0], "k": 1}),
        ("cover", {"m_o": [1, 0, 0], "m_i": [0, 1, 0], "family": [[2]]}),
    ]
    for theorem, payload in cases:
        inst = write(f"{theorem}.json", payload)
        code, out = run(capsys, "check", inst, "--theorem", theorem)
        assert code == 1, theorem
        cert = write(f"{theorem}-cert.json", out)
        code, out = run(capsys, "check", inst, "--theorem", theorem, "--recheck-certificate", cert)
        assert code == 0, (theorem, out)


def test_witness_then_verify(capsys, write):
    code, out = run(capsys, "witness", write("w.json", WORKED))
    assert code == 0
    code, report = run(capsys, "verify", write("wit.json", out))
    assert code == 0 and report["result"]["verified"] and report["result"]["fits_spec"]


def test_verify_worked_arc_set(capsys, write):
    payload = {"n": 4, "arcs": [], "augmenting_arcs": WORKED_ARCS, **WORKED}
    code, out = run(capsys, "verify", write("v.json", payload))
    res = out["result"]
    assert code == 0
    assert res["simple"] and res["fits_spec"] and res["k_node"] == 2


def test_verify_reports_separator(capsys, write):
    payload = {"n": 3, "arcs": [[0, 1], [1, 2], [2, 0]], "k": 2}
    code, out = run(capsys, "verify", write("c.json", payload))
    assert code == 1 and len(out["result"]["witnesses"]["separator"]) == 1


def test_malformed_json_exit_2(capsys, write):
    bad = write("bad.json", '{"n": 3,\n "m_o": [1, }')
    code = main(["check", bad, "--theorem", "kseq"])
    captured = capsys.readouterr()
    assert code == 2
    assert "line 2" in captured.err and "column" in captured.err


def test_unknown_flag_exit_2(capsys, write):
    with pytest.raises(SystemExit) as exc:
        main(["check", write("w.json", WORKED), "--theorem", "kseq", "--bogus"])
    assert exc.value.code == 2


def test_oracle_grid_kseq(capsys):
    code, out = run(capsys, "oracle", "--grid", "kseq-n4")
    assert code == 0 and out["result"]["disagreements"] == []


def test_oracle_single_instance(capsys, write):
    code, out = run(capsys, "oracle", "--instance", write("w.json", WORKED))
    assert code == 0 and out["result"]["feasible"]


def test_realize_variants(capsys, write):
    inst = write("r.json", {"m_o": [2, 1, 0], "m_i": [1, 1, 1]})
    assert run(capsys, "realize", inst, "--simple")[0] == 0
    assert run(capsys, "realize", inst, "--loopless")[0] == 0
    assert run(capsys, "realize", inst, "--any")[0] == 0
    host = write("h.json", {"n": 3, "arcs": [[0, 1]]})
    code, out = run(capsys, "realize", inst, "--host", host)
    assert code == 1 and out["result"]["condition"] == "ore"


def test_augment_verb(capsys, write):
    code, out = run(capsys, "augment", write("w.json", WORKED), "--mode", "node")
    assert code == 0 and out["result"]["feasible"]


def test_bigraph_verbs(capsys, write):
    d = write("d.json", {"n": 3, "arcs": [[0, 1], [1, 2], [2, 0]]})
    code, big = run(capsys, "bigraph", d, "--from-digraph")
    assert code == 0
    code, back = run(capsys, "bigraph", write("b.json", big["result"]), "--to-digraph")
    assert code == 0 and sorted(back["result"]["arcs"]) == [[0, 1], [1, 2], [2, 0]]
    code, _ = run(capsys, "bigraph", write("b2.json", {**big["result"], "k": 1}), "--check-k-elementary")
    assert code == 0
    sides = write("s.json", {"m_S": [2, 2, 2], "m_T": [2, 2, 2], "k": 1})
    code, out = run(capsys, "bigraph", sides, "--realize-degrees")
    assert code == 0 and "matching" in out["result"]["witness"]
    code, out = run(capsys, "check", sides, "--theorem", "kelem")
    assert code == 0


def test_cap_warns(capsys, write, monkeypatch):
    for mod, name in [(bisets, "FAMILY_SEARCH_CAP"), (characterize, "PAIR_SCAN_CAP"),
                      (characterize, "DISJOINT_SCAN_CAP"), (oracle, "SIMPLE_CAP"), (oracle, "MULTI_CAP")]:
        monkeypatch.setattr(mod, name, getattr(mod, name))
    code = main(["--cap", "7", "check", write("w.json", WORKED), "--theorem", "strong"])
    captured = capsys.readouterr()
    assert code == 0 and "warning" in captured.err
