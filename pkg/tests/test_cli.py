import json

import pytest

from qbx import cli
from qbx.corpus import a1, flip
from qbx.fileio import dumps


def run(capsys, *argv):
    code = cli.main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, (json.loads(out) if out.strip() else None), err


@pytest.fixture
def write(tmp_path):
    def _write(p, name="p.json"):
        path = tmp_path / name
        path.write_text(dumps(p), encoding="utf-8")
        return path
    return _write


def test_check(capsys, data_dir):
    code, doc, err = run(capsys, "check", data_dir / "a2_ones.json")
    assert code == 0 and doc["axioms"]["ok"]
    assert doc["ore"] == {"left": True, "right": True}
    assert "axioms" in err


def test_json_flag_silences_stderr(capsys, data_dir):
    code, doc, err = run(capsys, "check", data_dir / "a2_ones.json", "--json")
    assert code == 0 and err == ""


def test_out_file(capsys, data_dir, tmp_path):
    target = tmp_path / "report.json"
    code, doc, _ = run(capsys, "dual", data_dir / "a2_ones.json", "--out", target, "--json")
    assert code == 0 and doc is None
    saved = json.loads(target.read_text(encoding="utf-8"))
    assert saved["relation_count"] == 10


def test_check_reports_a1(capsys, data_dir):
    code, doc, _ = run(capsys, "check", data_dir / "a1.json", "--json")
    assert code == 0
    assert not doc["axioms"]["single_occurrence"]["ok"]
    assert doc["axioms"]["single_occurrence"]["witness"].startswith("x1x3 ")


def test_input_errors(capsys, tmp_path, write):
    bad = tmp_path / "bad.json"
    bad.write_text("{", encoding="utf-8")
    code, _, err = run(capsys, "check", bad)
    assert code == 1 and "syntax error" in err
    code, _, err = run(capsys, "check", tmp_path / "missing.json")
    assert code == 1
    code, _, err = run(capsys, "order-search", write(a1()), "--json")
    assert code == 1


def test_caps(capsys, data_dir, write):
    assert run(capsys, "check", data_dir / "a2_ones.json", "--max-n", "10")[0] == 3
    assert run(capsys, "check", data_dir / "a2_ones.json", "--max-n", "3")[0] == 3
    assert run(capsys, "hilbert", data_dir / "a2_ones.json", "--max-degree", "9")[0] == 3
    assert run(capsys, "theorem-b", data_dir / "a2_ones.json", "--hilbert-degree", "9", "--json")[0] == 3
    code, _, err = run(capsys, "check", write(flip(10)))
    assert code == 3 and "refused" in err


def test_field_option(capsys, data_dir):
    code, doc, _ = run(capsys, "ybe", data_dir / "a2_ones.json", "--field", "fp:5", "--linear", "--json")
    assert code == 0 and doc["linear_ybe"]["holds"] and "set_ybe" not in doc
    assert run(capsys, "check", data_dir / "a2_ones.json", "--field", "fp:6")[0] == 1


def test_groebner_order(capsys, data_dir):
    code, doc, _ = run(capsys, "groebner", data_dir / "non_standard.json", "--order", "1,2,3,4", "--json")
    assert code == 0 and not doc["holds"]
    assert "x4x3x1" in [f["overlap"] for f in doc["failures"]]
    code, doc, _ = run(capsys, "groebner", data_dir / "a2_ones.json", "--order", "x1,x2,x3,x4", "--json")
    assert doc["holds"] and doc["failures"] == []
    assert run(capsys, "groebner", data_dir / "a2_ones.json", "--order", "1,1,2,3", "--json")[0] == 1


def test_order_search(capsys, data_dir):
    code, doc, _ = run(capsys, "order-search", data_dir / "non_standard.json", "--json")
    assert code == 0 and doc["count"] == 0
    code, doc, _ = run(capsys, "order-search", data_dir / "set_solution_n4.json", "--json")
    assert doc["count"] > 0


def test_frobenius_and_dual(capsys, data_dir):
    code, doc, _ = run(capsys, "frobenius", data_dir / "set_solution_n4.json", "--json")
    assert code == 0 and doc["holds"] and doc["dims"][:5] == [1, 4, 6, 4, 1]


def test_socle_with_order(capsys, data_dir):
    code, doc, _ = run(capsys, "socle", data_dir / "flip5.json", "--order", "1,2,3,4,5", "--json")
    assert code == 0 and doc["regular_socle"]["holds"]
    comp = doc["complements"]
    assert len(comp) == 32
    assert comp["x1x3"] == {"right": "x2x4x5", "left": "x2x4x5"}
    assert comp["1"] == {"right": "x1x2x3x4x5", "left": "x1x2x3x4x5"}
    assert {v["right"] for v in comp.values()} == set(comp)


def test_socle_not_frobenius(capsys, data_dir):
    code, doc, _ = run(capsys, "socle", data_dir / "non_standard.json", "--json")
    assert code == 0 and doc["principal_monomial"] is None


def test_hilbert(capsys, data_dir):
    code, doc, _ = run(capsys, "hilbert", data_dir / "a2_ones.json", "--max-degree", "5", "--json")
    assert code == 0 and doc["counts"] == [1, 4, 10, 20, 35, 56] == doc["expected"]
    code, doc, _ = run(capsys, "hilbert", data_dir / "non_standard.json", "--json")
    assert code == 0 and not doc["certified"]
    code, doc, _ = run(capsys, "hilbert", data_dir / "non_standard.json", "--order", "1,2,3,4", "--json")
    assert code == 1 and not doc["certified"]


@pytest.mark.parametrize("name", ["a2_ones", "a2_signs", "a2_broken", "non_standard", "set_solution_n4", "flip5"])
def test_theorem_b_data_files(capsys, data_dir, name):
    code, doc, _ = run(capsys, "theorem-b", data_dir / ("%s.json" % name), "--json")
    assert code == 0 and doc["consistent"] and doc["conditions_agree"]


def test_theorem_b_text(capsys, data_dir):
    code, doc, err = run(capsys, "theorem-b", data_dir / "set_solution_n4.json")
    assert code == 0 and "conditions agree: yes" in err


def test_theorem_b_disagreement_exits_2(capsys, data_dir, monkeypatch):
    from qbx import report
    from qbx.yangbaxter import LinearSolutionVerdict

    monkeypatch.setattr(report, "check_linear_ybe", lambda p: LinearSolutionVerdict(False))
    code, doc, err = run(capsys, "theorem-b", data_dir / "a2_ones.json", "--json")
    assert code == 2
    assert doc["conditions_agree"] is False and doc["consistent"] is False
    assert "disagree" in err


def test_consistency_error_exits_2(capsys, data_dir, monkeypatch):
    from qbx.core import ConsistencyError

    def boom(p, args):
        raise ConsistencyError("forced")

    monkeypatch.setitem(cli.COMMANDS, "check", (boom, "forced"))
    assert run(capsys, "check", data_dir / "a2_ones.json")[0] == 2


def test_module_entry_point(data_dir):
    import subprocess
    import sys

    out = subprocess.run([sys.executable, "-m", "qbx", "dual", str(data_dir / "a2_ones.json"), "--json"],
                         capture_output=True, text=True, check=True)
    assert json.loads(out.stdout)["relation_count"] == 10
