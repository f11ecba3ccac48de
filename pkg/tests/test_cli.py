import json
import subprocess
import sys

import pytest

from hopfquot.cli import main

Q12 = {"M": 2, "N": 2, "unit_group": {"generators": [{"name": "q", "order": 12}]}, "Q": [[{}, {}], [{}, {"q": 1}]]}
QT = {"M": 2, "N": 2, "unit_group": {"generators": [{"name": "q", "order": None}]}, "Q": [[{}, {}], [{}, {"q": 1}]]}
Q32 = {
    "M": 3, "N": 2, "unit_group": {"generators": [{"name": "z", "order": 12}]},
    "Q": [[{}, {}], [{}, {"z": 1}], [{}, {"z": 1}]],
}


def write(tmp_path, name, obj):
    p = tmp_path / name
    p.write_text(obj if isinstance(obj, str) else json.dumps(obj))
    return str(p)


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_theta(tmp_path, capsys):
    code, out, err = run(capsys, "theta", write(tmp_path, "q.json", Q12))
    assert code == 0
    assert json.loads(out)["theta"] == [[{"q": 11}, {"q": 1}], [{"q": 1}, {"q": 11}]]
    assert "PASS" in err


def test_theta_of_all_ones(tmp_path, capsys):
    q = dict(Q12, Q=[[{}, {}], [{}, {}]])
    code, out, _ = run(capsys, "theta", write(tmp_path, "q.json", q))
    assert code == 0 and json.loads(out)["theta"] == [[{}, {}], [{}, {}]]


def test_malformed_input_gives_exit_two_and_no_output(tmp_path, capsys):
    code, out, err = run(capsys, "theta", write(tmp_path, "bad.json", '{"M": 2,'))
    assert code == 2 and out == "" and "malformed" in err
    code, out, err = run(capsys, "image", write(tmp_path, "extra.json", dict(Q12, extra=1)))
    assert code == 2 and out == "" and "schema" in err
    code, out, err = run(capsys, "image", write(tmp_path, "border.json", dict(Q12, Q=[[{}, {"q": 1}], [{}, {}]])))
    assert code == 2 and out == ""


def test_image_reports(tmp_path, capsys):
    code, out, _ = run(capsys, "image", write(tmp_path, "q.json", Q12))
    d = json.loads(out)
    assert code == 0 and d["dimension"] == 12 and d["classification"] == "B(3)"
    code, out, _ = run(capsys, "image", write(tmp_path, "t.json", QT))
    d = json.loads(out)
    assert (d["dimension"], d["classification"], d["inner_faithful"]) == ("infinite", "FULL", True)
    code, out, _ = run(capsys, "image", write(tmp_path, "c.json", Q32))
    d = json.loads(out)
    assert (d["dimension"], d["classification"], d["invariant_factors"]) == (72, "CUSTOM", [2, 6])


def test_emit_hopf_then_verify(tmp_path, capsys):
    dump = tmp_path / "hopf.json"
    code, _, _ = run(capsys, "image", write(tmp_path, "q.json", Q12), "--emit-hopf", str(dump))
    assert code == 0 and dump.exists()
    code, out, _ = run(capsys, "verify-hopf", str(dump), "--exhaustive")
    assert code == 0 and json.loads(out)["dimension"] == 12


def test_verify_hopf_detects_a_broken_dump(tmp_path, capsys):
    dump = tmp_path / "hopf.json"
    run(capsys, "examples", "B", "--m", "2", "--emit-hopf", str(dump))
    data = json.loads(dump.read_text())
    data["counit"] = [[i, v] for i, v in data["counit"]][1:]
    code, out, _ = run(capsys, "verify-hopf", write(tmp_path, "broken.json", data))
    assert code == 1 and not json.loads(out)["report"]["passed"]


def test_reports_are_byte_deterministic(tmp_path, capsys):
    path = write(tmp_path, "q.json", Q32)
    _, first, _ = run(capsys, "image", path)
    _, second, _ = run(capsys, "image", path)
    assert first == second


def test_examples(capsys):
    code, out, _ = run(capsys, "examples", "B", "--m", "2")
    d = json.loads(out)
    assert code == 0 and d["dimension"] == 8 and d["report"]["passed"]
    code, out, _ = run(capsys, "examples", "gamma33", "--alpha", "1", "--beta", "1")
    assert code == 0 and json.loads(out)["char_valued"] is True
    code, out, _ = run(capsys, "examples", "gamma33", "--alpha", "1", "--beta", "2")
    assert code == 0 and json.loads(out)["char_valued"] is False
    code, _, _ = run(capsys, "examples", "gamma33", "--alpha", "1", "--beta", "1", "--order", "5")
    assert code == 1
    code, out, err = run(capsys, "examples", "C")
    assert code == 2 and out == "" and "unknown example" in err


def test_validate_datum_names_the_failing_axiom(tmp_path, capsys):
    datum = {
        "M": 3, "N": 2, "unit_group": {"generators": [{"name": "s", "order": 2}]},
        "G": [0, 1, 2], "N_basis": [[1, 0], [0, 5]],
    }
    code, out, _ = run(capsys, "validate-datum", write(tmp_path, "d.json", datum))
    failing = [c["name"] for c in json.loads(out)["report"]["checks"] if not c["passed"]]
    assert code == 1 and failing[0].startswith("normality:")
    good = {
        "M": 2, "N": 2, "unit_group": {"generators": [{"name": "s", "order": 2}]},
        "G": [0, 1], "N_basis": [[3]], "Phi": {"gen0": {"e": {}, "h": {"s": 1}}},
    }
    code, out, _ = run(capsys, "validate-datum", write(tmp_path, "g.json", good))
    assert code == 0 and json.loads(out)["char_valued"] is True


def test_out_flag(tmp_path, capsys):
    target = tmp_path / "report.json"
    code, out, _ = run(capsys, "theta", write(tmp_path, "q.json", Q12), "--out", str(target))
    assert code == 0 and out == "" and json.loads(target.read_text())["M"] == 2


def test_module_entry_point(tmp_path):
    path = write(tmp_path, "q.json", Q12)
    proc = subprocess.run([sys.executable, "-m", "hopfquot", "theta", path], capture_output=True, text=True)
    assert proc.returncode == 0 and json.loads(proc.stdout)["N"] == 2
