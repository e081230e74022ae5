import json

import pytest

from wzslab.cli_module import main
from wzslab.cli_module.acceptance import run_acceptance

def run(capsys, *argv):
    code = main(list(argv) + ["-q"])
    return code, capsys.readouterr().out

def test_atoms_report(capsys):
    code, out = run(capsys, "atoms", "--group", "3", "--weights", "pm")
    assert code == 0
    body = json.loads(out)["body"]
    assert body["atom_count"] == 8
    assert body["davenport"] == 3

def test_report_independent_of_threads(capsys):
    args = ("invariants", "--group", "3", "--length-bound", "6", "--k-max", "3")
    _, single = run(capsys, *args, "--threads", "1")
    _, many = run(capsys, *args, "--threads", "4")
    assert single == many
    delta = json.loads(single)["body"]["delta_set"]
    assert delta["value"] == [1]
    assert delta["exact"]

def test_lengths_text_format(capsys):
    code, out = run(capsys, "lengths", "--group", "5", "--weights", "id", "--seq", "[(1)^5,(4)^5]", "--format", "text")
    assert code == 0
    assert "lengths: [2, 5]" in out

def test_qform_check(capsys):
    code, out = run(capsys, "qform", "check", "--disc", "-23", "--n", "8")
    assert code == 0
    body = json.loads(out)["body"]
    assert body["verdict"] == "represented"
    assert body["transfer_verdict"] is True

def test_qform_sweep_to_csv(capsys, tmp_path):
    target = tmp_path / "sweep.csv"
    code, out = run(capsys, "qform", "sweep", "--disc", "-23", "--max-n", "30", "--format", "csv", "--out", str(target))
    assert code == 0
    assert out == ""
    lines = target.read_text(encoding="utf-8").splitlines()
    assert lines[0] == "n,prime_signature,transfer_verdict,bruteforce_verdict,lengths_monoid,lengths_sequences"
    assert lines[1].startswith("1,1,true,true")

def test_cap_exceeded_exit_code(capsys):
    code, out = run(capsys, "atoms", "--group", "8,16")
    assert code == 2
    assert out == ""

def test_parse_error_exit_code(capsys):
    code, _ = run(capsys, "lengths", "--group", "5", "--seq", "[(1)")
    assert code == 1

def test_bad_discriminant(capsys):
    code, _ = run(capsys, "qform", "classgroup", "--disc", "-5")
    assert code == 1

def test_usage_errors(capsys):
    with pytest.raises(SystemExit) as info:
        main(["atoms", "--weights", "all"])
    assert info.value.code == 1
    assert main([]) == 1
    assert main(["qform"]) == 1

def test_unknown_acceptance_id(capsys):
    code, _ = run(capsys, "acceptance", "--only", "A99-nothing")
    assert code == 1

def test_acceptance_subset(capsys):
    code, out = run(capsys, "acceptance", "--only", "A05-seminormal", "--only", "A07-class-semigroup")
    assert code == 0
    report = json.loads(out)
    assert report["body"] == {"total": 2, "passed": 2, "failed": []}
    assert [row["id"] for row in report["rows"]] == ["A05-seminormal", "A07-class-semigroup"]

def test_run_acceptance_directly():
    report, passed = run_acceptance(only=["A05-seminormal"], threads=2)
    assert passed
    assert report["rows"][0]["passed"]
