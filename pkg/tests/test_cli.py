"""Command line contract: exit codes, JSON schema, determinism."""

import json

from fiblat.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_char_both_sources_match(capsys):
    code, out, _ = run(capsys, "char", "--D", "2", "--cutoff", "4", "--source", "both")
    assert code == 0
    assert out.strip() == "MATCH"


def test_char_rejects_bad_lattice(capsys):
    code, _, err = run(capsys, "char", "--D", "1", "--cutoff", "4")
    assert code == 2
    assert "D" in err


def test_char_table_odd(capsys):
    code, out, _ = run(capsys, "char", "--D", "3", "--cutoff", "4", "--charge", "-2..2")
    assert code == 0
    rows = {line.split()[0]: line.split()[1:] for line in out.strip().splitlines()[1:]}
    assert rows["1"][0] == "1"  # coefficient at (m,d) = (1,0)


def test_char_json_schema_and_determinism(capsys):
    args = ("char", "--D", "2", "--cutoff", "4", "--format", "json", "--seed", "7")
    code1, out1, _ = run(capsys, *args)
    code2, out2, _ = run(capsys, *args)
    assert code1 == code2 == 0
    assert out1 == out2  # byte-identical reruns
    payload = json.loads(out1)
    assert payload["schema"] == 1
    assert payload["params"]["seed"] == 7
    assert payload["series"]["coeffs"] == sorted(payload["series"]["coeffs"])


def test_verify_relations_pass(capsys):
    code, out, _ = run(capsys, "verify", "--D", "2", "--suite", "relations", "--cutoff", "6")
    assert code == 0
    assert "PASS" in out


def test_verify_relations_json_entry_shape(capsys):
    code, out, _ = run(
        capsys, "verify", "--D", "3", "--suite", "relations", "--cutoff", "5",
        "--format", "json",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["passed"] is True
    assert {"relation", "charge", "mode_index", "status"} <= set(payload["entries"][0])


def test_verify_sl2(capsys):
    code, out, _ = run(capsys, "verify", "--D", "2", "--suite", "sl2", "--cutoff", "4")
    assert code == 0


def test_verify_sl2_requires_d2(capsys):
    code, _, err = run(capsys, "verify", "--D", "4", "--suite", "sl2", "--cutoff", "4")
    assert code == 2


def test_verify_annihilator(capsys):
    code, out, _ = run(
        capsys, "verify", "--D", "3", "--suite", "annihilator", "--cutoff", "5",
        "--max-charge", "2",
    )
    assert code == 0


def test_straighten_text_output(capsys):
    code, out, _ = run(capsys, "straighten", "--D", "2", "--j", "0", "--monomial", "-2,-2")
    assert code == 0
    assert out.strip() == "-2 * e[-3]e[-1]"
    code, out, _ = run(capsys, "straighten", "--D", "2", "--j", "0", "--monomial", "-1,-2")
    assert code == 0
    assert out.strip() == "0"
    code, out, _ = run(capsys, "straighten", "--D", "2", "--j", "0", "--monomial", "-3,-1")
    assert out.strip() == "1 * e[-3]e[-1]"


def test_straighten_check_and_json(capsys):
    code, out, _ = run(
        capsys, "straighten", "--D", "2", "--j", "0", "--monomial", "-2,-2",
        "--check", "--format", "json",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["schema"] == 1
    assert payload["check"] is True
    assert payload["polynomial"] == [{"indices": [-3, -1], "coeff": [-2, 1, 0, 1]}]


def test_verify_reports_failure_with_exit_one(capsys, monkeypatch):
    import fiblat.cli as cli
    from fiblat.modes import Report

    broken = Report(
        [{"relation": "e.e^(0)", "charge": 0, "mode_index": -2, "status": "fail"}]
    )
    monkeypatch.setattr(cli, "verify_relations", lambda *a, **k: broken)
    code, out, err = run(capsys, "verify", "--D", "2", "--suite", "relations")
    assert code == 1
    assert "FAIL" in out


def test_straighten_odd_case(capsys):
    code, out, _ = run(
        capsys, "straighten", "--D", "3", "--j", "0", "--monomial", "0,-2", "--check"
    )
    assert code == 0
    assert "check: OK" in out
