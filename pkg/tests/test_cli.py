import json

import pytest

from caynorm.cli import main, parse_element, parse_group
from caynorm.groups import GroupSpec


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_parse_group():
    assert parse_group("cyclic:12") == GroupSpec.cyclic(12)
    assert parse_group("dihedral:6") == GroupSpec.dihedral(6)


def test_parse_group_errors():
    from caynorm.cli import UsageError

    for bad in ("cyclic", "sym:3", "dihedral:1", "cyclic:0"):
        with pytest.raises(UsageError):
            parse_group(bad)


def test_parse_symbolic_elements():
    d12 = GroupSpec.dihedral(6)
    assert parse_element("1", d12, True) == 0
    assert parse_element("a", d12, True) == 1
    assert parse_element("a^-1", d12, True) == 5
    assert parse_element("b", d12, True) == 6
    assert parse_element("a^3*b", d12, True) == 9
    assert parse_element("a^3b", d12, True) == 9
    c9 = GroupSpec.cyclic(9)
    assert parse_element("a^4", c9, True) == 4


def test_parse_symbolic_errors():
    from caynorm.cli import UsageError

    with pytest.raises(UsageError):
        parse_element("b", GroupSpec.cyclic(9), True)
    with pytest.raises(UsageError):
        parse_element("c^2", GroupSpec.cyclic(9), True)
    with pytest.raises(UsageError):
        parse_element("9", GroupSpec.cyclic(9), False)


def test_classify_command(capsys):
    code, out, _ = run(capsys, "classify", "--group", "dihedral:6", "--set", "1,5,6,9")
    assert code == 0
    record = json.loads(out)
    assert record["nnn"] is True
    assert record["set"] == [1, 5, 6, 9]


def test_classify_symbolic_matches_codes(capsys):
    _, out_codes, _ = run(capsys, "classify", "--group", "dihedral:6", "--set", "1,5,6,9")
    _, out_sym, _ = run(
        capsys, "classify", "--group", "dihedral:6", "--set", "a,a^-1,b,a^3*b", "--symbolic"
    )
    assert out_codes == out_sym


def test_classify_rejects_identity(capsys):
    code, _, err = run(capsys, "classify", "--group", "cyclic:5", "--set", "0,1")
    assert code == 2
    assert "identity" in err


def test_aut_command(capsys):
    code, out, _ = run(capsys, "aut", "--group", "cyclic:6", "--set", "1,5")
    assert code == 0
    data = json.loads(out)
    assert data["order"] == 12
    assert all(len(g) == 6 for g in data["generators"])


def test_construct_command(capsys):
    code, out, _ = run(capsys, "construct", "--n", "6")
    assert code == 0
    payload = json.loads(out)
    assert payload["set"] == [1, 5, 6, 9]
    assert payload["classification"]["nnn"] is True
    assert len(payload["witness_generators"]) == 2


def test_construct_rejects_excluded_parameter(capsys):
    code, _, err = run(capsys, "construct", "--n", "8")
    assert code == 2
    assert "n != 8" in err
    code, _, _ = run(capsys, "construct", "--n", "7")
    assert code == 2


def test_sweep_command(tmp_path, capsys):
    out_path = tmp_path / "c5.jsonl"
    code, _, _ = run(capsys, "sweep", "--group", "cyclic:5", "--out", str(out_path))
    assert code == 0
    lines = out_path.read_text().strip().split("\n")
    assert len(lines) == 17
    summary = json.loads(lines[-1])
    assert summary["records"] == 16 and summary["nnn"] == 0
    first = json.loads(lines[0])
    assert first["set"] == [] and first["group"] == "cyclic" and first["n"] == 5


def test_sweep_graph_mode(tmp_path, capsys):
    out_path = tmp_path / "c6g.jsonl"
    code, _, _ = run(capsys, "sweep", "--group", "cyclic:6", "--mode", "graph", "--out", str(out_path))
    assert code == 0
    records = [json.loads(line) for line in out_path.read_text().strip().split("\n")][:-1]
    assert all(r["graph"] for r in records)


def test_verify_theorem1(capsys):
    code, out, _ = run(capsys, "verify", "--theorem", "1", "--max-n", "6")
    assert code == 0
    assert "VERIFIED" in out


def test_verify_theorem2(capsys):
    code, out, _ = run(capsys, "verify", "--theorem", "2", "--max-n", "4")
    assert code == 0
    assert "VERIFIED" in out


@pytest.mark.slow
def test_verify_theorem2_through_first_nnn(capsys):
    # includes n = 6, where an NNN graph must be found for the run to verify
    code, out, _ = run(capsys, "verify", "--theorem", "2", "--max-n", "6", "--jobs", "2")
    assert code == 0
    assert "NNN found=True, expected=True" in out
    assert "VERIFIED" in out


def test_verify_rejects_oversized_range(capsys):
    code, _, err = run(capsys, "verify", "--theorem", "1", "--max-n", "20")
    assert code == 2
    assert "capped" in err


def test_usage_error_exit_code(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["classify", "--group", "cyclic:5"])
    assert exc.value.code == 2


def test_record_round_trip(capsys):
    _, out, _ = run(capsys, "classify", "--group", "cyclic:8", "--set", "1,2")
    record = json.loads(out)
    keys = list(record)
    assert keys == [
        "group",
        "n",
        "set",
        "connected",
        "graph",
        "aut_order",
        "normal",
        "regular_subgroups",
        "nonnormal_regular",
        "nnn",
        "ci",
    ]
