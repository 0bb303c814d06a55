import json

import pytest

from wsdalg.cli import main
from wsdalg.report import dumps


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_matrix_json_schema_and_roundtrip(capsys):
    code, out, _ = run(capsys, "matrix", "L0", "--restrict-v", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert list(data) == ["name", "dim", "entries"]
    assert data["dim"] == 6 and data["entries"][4][0] == "-1/2"
    assert dumps(data) == out


def test_matrix_full_size(capsys):
    code, out, _ = run(capsys, "matrix", "V0", "--format", "json")
    data = json.loads(out)
    assert data["dim"] == 64 and len(data["entries"]) == 64


def test_matrix_text(capsys):
    code, out, _ = run(capsys, "matrix", "J", "--restrict-v")
    assert code == 0
    assert out.count("-2*i") == 6


def test_matrix_H0_diagonal(capsys):
    _, out, _ = run(capsys, "matrix", "H0", "--restrict-v", "--format", "json")
    e = json.loads(out)["entries"]
    assert [e[k][k] for k in range(6)] == ["-1", "-1", "0", "0", "1", "1"]


def test_matrix_errors(capsys):
    assert run(capsys, "matrix", "Nope")[0] == 2
    code, _, err = run(capsys, "matrix", "E10", "--restrict-v")
    assert code == 1 and "does not preserve V" in err


@pytest.mark.parametrize("kind", ["isotypical", "weights", "mdeg", "diagonals"])
def test_tables(capsys, kind):
    code, out, _ = run(capsys, "table", kind, "--format", "json")
    assert code == 0
    assert dumps(json.loads(out)) == out
    code, text, _ = run(capsys, "table", kind)
    assert code == 0 and text.strip()


def test_table_contents(capsys):
    _, out, _ = run(capsys, "table", "weights", "--format", "json")
    rows = json.loads(out)["rows"]
    assert rows[0] == {"operator": "L0", "weight": [2, 1, 1], "negative": "Lam0"}
    _, out, _ = run(capsys, "table", "isotypical", "--format", "json")
    assert json.loads(out)["rows"]["3"] == {"-3": 1, "-1": 9, "1": 9, "3": 1}
    _, out, _ = run(capsys, "table", "mdeg")
    assert "mdeg(L0) = (0, 1, 1)" in out


def test_closure(capsys, monkeypatch):
    code, out, _ = run(capsys, "closure", "--format", "json")
    assert code == 0 and json.loads(out)["dim"] == 35
    code, out, _ = run(capsys, "closure", "--generators", "L0,Lam0", "--format", "json")
    assert json.loads(out)["dim"] == 3
    monkeypatch.setenv("WSDALG_MAX_ROUNDS", "1")
    assert run(capsys, "closure")[0] == 1
    monkeypatch.setenv("WSDALG_MAX_ROUNDS", "many")
    assert run(capsys, "closure")[0] == 2
    monkeypatch.delenv("WSDALG_MAX_ROUNDS")
    assert run(capsys, "closure", "--generators", "L0,Q")[0] == 2


def test_usage_errors(capsys):
    for argv in ([], ["verify", "--suite", "nope"], ["table", "roots"], ["verify", "--format", "xml"]):
        with pytest.raises(SystemExit) as exc:
            main(argv)
        assert exc.value.code == 2
    capsys.readouterr()


@pytest.mark.parametrize("suite", ["clifford", "s3", "so2", "sl6", "quadratic", "cartan", "mdeg", "spans"])
def test_verify_passing_suites(capsys, suite):
    code, out, _ = run(capsys, "verify", "--suite", suite, "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["pass"] is True and data["suite"] == suite
    assert list(data) == ["suite", "checks", "summary", "pass"]
    assert all(set(c) == {"id", "anchor", "pass"} for c in data["checks"])
    assert dumps(data) == out


def test_verify_sl6_contents(capsys):
    _, out, _ = run(capsys, "verify", "--suite", "sl6", "--format", "json")
    ids = {c["id"] for c in json.loads(out)["checks"]}
    assert {"sl6/closure/dim=35", "sl6/restriction/kernel=0"} <= ids


def test_verify_all_reports_nine_suites(capsys):
    code, out, _ = run(capsys, "verify", "--format", "json")
    data = json.loads(out)
    suites = {c["id"].split("/", 1)[0] for c in data["checks"]}
    assert len(suites) == 9
    assert dumps(data) == out
    failed = [c for c in data["checks"] if not c["pass"]]
    # the exit code follows the report, whatever it says
    assert code == (0 if not failed else 1)
    for c in failed:
        assert c["witness"]


def test_verify_text_quiet(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "clifford", "-q")
    assert code == 0
    assert "PASS" not in out and "clifford: 152/152 passed" in out
