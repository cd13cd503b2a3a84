from __future__ import annotations

import csv
import io
import json
import subprocess
import sys

import pytest

from dihedralcovers.cli import RunConfig, UsageError, main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_verify_table_text(capsys):
    code, out, _ = run(capsys, "verify", "dihedral-table", "--format", "text")
    assert code == 0
    assert "(25)(36)(47)  (1537462)  yes" in out
    assert out.rstrip().endswith("status: pass")


def test_verify_count_json(capsys):
    code, out, _ = run(capsys, "--format", "json", "verify", "count-400")
    doc = json.loads(out)
    assert code == 0
    assert set(doc) == {"tool_version", "config", "checks", "status"}
    check = next(c for c in doc["checks"] if c["name"] == "classes(7,6)")
    assert check["expected"] == check["computed"] == "400"
    assert check["source"] == "literature"
    assert "runtime_s" not in check


def test_timings_opt_in(capsys):
    _, out, _ = run(capsys, "verify", "field", "--timings")
    assert all("runtime_s" in c for c in json.loads(out)["checks"])


def test_enumerate(capsys):
    code, out, _ = run(capsys, "enumerate", "--prime", "7", "--branch", "6")
    res = json.loads(out)["results"]
    assert code == 0
    assert res["class_count"] == "400"
    assert res["orbit_size_histogram"] == {"42": "400"}
    assert len(res["representatives"]) == 400


def test_enumerate_small(capsys):
    _, out, _ = run(capsys, "enumerate", "--prime", "3", "--branch", "6", "--format", "csv")
    rows = dict(r for r in csv.reader(io.StringIO(out)) if len(r) == 2)
    assert rows["class_count"] == "40"
    _, out, _ = run(capsys, "enumerate", "--prime", "7", "--branch", "2")
    assert json.loads(out)["results"]["class_count"] == "0"


def test_budget_exit_codes(capsys):
    code, _, err = run(capsys, "enumerate", "--prime", "7", "--branch", "8", "--budget", "100")
    assert code == 2 and "budget" in err
    code, out, _ = run(capsys, "enumerate", "--prime", "7", "--branch", "8", "--budget", "100",
                       "--allow-conjectural")
    res = json.loads(out)["results"]
    assert code == 0 and res["mode"].startswith("conjectural")
    assert res["class_count"] == str((7 ** 7 - 7) // 42)


@pytest.mark.parametrize("argv", [
    ["enumerate", "--prime", "9", "--branch", "6"],
    ["enumerate", "--prime", "7", "--branch", "5"],
    ["enumerate", "--prime", "37", "--branch", "4"],
    ["field", "solve-det", "--height", "-1"],
    ["verify", "nonsense"],
])
def test_usage_errors(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_argparse_error_exit():
    with pytest.raises(SystemExit) as exc:
        main(["field", "bogus"])
    assert exc.value.code == 2


def test_field_solve_det(capsys):
    code, out, _ = run(capsys, "field", "solve-det", "--height", "1")
    doc = json.loads(out)
    assert code == 0
    assert "(0,1,0)" in [s["phi"] for s in doc["results"]["solutions"]]
    assert all(s["norm_embeddings"] == "7" for s in doc["results"]["solutions"])


def test_field_polarizations(capsys):
    _, out, _ = run(capsys, "field", "classify-polarizations", "--height", "2")
    mats = json.loads(out)["results"]["matrices"]
    prym = [m for m in mats if m["matrix"] == "[[(2,0,0),(0,1,0)],[(0,1,0),(2,0,0)]]"]
    assert prym and prym[0]["prym_shape"] is True


def test_field_idempotents(capsys):
    code, out, _ = run(capsys, "field", "idempotent-roundtrip", "--seed", "1", "--samples", "100")
    assert code == 0
    assert json.loads(out)["results"]["summary"] == "100/100 conjugated and verified"


def test_out_file(tmp_path, capsys):
    path = tmp_path / "r.json"
    assert main(["verify", "field", "--out", str(path)]) == 0
    assert capsys.readouterr().out == ""
    assert json.loads(path.read_text())["status"] == "pass"


def test_failing_check_exit_code(monkeypatch, capsys):
    import dihedralcovers.suites as suites
    monkeypatch.setattr(suites, "REFERENCE_DIHEDRAL_ROWS", (1, 2, 3))
    code, out, _ = run(capsys, "verify", "dihedral-table")
    assert code == 1 and json.loads(out)["status"] == "fail"


def test_threads_byte_identical(capsys):
    _, one, _ = run(capsys, "verify", "count-400", "--threads", "1")
    _, eight, _ = run(capsys, "--threads", "8", "verify", "count-400")
    assert one == eight


def test_runconfig_validation():
    RunConfig("enumerate", prime=31, branch_count=10)
    with pytest.raises(UsageError):
        RunConfig("enumerate", branch_count=12)
    with pytest.raises(UsageError):
        RunConfig("enumerate", budget=0)


def test_module_entry_point():
    out = subprocess.run([sys.executable, "-m", "dihedralcovers", "verify", "field",
                          "--format", "csv"], capture_output=True, text=True)
    assert out.returncode == 0
    assert out.stdout.strip().splitlines()[-1] == "status,pass"
