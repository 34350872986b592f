import json
import subprocess
import sys

import pytest

from severi_lab.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_series_phi(capsys):
    code, out, _ = run(capsys, "series", "phi", "--precision", "3")
    assert code == 0
    assert out.split() == ["0", "-1", "1", "24", "2", "73512", "3", "3621216"]


def test_series_json_envelope(capsys):
    code, out, _ = run(capsys, "series", "E4", "--precision", "1", "--format", "json")
    doc = json.loads(out)
    assert code == 0
    assert set(doc) == {"tool_version", "config", "results"}
    assert doc["results"][0]["coeffs"] == ["1", "240"]


def test_series_csv_psi_sec(capsys):
    code, out, _ = run(capsys, "series", "psi_sec", "--precision", "2", "--format", "csv")
    assert out.splitlines() == ["n,coefficient", "0,0", "1,0", "2,73752"]


def test_series_rationals_are_exact(capsys):
    code, out, _ = run(capsys, "series", "deg_wei", "--precision", "2", "--format", "csv")
    assert "-1/2" in out and "e" not in out.replace("coefficient", "")


def test_unknown_series_is_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["series", "E10"])
    assert exc.value.code == 2


def test_e8_queries(capsys):
    assert run(capsys, "e8", "count", "--norm", "4")[1] == "2160\n"
    assert run(capsys, "e8", "classes")[1] == "1/120/135\n"
    assert run(capsys, "e8", "pairs", "--w", "root", "--m", "3")[1] == "28\n"
    assert run(capsys, "e8", "orbit", "--seed", "root")[1] == "240\n"


def test_norm_above_cap_refused(capsys):
    code, out, err = run(capsys, "e8", "count", "--norm", "62")
    assert code == 2 and out == ""
    assert "cap 60" in err
    code, _, err = run(capsys, "e8", "pairs", "--w", "zero", "--m", "12", "--norm-cap", "20")
    assert code == 2 and "cap 20" in err


def test_odd_norm_cap_rejected(capsys):
    assert run(capsys, "e8", "classes", "--norm-cap", "61")[0] == 2


def test_degrees_table(capsys):
    code, out, _ = run(capsys, "degrees", "--g-max", "2", "--format", "csv")
    lines = out.splitlines()
    assert lines[0] == "g,type,degree,simple,nonsimple_m1,nonsimple_m2,bound,genus_bound"
    assert "0,ordinary,4,8,0,,8,21" in lines
    assert "1,ordinary,40,28,12,,134,8778" in lines
    assert any(line.startswith("2,weierstrass,198,") for line in lines)


def test_degrees_needs_precision(capsys):
    assert run(capsys, "degrees", "--g-max", "10", "--precision", "11")[0] == 2


def test_verify_pass_and_exit_code(capsys):
    code, out, _ = run(capsys, "verify", "ramanujan", "--precision", "200")
    assert code == 0 and out.startswith("PASS ramanujan")


def test_verify_phi_decomposition(capsys):
    code, out, _ = run(capsys, "verify", "phi_decomposition", "--precision", "100", "--format", "json")
    assert code == 0
    assert json.loads(out)["results"][0]["passed"] is True


def test_verify_failure_exit_code(capsys, monkeypatch):
    from severi_lab import suite
    from severi_lab.report import CheckReport

    monkeypatch.setitem(
        suite.CHECKS, "ramanujan",
        lambda p, c: [CheckReport.from_discrepancy("ramanujan", p, (3, 1, 2))],
    )
    code, out, _ = run(capsys, "verify", "ramanujan")
    assert code == 1
    assert "first discrepancy at 3" in out


def test_verify_usage_errors(capsys):
    assert run(capsys, "verify", "nonsense")[0] == 2
    assert run(capsys, "verify", "ramanujan", "--precision", "7")[0] == 2


def test_out_path(tmp_path, capsys):
    target = tmp_path / "e2.json"
    code, out, _ = run(capsys, "series", "E2", "--precision", "2", "--format", "json", "--out", str(target))
    assert code == 0 and out == ""
    assert json.loads(target.read_text())["results"][0]["coeffs"] == ["1", "-24", "-72"]


def test_seed_table(capsys):
    code, out, _ = run(capsys, "--seed-table", "--format", "json")
    rows = json.loads(out)["results"]
    assert code == 0
    assert all(r["match"] for r in rows)
    assert "§" not in out


def test_no_verb_is_usage_error(capsys):
    assert run(capsys)[0] == 2


def test_output_independent_of_thread_count():
    args = [sys.executable, "-m", "severi_lab", "verify", "class_uniformity", "theta_e4",
            "--format", "json", "--norm-cap", "30"]
    a = subprocess.run(args + ["--threads", "1"], capture_output=True, text=True)
    b = subprocess.run(args + ["--threads", "auto"], capture_output=True, text=True)
    assert a.returncode == b.returncode == 0
    strip = lambda s: {k: v for k, v in json.loads(s).items() if k != "config"}
    assert strip(a.stdout) == strip(b.stdout)
