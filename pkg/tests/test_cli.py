import json
import subprocess
import sys
import time

import pytest

from entprime import tables
from entprime.cli import main
from entprime.numtheory import is_prime, sieve_classify


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_osc_csv_prime_rows_have_neg_inf_gap(capsys):
    code, out, _ = run(capsys, "osc-coeffs", "--u", "1", "--n-max", "40")
    assert code == 0
    rows = tables.read_csv(out)
    assert [r["n"] for r in rows] == list(range(1, 41))
    assert out.splitlines()[0].split(",") == tables.OSC_COLUMNS
    for r in rows:
        if r["kind"] == "Prime":
            assert r["log10_gap"] == "-inf"
            assert r["log10_c_n"] == r["log10_prime_bound"]
        assert (r["log10_f2_curve"] is None) == (r["n"] % 2 == 1)
        assert (r["log10_f3_curve"] is None) == (r["n"] % 3 != 0)
    assert rows[0]["log10_gap"] is None


def test_csv_json_equal(capsys, tmp_path):
    csv_path, json_path = tmp_path / "a.csv", tmp_path / "a.json"
    assert main(["osc-coeffs", "--n-max", "60", "--out", str(csv_path)]) == 0
    assert main(["osc-coeffs", "--n-max", "60", "--format", "json", "--out", str(json_path)]) == 0
    from_csv = tables.read_csv(csv_path.read_text())
    meta, from_json = tables.read_json(json_path.read_text())
    assert set(meta) >= {"system", "u", "omega", "tolerances", "artifact_version"}
    assert len(from_csv) == len(from_json)
    for a, b in zip(from_csv, from_json):
        for col in tables.OSC_COLUMNS:
            assert tables.same_value(a[col], b[col]), (a["n"], col)


def test_json_round_trip_classification(capsys):
    _, out, _ = run(capsys, "osc-coeffs", "--format", "json", "--n-max", "80")
    _, rows = tables.read_json(out)
    for r in rows:
        ref = sieve_classify(r["n"])
        assert r["kind"] == ref.kind.value
        assert r["families"] == ref.families_str()


def test_deterministic_bytes(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    for path in (a, b):
        assert main(["spin-coeffs", "--two-s", "6", "--format", "json", "--out", str(path)]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_spin_table_half(capsys):
    code, out, _ = run(capsys, "spin-coeffs", "--two-s", "1")
    assert code == 0
    rows = tables.read_csv(out)
    assert [r["n"] for r in rows] == list(range(2, 12))
    assert all(r["log10_cbar"] == "-inf" for r in rows)


def test_spin_table_regions(capsys):
    _, out, _ = run(capsys, "spin-coeffs", "--two-s", "12", "--u", "1")
    rows = tables.read_csv(out)
    assert rows[-1]["n"] == 12**2 + 10
    for r in rows:
        if r["region"] in ("I", "II"):
            want = "Prime" if is_prime(r["n"]) else "OtherComposite"
            assert r["kind"] == want
        else:
            assert r["kind"] == "NotDecidable"
        assert (r["log10_region1_bound"] is None) == (r["region"] != "I")


def test_classify_exit_codes(capsys):
    code, out, _ = run(capsys, "classify", "97", "--u", "10")
    assert code == 0 and "kind: Prime" in out
    code, out, _ = run(capsys, "classify", "20", "--system", "spin", "--two-s", "6")
    assert code == 2 and "NotDecidable" in out
    code, out, _ = run(capsys, "classify", "1")
    assert code == 0 and "kind: Unit" in out
    code, _, err = run(capsys, "classify", "0")
    assert code == 1 and "error" in err
    code, _, _ = run(capsys, "classify", "5", "--system", "spin")
    assert code == 1


def test_classify_spectral(capsys):
    code, out, _ = run(capsys, "classify", "21", "--u", "40", "--source", "spectral")
    assert code == 0
    assert "kind: SemiprimeF3" in out and "tol_rel: 0.0001" in out
    code, out, _ = run(capsys, "classify", "11", "--system", "spin", "--two-s", "8", "--source", "spectral")
    assert code == 0 and "kind: Prime" in out


def test_pi(capsys):
    code, out, _ = run(capsys, "pi", "100")
    assert code == 0 and out.strip() == "25 25 MATCH"


def test_entropy_first_sample(capsys):
    code, out, _ = run(capsys, "entropy", "--u", "1", "-M", "8")
    assert code == 0
    rows = out.splitlines()
    assert rows[0] == "t_over_T,S_L"
    assert len(rows) == 9
    assert rows[1] == "0.0,0.0"


def test_entropy_spin_json(capsys):
    code, out, _ = run(capsys, "entropy", "--system", "spin", "--two-s", "3", "-M", "4", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["meta"]["two_s"] == 3 and len(doc["rows"]) == 4


def test_bad_parameters(capsys, tmp_path):
    assert run(capsys, "osc-coeffs", "--n-max", "200000")[0] == 1
    assert run(capsys, "osc-coeffs", "--u", "-1")[0] == 1
    assert run(capsys, "spin-coeffs", "--two-s", "201")[0] == 1
    assert run(capsys, "bogus")[0] == 1
    code, _, err = run(capsys, "osc-coeffs", "--out", str(tmp_path / "missing" / "x.csv"))
    assert code == 1 and "cannot write" in err


def test_selftest_quick_subprocess():
    t0 = time.perf_counter()
    proc = subprocess.run(
        [sys.executable, "-m", "entprime", "selftest", "--level", "quick"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0, proc.stdout + proc.stderr
    assert time.perf_counter() - t0 < 60
    assert "FAIL" not in proc.stdout


@pytest.mark.parametrize("argv", [["--help"], ["osc-coeffs", "--help"]])
def test_help_exits_zero(capsys, argv):
    assert main(argv) == 0
