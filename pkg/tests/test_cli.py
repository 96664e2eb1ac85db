import json

import pytest

from cubegal.cli import cli_main
from cubegal.polyq import save_poly, trinomial_poly
from cubegal.structure import R3_ORDER


def run_cli(capsys, *argv):
    code = cli_main(list(argv))
    return code, capsys.readouterr().out


def test_order_cube3(capsys):
    code, out = run_cli(capsys, "order", "--cube", "3")
    assert code == 0
    assert str(R3_ORDER) in out


def test_order_json_report(tmp_path, capsys):
    out_file = tmp_path / "report.json"
    code, _ = run_cli(capsys, "order", "--cube", "3", "--report", "json",
                      "--out", str(out_file))
    assert code == 0
    doc = json.loads(out_file.read_text())
    assert doc["version"] == 1
    assert doc["summary"] == {"pass": 1, "fail": 0, "skip": 0, "inconclusive": 0}
    assert doc["checks"][0]["actual"] == str(R3_ORDER)


def test_gens_cycles_format(capsys):
    code, out = run_cli(capsys, "gens", "--cube", "4", "--format", "cycles")
    assert code == 0
    assert "r2 = (39 87 10 95)(27 75 22 83)(15 63 34 71)(3 51 46 59)" in out


def test_gens_json_format(capsys):
    code, out = run_cli(capsys, "gens", "--cube", "5", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["degree"] == 144
    names = [e["name"] for e in doc["generators"]]
    assert names == ["r1", "r2", "b1", "b2", "d1", "d2",
                     "u1", "u2", "l1", "l2", "f1", "f2"]
    assert doc["generators"][0]["cycles"].startswith("(40 88 9 96)")


def test_gens_cube3_prints_canonical_cycles(capsys):
    code, out = run_cli(capsys, "gens", "--cube", "3")
    assert code == 0
    assert out.count("=") == 6


def test_disc_subcommand(tmp_path, capsys):
    path = tmp_path / "h.json"
    save_poly(trinomial_poly(1), path)
    code, out = run_cli(capsys, "disc", "--poly", str(path))
    assert code == 0
    assert str(-(23 ** 23 + 24 ** 24)) in out


def test_disc_square_class_fail_exits_nonzero(tmp_path, capsys):
    path = tmp_path / "h.json"
    save_poly(trinomial_poly(1), path)
    # disc(X^24 - X - 1) is not in the class 7c, so the check fails
    code, out = run_cli(capsys, "disc", "--poly", str(path),
                        "--square-class-vs", "10061923336916391234966329")
    assert code == 1
    assert "FAIL" in out


def test_disc_square_class_pass(tmp_path, capsys):
    path = tmp_path / "h.json"
    save_poly(trinomial_poly(1), path)
    target = -(23 ** 23 + 24 ** 24)
    code, out = run_cli(capsys, "disc", "--poly", str(path),
                        "--square-class-vs", str(target))
    assert code == 0


def test_frobenius_scan(tmp_path, capsys):
    path = tmp_path / "h.json"
    save_poly(trinomial_poly(1), path)
    code, out = run_cli(capsys, "frobenius", "--poly", str(path),
                        "--primes", "25", "--jobs", "1")
    assert code == 0
    assert "25 good" in out


def test_frobenius_certify(tmp_path, capsys):
    path = tmp_path / "h.json"
    save_poly(trinomial_poly(1), path)
    code, out = run_cli(capsys, "frobenius", "--poly", str(path),
                        "--primes", "400", "--certify", "symmetric", "--jobs", "1")
    assert code == 0
    assert "witnesses" in out


def test_frobenius_wreath_containment(tmp_path, capsys):
    from cubegal.theorems import rubik_f
    path = tmp_path / "f.json"
    save_poly(rubik_f(), path)
    code, out = run_cli(capsys, "frobenius", "--poly", str(path),
                        "--primes", "30", "--certify", "wreath-3-8", "--jobs", "1")
    assert code == 0
    assert "0 types outside" in out


def test_verify_rubik_report_deterministic(tmp_path, capsys):
    a = tmp_path / "a.json"
    b = tmp_path / "b.json"
    for path in (a, b):
        code, _ = run_cli(capsys, "verify", "--theorem", "rubik",
                          "--primes", "25", "--jobs", "1",
                          "--report", "json", "--out", str(path))
        assert code == 0

    def normalized(path):
        doc = json.loads(path.read_text())
        for check in doc["checks"]:
            check["ms"] = 0
        return doc

    assert normalized(a) == normalized(b)


def test_usage_error_exit_code(capsys):
    with pytest.raises(SystemExit) as exc:
        cli_main(["order", "--cube", "7"])
    assert exc.value.code == 2
