from __future__ import annotations

import json

import pytest

from eideal.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_qf_info(capsys):
    code, out, _ = run_cli(capsys, "qf", "info", "65")
    assert code == 0
    obj = json.loads(out)
    assert obj["m"] == 65
    assert obj["conductor"] == 65
    assert obj["fundamental_unit"] == {"x_num": 8, "x_den": 1, "y_num": 1, "y_den": 1}
    assert obj["unit_norm"] == -1
    assert obj["h_plus"] == 2 and obj["h"] == 2
    assert list(obj) == ["m", "discriminant", "conductor", "fundamental_unit",
                         "unit_norm", "h_plus", "h"]


def test_bq_info(capsys):
    code, out, _ = run_cli(capsys, "bq", "info", "3", "65")
    assert code == 0
    obj = json.loads(out)
    assert obj["subfields"] == [3, 65, 195]
    assert obj["conductor"] == 780
    assert obj["h"] == 2
    assert obj["hilbert_class_field"] == [3, 5, 13]
    assert obj["family"] == "q3"


def test_bq_info_no_hilbert_when_h_not_2(capsys):
    code, out, _ = run_cli(capsys, "bq", "info", "3", "145")
    assert code == 0
    obj = json.loads(out)
    assert obj["h"] == 8
    assert "hilbert_class_field" not in obj


def test_cert_and_verify_round_trip(tmp_path, capsys):
    code, out, _ = run_cli(capsys, "cert", "3", "5", "13")
    assert code == 0
    obj = json.loads(out)
    assert obj["w"] == 683
    assert obj["x0"] == {"residue": 683, "modulus": 780}
    assert list(obj) == ["family", "primes", "h", "l", "aux_primes",
                         "fallback_flags", "x0", "w", "checks"]
    path = tmp_path / "cert.json"
    path.write_text(out)
    code, out2, _ = run_cli(capsys, "verify", str(path))
    assert code == 0
    assert json.loads(out2)["valid"] is True


def test_verify_tampered_exits_1(tmp_path, capsys):
    code, out, _ = run_cli(capsys, "cert", "2", "5", "17")
    assert code == 0
    obj = json.loads(out)
    assert obj["w"] == 2383
    obj["w"] = 2383 + 680  # not a prime in the class
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(obj))
    code, out2, _ = run_cli(capsys, "verify", str(path))
    assert code == 1
    assert json.loads(out2)["valid"] is False


def test_cert_domain_failure_exits_1(capsys):
    code, _, err = run_cli(capsys, "cert", "3", "5", "29")
    assert code == 1
    assert "class number not 2" in err


def test_usage_error_exits_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["bq", "table", "--family", "nope", "--k-max", "5", "--r-max", "5"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["unknown-command"])
    assert exc.value.code == 2
    code, _, err = run_cli(capsys, "bq", "table", "--family", "q3", "--k-max", "5", "--r-max", "5")
    assert code == 2 and "--q" in err
    code, _, err = run_cli(capsys, "bq", "table", "--family", "hsu", "--q", "7", "--k-max", "13", "--r-max", "13")
    assert code == 2 and "--q" in err


def test_hsu_table(capsys):
    code, out, _ = run_cli(capsys, "bq", "table", "--family", "hsu", "--q", "5",
                           "--k-max", "13", "--r-max", "17")
    assert code == 0
    lines = out.splitlines()
    assert lines[1] == "5\t13\t17\t2"


def test_density_and_pool(capsys):
    code, out, _ = run_cli(capsys, "density", "3", "5", "13", "--bound", "10000")
    assert code == 0
    obj = json.loads(out)
    assert obj["target"] == {"num": 1, "den": 4, "decimal": "0.250000"}
    from fractions import Fraction
    assert Fraction(obj["ratio"]["num"], obj["ratio"]["den"]) == Fraction(obj["count"], obj["pi_x"])

    code, out, _ = run_cli(capsys, "density", "3", "5", "13", "--bound", "10000", "--field", "H")
    assert json.loads(out)["target"]["den"] == 8

    code, out, _ = run_cli(capsys, "density", "3", "5", "13", "--bound", "10000", "--pattern", "+--")
    assert json.loads(out)["target"]["den"] == 8

    code, out, _ = run_cli(capsys, "pool", "3", "5", "13", "--bound", "50")
    assert code == 0
    assert out.split() == ["37", "47"]


def test_growth_command(capsys):
    code, out, _ = run_cli(capsys, "growth", "3", "5", "13", "--bounds", "1000,10000")
    assert code == 0
    obj = json.loads(out)
    assert obj["u"] == 683 and obj["l"] == 3120
    counts = [c["count"] for c in obj["checkpoints"]]
    assert counts == sorted(counts)


def test_table_deterministic_across_workers(capsys):
    code, out1, _ = run_cli(capsys, "bq", "table", "--family", "q3", "--q", "3",
                            "--k-max", "13", "--r-max", "17")
    assert code == 0
    code, out2, _ = run_cli(capsys, "bq", "table", "--family", "q3", "--q", "3",
                            "--k-max", "13", "--r-max", "17", "--workers", "2")
    assert code == 0
    assert out1 == out2
    lines = out1.splitlines()
    assert lines[0] == "q\tk\tr\th_K"
    assert lines[1] == "3\t5\t13\t2"
    rows = [tuple(map(int, l.split("\t")[:3])) for l in lines[1:]]
    assert rows == sorted(rows)


def test_table_row_failure_goes_to_diagnostics():
    import io
    from eideal.tables import generate_table
    diag = io.StringIO()
    lines = list(generate_table([(3, 5, 13), (3, 5, 5)], diagnostics=diag))
    assert lines == ["q\tk\tr\th_K", "3\t5\t13\t2"]
    assert "(3, 5, 5)" in diag.getvalue()
