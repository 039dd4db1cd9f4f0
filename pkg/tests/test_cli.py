"""End-to-end CLI behavior: verbs, output shapes, exit codes, env override."""

import json
import subprocess
from pathlib import Path

import pytest

from abelfm.cli import main

DATA = Path(__file__).parent / "data"
EXAMPLE = DATA / "example_scan.json"

POINCARE2 = {"transform": {"g": 2, "nX": "2", "nY": "2", "r": 1, "dX": "0", "dY": "0"}}


@pytest.fixture
def poincare_cfg(tmp_path):
    p = tmp_path / "poincare.json"
    p.write_text(json.dumps(POINCARE2), encoding="utf-8")
    return str(p)


@pytest.fixture
def scan_cfg(tmp_path):
    payload = {
        "context": {"g": 2, "n": "2", "label": "X"},
        "scan": {
            "k": 2,
            "v": "1,0,0",
            "walls": ["0,0,1/2"],
            "b_range": ["-2", "2"],
            "t_range": ["1/100", "2"],
            "resolution": [9, 9],
        },
    }
    p = tmp_path / "scan.json"
    p.write_text(json.dumps(payload), encoding="utf-8")
    return str(p)


def run(capsys, argv):
    rc = main(argv)
    captured = capsys.readouterr()
    return rc, captured.out, captured.err


def test_transform_roundtrip(capsys, poincare_cfg):
    rc, out, _ = run(capsys, ["transform", "--config", poincare_cfg, "--class", "1,0,0"])
    assert rc == 0
    lines = out.splitlines()
    assert lines[0] == "source = 1,0,0"
    assert lines[1] == "image  = 0,0,1/2"
    assert lines[2] == "round trip (shift 2) = 1,0,0"


def test_charge_worked_example(capsys):
    rc, out, _ = run(
        capsys,
        ["charge", "--config", str(EXAMPLE), "--class", "1,1,1/2", "--k", "1"],
    )
    assert rc == 0
    lines = out.splitlines()
    assert lines[0] == "k = 1, b = 0, t = 1"
    assert lines[1] == "Z = (-2) + (1)*i"
    assert lines[2] == "slope = 2"
    assert lines[3] == "phase = 0.85241638235"


def test_charge_positive_real_axis_has_no_phase(capsys):
    rc, out, _ = run(capsys, ["charge", "--config", str(EXAMPLE), "--class", "1,0,0"])
    assert rc == 0
    assert "Z = (1) + (0)*i" in out
    assert "slope = infinity" in out
    assert "phase = undefined" in out


def test_charge_point_class(capsys):
    rc, out, err = run(capsys, ["charge", "--config", str(EXAMPLE), "--class", "0,0,1/2"])
    assert rc == 0
    assert "Z = (-1) + (0)*i" in out
    assert "phase = 1" in out
    assert "advisory" not in err  # chi = 1 here


def test_charge_fractional_chi_advisory(capsys, tmp_path):
    cfg = tmp_path / "frac.json"
    cfg.write_text(
        json.dumps(
            {
                "context": {"g": 2, "n": "3", "label": "X"},
                "charge": {"k": 2, "b": "0", "t": "1"},
            }
        ),
        encoding="utf-8",
    )
    rc, _, err = run(capsys, ["charge", "--config", str(cfg), "--class", "0,0,1/3"])
    assert rc == 0
    assert "advisory: chi = n/g! = 3/2" in err


def test_zeta(capsys, poincare_cfg):
    rc, out, _ = run(capsys, ["zeta", "--config", poincare_cfg, "--u", "1@1/2"])
    assert rc == 0
    lines = out.splitlines()
    assert lines[0] == "u = 1@1/2"
    assert lines[1] == "zeta = 1@1"
    assert lines[2] == "rect = (-1) + (0)*i"
    assert lines[3] == "real: yes, sign -1"
    assert lines[4] == "real-zeta angles for g=2: 1/2"


def test_params_ok(capsys, poincare_cfg):
    rc, out, _ = run(capsys, ["params", "--config", poincare_cfg, "--k", "1", "--lambda", "1"])
    assert rc == 0
    assert "omega_src = (0) + (1)*i" in out
    assert "omega_dst = (0) + (1)*i" in out
    # one verdict row per divided-power basis element, table and JSON forms
    assert out.count('"equal": true') == 3
    assert "phase shift: holds=True, expected heart shift = 1, exact=True" in out


def test_walls_stdout_deterministic(capsys, scan_cfg):
    rc, out1, _ = run(capsys, ["walls", "--config", scan_cfg])
    assert rc == 0
    assert out1.startswith("w,b,t\n")
    rc, out2, _ = run(capsys, ["walls", "--config", scan_cfg])
    assert rc == 0
    assert out1 == out2


def test_walls_out_file_and_recheck(capsys, scan_cfg, tmp_path):
    out_file = tmp_path / "cells.csv"
    rc, out, err = run(
        capsys,
        ["walls", "--config", scan_cfg, "--out", str(out_file), "--recheck"],
    )
    assert rc == 0
    assert "recheck: all 16 cells confirmed" in err
    assert f"wrote {out_file}: 16 cells" in out
    text = out_file.read_text(encoding="utf-8")
    assert text.startswith("w,b,t\n")
    assert len(text.splitlines()) == 17


def test_walls_json_format(capsys, scan_cfg, tmp_path):
    out_file = tmp_path / "cells.json"
    rc, out, _ = run(
        capsys,
        ["walls", "--config", scan_cfg, "--out", str(out_file), "--format", "json"],
    )
    assert rc == 0
    rec = json.loads(out_file.read_text(encoding="utf-8"))
    assert rec["resolution"] == [9, 9]
    assert len(rec["cells"]) == 16


def test_walls_out_dir_env(capsys, scan_cfg, tmp_path, monkeypatch):
    outdir = tmp_path / "redirected"
    outdir.mkdir()
    monkeypatch.setenv("ABELFM_OUT_DIR", str(outdir))
    rc, _, _ = run(capsys, ["walls", "--config", scan_cfg, "--out", "cells.csv"])
    assert rc == 0
    assert (outdir / "cells.csv").exists()
    # absolute paths ignore the override
    abs_file = tmp_path / "abs.csv"
    rc, _, _ = run(capsys, ["walls", "--config", scan_cfg, "--out", str(abs_file)])
    assert rc == 0
    assert abs_file.exists()
    assert not (outdir / "abs.csv").exists()


def test_walls_unwritable_out_exits_3(capsys, scan_cfg, tmp_path):
    rc, _, err = run(
        capsys,
        ["walls", "--config", scan_cfg, "--out", str(tmp_path / "nodir" / "x.csv")],
    )
    assert rc == 3
    assert "i/o error" in err


def test_verify_verb(capsys):
    rc, out, _ = run(capsys, ["verify", "--suite", "lattice"])
    assert rc == 0
    lines = out.splitlines()
    assert all(line.split()[0] in ("PASS", "FAIL", "NOTE") for line in lines[:-1])
    assert lines[-1].startswith("ok: ")


def test_usage_exit_codes(capsys):
    assert main([]) == 2
    assert main(["bogus"]) == 2
    assert main(["verify", "--suite", "bogus"]) == 2
    assert main(["charge", "--config", str(EXAMPLE)]) == 2  # --class required
    assert main(["--help"]) == 0
    capsys.readouterr()


def test_missing_config_exits_3(capsys, tmp_path):
    rc, _, err = run(
        capsys,
        ["charge", "--config", str(tmp_path / "none.json"), "--class", "1,0,0"],
    )
    assert rc == 3
    assert "i/o error" in err


def test_config_errors_exit_2(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{broken", encoding="utf-8")
    rc, _, err = run(capsys, ["charge", "--config", str(bad), "--class", "1,0,0"])
    assert rc == 2
    assert "invalid JSON" in err

    rc, _, err = run(capsys, ["charge", "--config", str(EXAMPLE), "--class", "1,0"])
    assert rc == 2
    assert "class:" in err


def test_console_script_entry_point():
    proc = subprocess.run(
        ["abelfm", "verify", "--suite", "lattice"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout.rstrip().splitlines()[-1].startswith("ok: ")
