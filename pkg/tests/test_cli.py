import json
import math

import numpy as np
import pytest

from numrange.cli import main
from numrange.matio import save_matrix


def run_cli(args):
    return main([str(a) for a in args])


def test_gallery_listing(capsys):
    assert run_cli(["gallery"]) == 0
    out = capsys.readouterr().out
    assert "jordan" in out and "harmonic" in out


def test_range_jordan_disk(tmp_path):
    rc = run_cli(["range", "--gallery", "jordan:2", "--out", tmp_path,
                  "--seed", 3, "--angle-budget", 2048])
    assert rc == 0
    atlas = json.loads((tmp_path / "atlas.json").read_text())
    assert atlas["seed"] == 3
    radii = [math.hypot(v["re"], v["im"]) for v in atlas["vertices"]]
    assert max(abs(r - 0.5) for r in radii) < 1e-6
    csv = (tmp_path / "atlas.csv").read_text().splitlines()
    assert csv[0] == "theta,h,re,im,multiplicity"
    assert len(csv) > 64
    svg = (tmp_path / "plot.svg").read_text()
    assert svg.startswith("<?xml")
    assert "dc:date" not in svg


def test_classify_triangle_from_matrix_file(tmp_path):
    mat = tmp_path / "tri.json"
    save_matrix(np.diag([0.0, 1.0, 1j]), mat)
    rc = run_cli(["classify", "--matrix", mat, "--out", tmp_path, "--seed", 1])
    assert rc == 0
    classes = json.loads((tmp_path / "classes.json").read_text())
    kinds = [p["kind"] for p in classes["points"]]
    assert kinds.count("corner") >= 3


def test_verify_triangle(tmp_path):
    rc = run_cli(["verify", "--gallery", "normal:0,1,1j", "--out", tmp_path,
                  "--seed", 5])
    assert rc == 0
    theorems = json.loads((tmp_path / "theorems.json").read_text())
    ids = {r["theorem_id"] for r in theorems["reports"]}
    assert "nonsmooth_point_is_eigenvalue" in ids
    assert "boundary_eigvec_normality" in ids
    assert all(r["verdict"] in ("pass", "inconclusive")
               for r in theorems["reports"])


def test_witness_triangle(tmp_path):
    rc = run_cli(["witness", "--gallery", "triangle", "--out", tmp_path,
                  "--alpha", "0.2,0.4", "--depth", 12, "--seed", 7])
    assert rc == 0
    rep = json.loads((tmp_path / "witness.json").read_text())
    assert len(rep["rows"]) == 12
    for row in rep["rows"]:
        assert set(row) == {"n", "eps", "residual", "c_n", "lemma42_lo",
                            "lemma42_hi", "lemma43_margin", "lemma44_margin",
                            "re_pos", "mixed_re"}
        assert row["lemma43_margin"] >= 0
        assert row["re_pos"] > 0
    assert "au_decay_exponent" in rep


def test_probe_jordan(tmp_path):
    rc = run_cli(["probe", "--gallery", "jordan:4", "--sweep", "4,8,16",
                  "--out", tmp_path, "--seed", 2])
    assert rc == 0
    theorems = json.loads((tmp_path / "theorems.json").read_text())
    assert theorems["reports"] == []


def test_config_file_with_flag_override(tmp_path):
    cfg = tmp_path / "run.json"
    cfg.write_text(json.dumps({
        "gallery": "jordan:2", "seed": 11, "angle_budget": 256,
        "out": str(tmp_path / "a")}))
    rc = run_cli(["range", "--config", cfg, "--out", tmp_path / "b"])
    assert rc == 0
    assert (tmp_path / "b" / "atlas.json").exists()   # flag wins over config
    atlas = json.loads((tmp_path / "b" / "atlas.json").read_text())
    assert atlas["seed"] == 11                        # config supplies seed


def test_config_schrodinger_operator(tmp_path):
    cfg = tmp_path / "op.json"
    cfg.write_text(json.dumps({
        "operator": {"operator": "schrodinger1d",
                     "potential": {"kind": "bump_scaled", "s": [1, 1]},
                     "grid": {"L": 8, "N": 64}},
        "angle_budget": 256, "refine_tol": 1e-4}))
    rc = run_cli(["range", "--config", cfg, "--out", tmp_path])
    assert rc == 0


def test_exit_code_on_config_errors(tmp_path):
    assert run_cli(["range", "--out", tmp_path]) == 2            # no operator
    assert run_cli(["range", "--gallery", "nosuch", "--out", tmp_path]) == 2
    assert run_cli(["range", "--matrix", tmp_path / "missing.json",
                    "--out", tmp_path]) == 2
    assert run_cli(["range", "--gallery", "jordan:2", "--matrix",
                    tmp_path / "x.json", "--out", tmp_path]) == 2


def test_determinism_byte_identical(tmp_path):
    for sub in ("r1", "r2"):
        rc = run_cli(["classify", "--gallery", "normal:0,1,1j",
                      "--out", tmp_path / sub, "--seed", 42])
        assert rc == 0
    for name in ("atlas.json", "atlas.csv", "classes.json"):
        b1 = (tmp_path / "r1" / name).read_bytes()
        b2 = (tmp_path / "r2" / name).read_bytes()
        assert b1 == b2, name


def test_gallery_curve_export(tmp_path):
    rc = run_cli(["gallery", "--curve", "power:2", "--samples", 64,
                  "--out", tmp_path])
    assert rc == 0
    lines = (tmp_path / "curve.csv").read_text().splitlines()
    assert lines[0] == "xi,eta"
    xi, eta = map(float, lines[1].split(","))
    assert eta == pytest.approx(xi * xi, rel=1e-12)


def test_verify_oscillator_product_law(tmp_path):
    rc = run_cli(["verify", "--gallery", "harmonic:1+1j,8,120",
                  "--out", tmp_path, "--seed", 9])
    assert rc == 0
    theorems = json.loads((tmp_path / "theorems.json").read_text())
    prod = [r for r in theorems["reports"]
            if r["theorem_id"] == "oscillator_boundary_product"]
    assert len(prod) == 1
    assert prod[0]["verdict"] == "pass"
    assert 0.2375 <= prod[0]["margin"] <= 0.2625
    assert not any(r["verdict"] == "fail" for r in theorems["reports"])
