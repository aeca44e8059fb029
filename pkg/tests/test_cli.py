import json
import os
import subprocess
import sys

import pytest

from toricdisk import catalog
from toricdisk.cli import main
from toricdisk.fileio import (InputError, geometry_from_dict, geometry_to_dict,
                              load_geometry, rational)
from toricdisk.toric import validate


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_rational_rendering():
    from fractions import Fraction as F
    assert rational(F(1, 4)) == "1/4" and rational(F(-3)) == "-3"


def test_load_catalog_geometry():
    g, branes = load_geometry("catalog:KP2")
    assert g.charge == catalog.KP2.charge and [b.label for b in branes] == ["I", "II", "III"]
    g, _ = load_geometry("catalog:Ym?m=3")
    assert g.r == 6 and validate(g).ok
    with pytest.raises(InputError):
        load_geometry("catalog:nope")


@pytest.mark.parametrize("name", catalog.CATALOG_NAMES)
def test_geometry_round_trip(name, tmp_path):
    g = catalog.geometry(name)
    branes = catalog.branes(g)
    path = tmp_path / "g.json"
    path.write_text(json.dumps(geometry_to_dict(g, branes)))
    g2, b2 = load_geometry(str(path))
    # cones are written in a canonical order
    assert (g2.name, g2.charge, g2.rays) == (g.name, g.charge, g.rays)
    assert set(g2.max_cones) == set(g.max_cones)
    assert tuple(b2) == tuple(branes)


def test_bad_cone_rejected():
    d = geometry_to_dict(catalog.KP2, catalog.branes(catalog.KP2))
    d["max_cones"][0] = [0, 1, 2]
    with pytest.raises(InputError, match="max cone"):
        geometry_from_dict(d)


def test_superpotential_rows(capsys):
    code, out, _ = run(capsys, "superpotential", "--geometry", "catalog:conifold",
                       "--brane", "I", "--order", "4")
    assert code == 0
    data = json.loads(out)
    assert [2, 0, "1/4"] in data["rows"]
    assert data["metadata"]["pipeline"] == "bmodel"


def test_csv_output(capsys):
    code, out, _ = run(capsys, "superpotential", "--geometry", "catalog:conifold",
                       "--brane", "I", "--order", "3", "--format", "csv")
    assert code == 0
    assert out.splitlines() == ["w,d1,value", "-3,3,1/9", "-2,2,1/4", "-1,1,1",
                                "1,0,1", "2,0,1/4", "3,0,1/9"]


def test_invariants_match_superpotential_for_conifold(capsys):
    args = ["--geometry", "catalog:conifold", "--brane", "II", "--framing", "1", "--order", "6"]
    _, a, _ = run(capsys, "superpotential", *args)
    _, b, _ = run(capsys, "invariants", *args)
    assert json.loads(a)["rows"] == json.loads(b)["rows"]


def test_out_file(capsys, tmp_path):
    path = tmp_path / "w.csv"
    code, out, _ = run(capsys, "amodel", "--geometry", "catalog:KP2", "--brane", "III",
                       "--order", "5", "--format", "csv", "--out", str(path))
    assert code == 0 and out == ""
    assert path.read_text().startswith("w,d1,value\n")


@pytest.mark.parametrize("argv", [
    ["superpotential", "--geometry", "missing.json", "--brane", "I"],
    ["superpotential", "--geometry", "catalog:KP2", "--brane", "IX"],
    ["superpotential", "--geometry", "catalog:KP2"],
    ["superpotential", "--geometry", "catalog:KP2", "--brane", "I", "--grading", "1,x"],
    ["superpotential", "--geometry", "catalog:KP2", "--brane", "I", "--grading", "1,1"],
    ["cross-check", "--geometry", "catalog:KP2", "--brane", "I", "--perturb", "bogus"],
])
def test_usage_errors_exit_two(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and err.startswith("toricdisk: error:")


def test_cross_check_pass_and_perturbed(capsys):
    base = ["cross-check", "--geometry", "catalog:KP2", "--brane", "I", "--framing", "2",
            "--order", "6"]
    assert run(capsys, *base)[0] == 0
    code, out, _ = run(capsys, *base, "--perturb", "phase:2,1")
    assert code == 1
    rows = {r[0]: r for r in json.loads(out)["rows"]}
    assert rows["C_coeff == catalog_n"][1] == "FAIL"
    assert rows["W0 == F_q"][1] == "ok"
    assert run(capsys, *base, "--perturb", "mirror:1:2")[0] == 1


def test_gkz_and_abel_jacobi_commands(capsys):
    code, out, _ = run(capsys, "gkz-check", "--geometry", "catalog:conifold", "--brane", "II",
                       "--order", "5")
    assert code == 0 and json.loads(out)["rows"] == []
    code, out, _ = run(capsys, "abel-jacobi", "--geometry", "catalog:conifold", "--brane", "I",
                       "--order", "6")
    assert code == 0 and json.loads(out)["metadata"]["epsilon"] == 1


def test_catalog_listing(capsys):
    code, out, _ = run(capsys, "catalog", "--format", "csv")
    assert code == 0
    assert "KP2,III,outer" in out


def test_output_is_byte_identical_across_hash_seeds():
    argv = [sys.executable, "-m", "toricdisk", "mirror-map", "--geometry", "catalog:KF0",
            "--brane", "I", "--order", "5"]
    outs = set()
    for seed in ("0", "1", "12345"):
        env = dict(os.environ, PYTHONHASHSEED=seed)
        outs.add(subprocess.run(argv, env=env, capture_output=True, check=True).stdout)
    assert len(outs) == 1
