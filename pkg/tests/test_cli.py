from __future__ import annotations

import json
import subprocess
import sys
from pathlib import Path

import jsonschema
import pytest

from pointed_hopf import acceptance, cli
from pointed_hopf.hopf import build_borel_sl2

SCHEMA = json.loads((Path(__file__).parents[1] / "docs" / "report.schema.json").read_text())
SMALL = ["--max-ell", "3", "--max-n", "2", "--max-group", "3"]


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def report(capsys, *argv, expect=0):
    code, out, err = run(capsys, *argv)
    assert code == expect, err
    rep = json.loads(out)
    jsonschema.validate(rep, SCHEMA)
    return rep


def test_urs_bijective_verified(capsys):
    rep = report(capsys, "urs", "--n", "2", "--ell", "3", "--y", "1", "--z", "2", "--verify")
    res = rep["results"]
    assert res["factorization_bijective"] is True
    assert res["verification"] == {"performed": True, "brute_force": True, "match": True}
    assert res["config"]["double_ok"] and res["config"]["rs_primitive"]
    assert res["central_subgroup_order"] == 3 and res["A"] == [[2]]
    assert rep["timing"] is None


def test_urs_not_bijective_verified(capsys):
    res = report(capsys, "urs", "--n", "2", "--ell", "4", "--y", "1", "--z", "0", "--verify")["results"]
    assert res["factorization_bijective"] is False
    assert res["verification"]["match"] is True


def test_urs_failed_precondition(capsys):
    res = report(capsys, "urs", "--n", "3", "--ell", "3", "--y", "1", "--z", "2", "--verify")["results"]
    assert res["failed_precondition"] == "double_ok"
    assert res["central_subgroup_order"] is None
    assert res["verification"]["performed"] is False


def test_urs_invalid_args(capsys):
    code, out, err = run(capsys, "urs", "--n", "2", "--ell", "5", "--y", "2", "--z", "2")
    assert code == 2 and out == "" and "error" in json.loads(err)
    with pytest.raises(SystemExit) as exc:
        cli.main(["urs", "--n", "2"])
    assert exc.value.code == 2


def test_rank1_info(capsys):
    res = report(capsys, "rank1", "--group", "Z3", "--a", "g0", "--chi", "1", "info")["results"]
    assert res["data"]["ell"] == res["data"]["M"] == res["data"]["N"] == 3
    assert res["factorization_bijective"] is True
    assert res["K_order"] * res["K_perp_order"] == 9
    res = report(capsys, "rank1", "--group", "Z6", "--a", "g0", "--chi", "1", "info", "--list")["results"]
    assert res["data"]["ell"] == 6 and res["factorization_bijective"] is False
    assert len(res["K"]) == res["K_order"]


def test_rank1_tensor_oracle(capsys):
    rep = report(capsys, "rank1", "--group", "Z3", "--a", "g0", "--chi", "1", "tensor",
                 "--left", "c=2", "--right", "c=2", "--oracle")
    res = rep["results"]
    assert rep["command"] == "rank1 tensor"
    assert res["prediction"]["mode"] == "COMPLETE"
    assert sorted((s["dim"] for s in res["prediction"]["summands"]), reverse=True) == [3, 1]
    assert res["oracle"]["verdict"] == "MATCH"
    assert res["oracle"]["socle_dim"] == res["oracle"]["tensor_dim"] == 4


def test_rank1_factor(capsys):
    res = report(capsys, "rank1", "--group", "Z3", "--a", "g0", "--chi", "1", "factor",
                 "--simple", "beta=2:g=1")["results"]
    fac = res["factorization"]
    assert (fac["quotient_part"]["g"][0] + fac["one_dim_part"]["g"][0]) % 3 == 1
    assert (fac["quotient_part"]["beta"][0] + fac["one_dim_part"]["beta"][0]) % 3 == 2


@pytest.mark.parametrize("argv", [
    ["rank1", "--group", "Z6", "--a", "g0", "--chi", "1", "factor", "--simple", "c=1"],
    ["rank1", "--group", "Q8", "--a", "g0", "--chi", "1", "info"],
    ["rank1", "--group", "Z4", "--a", "2", "--chi", "2", "info"],
    ["rank1", "--group", "Z3", "--a", "g0", "--chi", "1", "tensor", "--left", "x", "--right", "c=1"],
    ["verify-all", "--max-ell", "1"],
])
def test_usage_errors(capsys, argv):
    code, out, _ = run(capsys, *argv)
    assert code == 2 and out == ""


def test_pretty_and_timing(capsys):
    code, out, _ = run(capsys, "urs", "--n", "2", "--ell", "3", "--y", "1", "--z", "2", "--pretty")
    assert code == 0
    assert any(line.startswith("results.factorization_bijective") and line.endswith("true")
               for line in out.splitlines())
    rep = report(capsys, "rank1", "--group", "Z3", "--a", "g0", "--chi", "1", "info", "--timing")
    assert isinstance(rep["timing"]["seconds"], str)


def test_deterministic_bytes(capsys):
    argv = ["rank1", "--group", "Z5", "--a", "g0", "--chi", "1", "tensor",
            "--left", "c=1", "--right", "c=3", "--oracle"]
    first = run(capsys, *argv)
    second = run(capsys, *argv)
    assert first == second
    proc = [subprocess.run([sys.executable, "-m", "pointed_hopf", *argv], capture_output=True)
            for _ in range(2)]
    assert proc[0].stdout == proc[1].stdout == first[1].encode()


def test_verify_all_small(capsys):
    rep = report(capsys, "verify-all", *SMALL)
    res = rep["results"]
    assert res["all_passed"] and res["first_failure"] is None
    assert [c["number"] for c in res["criteria"]] == list(range(1, 10))
    assert run(capsys, "verify-all", *SMALL)[1] == json.dumps(rep, indent=2, sort_keys=True) + "\n"


def test_verify_all_corrupted_build(capsys, monkeypatch):
    def corrupted(ell, y, z):
        H = build_borel_sl2(ell, y, z)
        H.mult = [list(row) for row in H.mult]
        H.mult[1][H.generators["f"]] = {H.generators["f"]: H.field.one}
        return H

    monkeypatch.setattr(acceptance, "build_borel_sl2", corrupted)
    rep = report(capsys, "verify-all", *SMALL, expect=1)
    res = rep["results"]
    assert not res["all_passed"]
    assert res["first_failure"]["criterion"] == 1
    assert res["first_failure"]["case"]
