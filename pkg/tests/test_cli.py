import json

import pytest

from hurwitz.cli import main


def run(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, argv):
    code, out, err = run(capsys, argv)
    return code, json.loads(out), err


def test_compute_oracle_basic(capsys):
    code, doc, _ = run_json(
        capsys,
        ["compute", "--type", "simple", "--mu", "2", "--nu", "1,1", "--g", "0", "--method", "oracle"],
    )
    assert code == 0
    assert doc["value"] == "1/1"
    assert doc["input"]["mu"] == [2] and doc["input"]["nu"] == [1, 1]
    assert doc["input"]["p"] == 1 and doc["method"] == "oracle"


def test_compute_character_one_cycle(capsys):
    code, doc, _ = run_json(
        capsys,
        ["compute", "--type", "simple", "--mu", "3", "--nu", "3", "--g", "0", "--method", "character"],
    )
    assert (code, doc["value"]) == (0, "1/3")


def test_compute_methods_agree(capsys):
    values = set()
    for method in ("oracle", "character", "chamber"):
        code, doc, _ = run_json(
            capsys,
            ["compute", "--type", "mixed", "--mu", "3,1", "--nu", "2,2",
             "--p", "1", "--q", "1", "--r", "0", "--method", method],
        )
        assert code == 0
        values.add(doc["value"])
    assert values == {"6/1"}


def test_compute_size_mismatch_exits_2(capsys):
    code, _, err = run(
        capsys,
        ["compute", "--type", "simple", "--mu", "2", "--nu", "1,1,1", "--g", "0", "--method", "oracle"],
    )
    assert code == 2 and "error" in err


def test_compute_flag_validation(capsys):
    # mixed wants --p/--q/--r, pure wants --g
    code, _, _ = run(capsys, ["compute", "--type", "mixed", "--mu", "2", "--nu", "2",
                              "--g", "1", "--method", "oracle"])
    assert code == 2
    code, _, _ = run(capsys, ["compute", "--type", "simple", "--mu", "2", "--nu", "2",
                              "--p", "2", "--method", "oracle"])
    assert code == 2
    code, _, _ = run(capsys, ["compute", "--type", "simple", "--mu", "2", "--nu", "2",
                              "--g", "1", "--method", "chamber", "--connected"])
    assert code == 2


def test_compute_connected_rules(capsys):
    code, doc, _ = run_json(
        capsys,
        ["compute", "--type", "monotone", "--mu", "2", "--nu", "2", "--g", "1",
         "--method", "oracle", "--connected"],
    )
    assert (code, doc["value"]) == (0, "1/2")
    code, _, _ = run(
        capsys,
        ["compute", "--type", "monotone", "--mu", "2", "--nu", "2", "--g", "1",
         "--method", "character", "--connected"],
    )
    assert code == 2  # connected character route exists only for the simple kind


def test_compute_bound_guard(capsys):
    code, _, _ = run(
        capsys,
        ["compute", "--type", "simple", "--mu", "9", "--nu", "9", "--g", "0", "--method", "oracle"],
    )
    assert code == 4


def test_chamber_poly_json_schema(capsys):
    code, doc, _ = run_json(
        capsys,
        ["chamber-poly", "--type", "monotone", "--g", "1", "--m", "1", "--n", "1", "--sample", "2:2"],
    )
    assert code == 0
    assert doc["degree"] == 3
    assert doc["chamber"]["sample"] == {"mu": [2], "nu": [2]}
    assert all(set(t) == {"exps", "coeff"} for t in doc["polynomial"])
    signs = doc["chamber"]["signs"]
    assert signs == [{"I": [1], "J": [], "sign": 1}]
    consts = [t["coeff"] for t in doc["polynomial"] if not any(t["exps"].values())]
    assert consts == ["-1/12"]


def test_chamber_poly_round_trip(capsys):
    from fractions import Fraction

    from hurwitz.wedge import chamber_of, chamber_polynomial

    code, doc, _ = run_json(
        capsys,
        ["chamber-poly", "--type", "mixed", "--p", "1", "--q", "1", "--r", "0",
         "--m", "2", "--n", "2", "--sample", "3,1:2,2"],
    )
    assert code == 0
    poly = chamber_polynomial("mixed", (1, 1, 0), chamber_of((3, 1), (2, 2)))
    rebuilt = {}
    for term in doc["polynomial"]:
        exps = tuple(term["exps"][v] for v in poly.ring.names)
        num, den = term["coeff"].split("/")
        rebuilt[exps] = Fraction(int(num), int(den))
    assert rebuilt == dict(poly.terms)


def test_chamber_poly_on_wall_exits_3(capsys):
    code, _, _ = run(
        capsys,
        ["chamber-poly", "--type", "monotone", "--g", "0", "--m", "2", "--n", "2", "--sample", "2,2:2,2"],
    )
    assert code == 3


def test_chamber_poly_degenerate_exits_5(capsys):
    code, _, _ = run(
        capsys,
        ["chamber-poly", "--type", "monotone", "--g", "0", "--m", "1", "--n", "1", "--sample", "2:2"],
    )
    assert code == 5


def test_chamber_poly_shape_check(capsys):
    code, _, _ = run(
        capsys,
        ["chamber-poly", "--type", "monotone", "--g", "0", "--m", "2", "--n", "2", "--sample", "4:1,3"],
    )
    assert code == 2


def test_verify_conventions_passes(capsys):
    code, doc, err = run_json(capsys, ["verify", "--suite", "conventions", "--dmax", "3", "--bmax", "3"])
    assert code == 0
    assert doc["ok"] is True and doc["count"] > 0
    assert "PASS" in err


def test_verify_bound_guard(capsys):
    code, _, _ = run(capsys, ["verify", "--suite", "equality", "--dmax", "99"])
    assert code == 4


def test_verify_constant_term_reports_mismatch(capsys):
    # the closed form recorded for the constant term does not match the
    # computed polynomials; the suite must say so and exit 1
    code, doc, err = run_json(capsys, ["verify", "--suite", "constant-term", "--g", "1"])
    assert code == 1
    assert doc["ok"] is False and len(doc["failures"]) == 3
    assert "FAIL" in err


def test_out_file(tmp_path, capsys):
    target = tmp_path / "result.json"
    code, doc, _ = run_json(
        capsys,
        ["compute", "--type", "strict", "--mu", "3", "--nu", "1,2", "--g", "0",
         "--method", "character", "--out", str(target)],
    )
    assert code == 0
    assert json.loads(target.read_text()) == doc


def test_unknown_subcommand_exits_2(capsys):
    assert run(capsys, ["frobnicate"])[0] == 2
