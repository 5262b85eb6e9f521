import json
from importlib import resources

import jsonschema
import pytest

from _oracles import T42, brute_point_count
from bifill.bipoly import parse_bipoly
from bifill.cli import main
from bifill.gf import parse_field_spec


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def validate(doc, command):
    ref = resources.files("bifill") / "schemas" / f"{command}.schema.json"
    jsonschema.validate(doc, json.loads(ref.read_text()))


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv)
    doc = json.loads(out)
    validate(doc, doc["command"])
    return code, doc, err


# -- construct -------------------------------------------------------------------

def test_construct_json(capsys):
    code, doc, err = run_json(capsys, "construct", "--q", "2", "--json")
    assert code == 0
    assert doc["polynomial"] == T42
    assert doc["filling"] is True
    assert doc["smooth"] == "Smooth"
    assert doc["irreducible"] is True
    assert doc["points"] == 9
    assert doc["seed"] == 0
    assert "elapsed" in err


def test_construct_human(capsys):
    code, out, _ = run(capsys, "construct", "--q", "3")
    assert code == 0
    assert "bi-degree (4,4) over GF(3)" in out
    assert "filling: true" in out


def test_construct_transposed(capsys):
    code, doc, _ = run_json(capsys, "construct", "--q", "2", "--transposed", "--json")
    assert code == 0
    assert doc["bidegree"] == [3, 4]


def test_construct_seed_echo(capsys):
    _, doc, _ = run_json(capsys, "construct", "--q", "2", "--seed", "7", "--json")
    assert doc["seed"] == 7


def test_construct_usage_error(capsys):
    code, _, err = run(capsys, "construct", "--q", "6", "--json")
    assert code == 2
    assert "bifill:" in err


# -- verify ----------------------------------------------------------------------

def test_verify_expectations_met(capsys):
    code, doc, _ = run_json(
        capsys,
        "verify", "--q", "2", "--poly", T42, "--json",
        "--expect-filling", "--expect-smooth", "--expect-irreducible",
        "--expect-points", "9",
    )
    assert code == 0
    assert doc["unmet"] == []
    assert doc["attained"] is True


def test_verify_unmet_expectation_fails(capsys):
    code, doc, _ = run_json(
        capsys, "verify", "--q", "2", "--poly", T42, "--json",
        "--expect-points", "10",
    )
    assert code == 1
    assert doc["unmet"] == ["points"]


def test_verify_reports_without_judging(capsys):
    code, doc, _ = run_json(capsys, "verify", "--q", "2", "--poly", "X0*Y0", "--json")
    assert code == 0
    assert doc["filling"] is False
    assert doc["smooth"] == "Singular"
    assert doc["witness"] is not None


def test_verify_parse_error(capsys):
    code, _, err = run(capsys, "verify", "--q", "2", "--poly", "X0*Y0 ++ X1", "--json")
    assert code == 2
    assert "bifill:" in err


# -- decompose -------------------------------------------------------------------

def test_decompose_json(capsys):
    code, doc, _ = run_json(capsys, "decompose", "--q", "2", "--poly", T42, "--json")
    assert code == 0
    assert doc["recombines"] is True
    K = parse_field_spec("q=2")
    F = parse_bipoly(doc["f"], K) * parse_bipoly(doc["kx"], K) + parse_bipoly(
        doc["g"], K
    ) * parse_bipoly(doc["ky"], K)
    assert F == parse_bipoly(T42, K)


def test_decompose_poly_from_file(capsys, tmp_path):
    p = tmp_path / "curve.txt"
    p.write_text(T42 + "\n")
    code, doc, _ = run_json(capsys, "decompose", "--q", "2", "--poly", f"@{p}", "--json")
    assert code == 0
    assert doc["recombines"] is True


def test_decompose_non_filling_is_an_outcome_error(capsys):
    code, _, err = run(capsys, "decompose", "--q", "2", "--poly", "X0^3*Y0^3", "--json")
    assert code == 1
    assert "bifill:" in err


# -- census and scan -------------------------------------------------------------

def test_census_json(capsys):
    code, doc, _ = run_json(capsys, "census", "--q", "2", "--bidegree", "3,3", "--json")
    assert code == 0
    assert doc["candidates_scanned"] == 127
    assert doc["n_irreducible"] == 0


def test_census_byte_identity(capsys):
    _, out1, _ = run(capsys, "census", "--q", "2", "--bidegree", "3,3", "--json")
    _, out2, _ = run(capsys, "census", "--q", "2", "--bidegree", "3,3", "--json")
    assert out1 == out2


def test_census_jobs_equivalence(capsys):
    _, out1, _ = run(capsys, "census", "--q", "2", "--bidegree", "4,3", "--json")
    _, out2, _ = run(
        capsys, "census", "--q", "2", "--bidegree", "4,3", "--jobs", "2", "--json"
    )
    assert out1 == out2


def test_scan_json(capsys):
    code, doc, _ = run_json(capsys, "scan", "--q", "2", "--max", "4,4", "--json")
    assert code == 0
    hits = {(c["a"], c["b"]) for c in doc["cells"] if c["exists"]}
    assert hits == {(4, 3), (3, 4), (4, 4)}


# -- bound, count, field-info ----------------------------------------------------

def test_bound_json(capsys):
    code, doc, _ = run_json(capsys, "bound", "--q", "2", "--r", "3", "--d", "7", "--json")
    assert code == 0
    assert doc["floor"] == 9
    assert doc["quotient"] == "105/11"


def test_bound_rejects_non_prime_power(capsys):
    code, _, err = run(capsys, "bound", "--q", "6", "--r", "3", "--d", "7")
    assert code == 2
    assert "bifill:" in err


def test_count_matches_brute_oracle(capsys):
    K = parse_field_spec("q=2")
    F = parse_bipoly(T42, K)
    code, doc, _ = run_json(
        capsys, "count", "--q", "2", "--poly", T42, "--ext", "2", "--json"
    )
    assert code == 0
    assert doc["points"] == brute_point_count(F, 2)


def test_count_jobs_equivalence(capsys):
    _, doc1, _ = run_json(capsys, "count", "--q", "2", "--poly", T42, "--json")
    _, doc2, _ = run_json(
        capsys, "count", "--q", "2", "--poly", T42, "--jobs", "3", "--json"
    )
    assert doc1["points"] == doc2["points"] == 9


def test_field_info_json(capsys):
    code, doc, _ = run_json(capsys, "field-info", "--q", "9", "--json")
    assert code == 0
    assert doc["field"]["order"] == 9
    assert doc["field"]["modulus"] == [1, 0, 1]
    assert len(doc["elements"]) == 9


def test_field_info_by_spec(capsys):
    _, doc1, _ = run_json(capsys, "field-info", "--q", "9", "--json")
    _, doc2, _ = run_json(capsys, "field-info", "--field", "p=3,e=2", "--json")
    assert doc1["field"] == doc2["field"]


# -- argparse-level failures -----------------------------------------------------

def test_missing_required_flag_exits_2():
    with pytest.raises(SystemExit) as exc:
        main(["construct"])
    assert exc.value.code == 2


def test_q_and_field_are_mutually_exclusive():
    with pytest.raises(SystemExit) as exc:
        main(["field-info", "--q", "2", "--field", "p=2,e=1"])
    assert exc.value.code == 2


def test_unknown_subcommand_exits_2():
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2
