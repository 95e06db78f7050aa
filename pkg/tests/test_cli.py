"""Command-line interface checks.

Core claims:
    - exit codes: 0 on clean reports, 2 on invalid input, usage text on stderr
    - the JSON report carries the fixed schema, round-trips byte-identically,
      and contains no floats; rationals appear as num/den pairs
    - text and JSON modes report the same values
"""

import io
import json

import pytest

from horikawa.cli import run


def invoke(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


# -- queries ---------------------------------------------------------------------

def test_hj_expansion():
    code, out, _ = invoke("hj", "--m", "9", "--q", "2")
    assert code == 0
    assert "chain: [5, 2]" in out


def test_hj_value_direction():
    code, out, _ = invoke("hj", "--chain", "5,2", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["invariants"]["quotient"] == {"m": 9, "q": 2}


def test_hj_rejects_non_coprime():
    code, _, err = invoke("hj", "--m", "9", "--q", "3")
    assert code == 2 and "coprime" in err


def test_hj_needs_arguments():
    code, _, err = invoke("hj")
    assert code == 2


def test_class_t_recognize():
    code, out, _ = invoke("class-t", "recognize", "--chain", "3,2,3", "--json")
    assert code == 0
    cls = json.loads(out)["invariants"]["classification"]
    assert (cls["kind"], cls["d"], cls["n"], cls["a"]) == ("class_t", 3, 2, 1)
    assert cls["reversed"]["kind"] == "class_t"


def test_class_t_generate():
    code, out, _ = invoke("class-t", "generate", "--max-length", "2", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["invariants"]["chains"] == [[4], [2, 5], [5, 2], [3, 3]]
    assert payload["invariants"]["count"] == 4


def test_class_t_expand():
    code, out, _ = invoke("class-t", "expand", "--chain", "4", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["invariants"]["prepend_child"] == [2, 5]
    assert payload["invariants"]["append_child"] == [5, 2]


def test_chain_argument_validation():
    code, _, err = invoke("class-t", "recognize", "--chain", "3,1")
    assert code == 2
    code, _, err = invoke("class-t", "recognize", "--chain", "a,b")
    assert code == 2


# -- reports ---------------------------------------------------------------------

@pytest.mark.parametrize("n", range(5, 21))
def test_en_report_exit_zero(n):
    code, out, _ = invoke("en-report", "--n", str(n), "--json")
    assert code == 0
    assert json.loads(out)["verdict"] == "pass"


def test_en_report_rejects_small_n():
    code, _, err = invoke("en-report", "--n", "3")
    assert code == 2 and "n >= 5" in err


def test_en_report_schema():
    code, out, _ = invoke("en-report", "--n", "6", "--json")
    payload = json.loads(out)
    assert list(payload) == ["command", "inputs", "identities", "flags", "invariants", "verdict"]
    for row in payload["identities"]:
        assert list(row) == ["name", "expected", "computed", "pass", "provenance"]
        assert row["provenance"] in ("published", "derived", "trivial")
    assert [f["name"] for f in payload["flags"]] == ["adjoint_square_mismatch"]


def test_horikawa_command():
    code, out, _ = invoke("horikawa", "--n", "5", "--json")
    assert code == 0
    inv = json.loads(out)["invariants"]["invariants"]
    assert (inv["p_g"], inv["q"], inv["chi"], inv["K2"]) == (4, 0, 5, 4)


def test_horikawa_rejects_small_n():
    code, _, _ = invoke("horikawa", "--n", "3")
    assert code == 2


def test_blowdown_command():
    code, out, _ = invoke(
        "blowdown", "--chi", "4", "--k2", "0", "--euler", "48",
        "--chain", "4", "--chain", "4", "--json",
    )
    assert code == 0
    payload = json.loads(out)
    fiber = payload["invariants"]["general_fiber"]
    assert (fiber["chi"], fiber["K2"], fiber["e"]) == (4, 2, 46)
    assert payload["invariants"]["per_chain"][0]["discrepancies"] == [{"num": 1, "den": 2}]


def test_blowdown_warns_on_rdp_chain():
    code, out, _ = invoke(
        "blowdown", "--chi", "4", "--k2", "0", "--euler", "48", "--chain", "2,2", "--json",
    )
    assert code == 0
    payload = json.loads(out)
    assert any(flag["name"] == "warning" for flag in payload["flags"])


def test_blowdown_rejects_non_class_t_chain():
    code, _, err = invoke(
        "blowdown", "--chi", "4", "--k2", "0", "--euler", "48", "--chain", "7,2",
    )
    assert code == 2 and "class T" in err


def test_w4_command():
    code, out, _ = invoke("w4", "--count", "2", "--json")
    assert code == 0
    fiber = json.loads(out)["invariants"]["general_fiber"]
    assert (fiber["chi"], fiber["K2"], fiber["e"]) == (4, 2, 46)


def test_w4_rejects_count_three():
    code, _, _ = invoke("w4", "--count", "3")
    assert code == 2


def test_single_contraction_command():
    code, out, _ = invoke("single-contraction", "--n", "6", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["invariants"]["noether_margin"] == -3


def test_unknown_subcommand():
    code, _, err = invoke("frobnicate")
    assert code == 2 and "usage" in err


# -- serialization guarantees -----------------------------------------------------

def _assert_no_floats(value):
    assert not isinstance(value, float), f"float {value!r} in JSON output"
    if isinstance(value, dict):
        for v in value.values():
            _assert_no_floats(v)
    if isinstance(value, list):
        for v in value:
            _assert_no_floats(v)


@pytest.mark.parametrize(
    "argv",
    [
        ("en-report", "--n", "7"),
        ("w4", "--count", "1"),
        ("single-contraction", "--n", "5"),
        ("blowdown", "--chi", "5", "--k2", "0", "--euler", "60", "--chain", "5,2", "--chain", "5,2"),
        ("class-t", "recognize", "--chain", "6,2,2"),
        ("hj", "--m", "25", "--q", "9"),
    ],
)
def test_json_round_trip_and_purity(argv):
    code, out, _ = invoke(*argv, "--json")
    assert code == 0
    payload = json.loads(out)
    assert out == json.dumps(payload, indent=2) + "\n"
    _assert_no_floats(payload)


def test_text_and_json_agree():
    _, text, _ = invoke("en-report", "--n", "6")
    _, raw, _ = invoke("en-report", "--n", "6", "--json")
    payload = json.loads(raw)
    for row in payload["identities"]:
        status = "pass" if row["pass"] else "FAIL"
        assert f"[{status}] {row['name']}:" in text
    assert f"verdict: {payload['verdict']}" in text
    assert (
        f"adjoint_square_lattice: {payload['invariants']['adjoint_square_lattice']}" in text
    )
