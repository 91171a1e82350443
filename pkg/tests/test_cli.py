"""End-to-end CLI behavior: reports, formats, exit codes."""

import json

import pytest

from ftop.cli import main

FINITE_SPACE = {
    "kind": "finite",
    "universe": ["a", "b"],
    "sets": {
        "m1": {"a": "0", "b": "1/3"},
        "m2": {"a": "1/2", "b": "0"},
        "m3": {"a": "1/2", "b": "1/3"},
    },
    "topology": ["0", "m1", "m2", "m3", "1"],
    "topology_is": "complete",
}

INDISCRETE_SPACE = {
    "kind": "finite",
    "universe": ["a", "b"],
    "sets": {},
    "topology": ["0", "1"],
    "topology_is": "complete",
}

SUBBASIS_SPACE = {
    "kind": "finite",
    "universe": ["a", "b"],
    "sets": {"t": {"a": "1", "b": "1/3"}, "w": {"a": "1/2", "b": "1"}},
    "topology": ["t", "w"],
    "topology_is": "subbasis",
}

FUNCTION_DOC = {
    "domain": FINITE_SPACE,
    "codomain": {
        "kind": "finite",
        "universe": ["u", "v"],
        "sets": {"n": {"u": "1/2", "v": "0"}},
        "topology": ["0", "n", "1"],
        "topology_is": "complete",
    },
    "map": {"a": "u", "b": "v"},
}


def write_doc(tmp_path, name, data):
    path = tmp_path / name
    path.write_text(json.dumps(data, indent=2) + "\n", encoding="utf-8")
    return str(path)


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, "--format", "json", *argv)
    return code, (json.loads(out) if out else None), err


def test_validate_bundled_example(capsys):
    code, report, err = run_json(capsys, "validate", "example1.json")
    assert code == 0
    assert report["valid"] is True
    assert report["kind"] == "pl"
    assert report["members"] == 5
    assert "finished in" in err


def test_validate_reports_missing_constant(capsys, tmp_path):
    doc = dict(INDISCRETE_SPACE, topology=["0"])
    code, report, _ = run_json(capsys, "validate", write_doc(tmp_path, "s.json", doc))
    assert code == 1
    assert report["valid"] is False
    assert [v["axiom"] for v in report["violations"]] == ["i"]


def test_validate_reports_missing_join_with_witness(capsys, tmp_path):
    doc = dict(FINITE_SPACE, topology=["0", "m1", "m2", "1"])
    code, report, _ = run_json(capsys, "validate", write_doc(tmp_path, "s.json", doc))
    assert code == 1
    violations = report["violations"]
    assert [v["axiom"] for v in violations] == ["iii"]
    assert violations[0]["witnesses"][-1] == {"a": "1/2", "b": "1/3"}


def test_classify_set_alpha(capsys):
    code, report, _ = run_json(capsys, "classify", "set", "alpha", "--space", "example1.json")
    assert code == 0
    assert report["verdicts"] == {
        "open": False,
        "semiopen": True,
        "somewhat_open": True,
        "somewhat_semiopen": True,
    }
    assert report["evidence"]["semi_interior"] == report["evidence"]["semi_closure"]
    assert report["evidence"]["interior"] == {
        "breakpoints": [["0", "0"], ["1/2", "0"], ["1", "1"]]
    }


def test_classify_set_beta(capsys):
    code, report, _ = run_json(capsys, "classify", "set", "beta", "--space", "example1.json")
    assert code == 0
    assert report["verdicts"]["semiopen"] is False
    assert report["verdicts"]["somewhat_open"] is True
    assert report["evidence"]["closure"] == {"breakpoints": [["0", "1"], ["1", "1"]]}


def test_classify_reserved_name(capsys):
    code, report, _ = run_json(capsys, "classify", "set", "0", "--space", "example1.json")
    assert code == 0
    assert all(report["verdicts"].values())


def test_classify_unknown_name(capsys):
    code, out, err = run(capsys, "classify", "set", "ghost", "--space", "example1.json")
    assert code == 2
    assert out == ""
    assert "error[unresolved-name]" in err


def test_classify_fn(capsys, tmp_path):
    path = write_doc(tmp_path, "fn.json", FUNCTION_DOC)
    code, report, _ = run_json(capsys, "classify", "fn", "--fn", path)
    assert code == 0
    assert report["map"] == {"a": "u", "b": "v"}
    assert report["verdicts"]["fuzzy_continuous"] is True
    assert report["verdicts"]["fuzzy_open"] is False
    assert "fuzzy_open" in report["witnesses"]
    assert "fuzzy_continuous" not in report["witnesses"]


def test_search_found(capsys, tmp_path):
    path = write_doc(tmp_path, "s.json", FINITE_SPACE)
    code, report, _ = run_json(
        capsys, "search", "--target", "semiopen-not-open", "--space", path, "--grid", "2"
    )
    assert code == 0
    assert report["found"] is True
    assert report["witness"] == {"a": "0", "b": "1/2"}
    assert report["witness_verdicts"]["semiopen"] is True
    assert report["witness_verdicts"]["open"] is False


def test_search_not_found(capsys, tmp_path):
    path = write_doc(tmp_path, "s.json", INDISCRETE_SPACE)
    code, report, _ = run_json(
        capsys, "search", "--target", "semiopen-not-open", "--space", path, "--grid", "2"
    )
    assert code == 1
    assert report["found"] is False
    assert report["witness"] is None


def test_search_rejects_bad_targets(capsys, tmp_path):
    path = write_doc(tmp_path, "s.json", FINITE_SPACE)
    for target in ("semiopen", "open-not-open", "shiny-not-open"):
        code, out, err = run(capsys, "search", "--target", target, "--space", path, "--grid", "2")
        assert code == 2
        assert out == ""
        assert "error" in err


def test_search_needs_a_finite_space(capsys):
    code, _, err = run(
        capsys, "search", "--target", "semiopen-not-open", "--space", "example1.json", "--grid", "2"
    )
    assert code == 2
    assert "error[schema]" in err


def test_verify_is_deterministic(capsys):
    argv = ("verify", "--seeds", "6", "--universe-size", "2", "--grid", "2")
    code_a, out_a, _ = run(capsys, "--format", "json", *argv)
    code_b, out_b, _ = run(capsys, "--format", "json", *argv)
    assert code_a == code_b == 0
    assert out_a == out_b
    report = json.loads(out_a)
    assert report["ok"] is True
    assert report["spaces_checked"] == 6
    assert report["failures"] == []


def test_float_document_is_an_input_error(capsys, tmp_path):
    path = tmp_path / "s.json"
    path.write_text('{"kind": "finite", "universe": ["a"], "sets": {"s": {"a": 0.5}}, "topology": ["0"], "topology_is": "complete"}')
    code, out, err = run(capsys, "validate", str(path))
    assert code == 2
    assert out == ""
    assert "error[float-literal]" in err


def test_missing_file(capsys):
    code, _, err = run(capsys, "validate", "nope.json")
    assert code == 2
    assert "error[missing-file]" in err


def test_cap_flag_stops_generation(capsys, tmp_path):
    path = write_doc(tmp_path, "s.json", SUBBASIS_SPACE)
    code, out, err = run(capsys, "validate", path, "--cap", "3")
    assert code == 3
    assert out == ""
    assert "error[cap]" in err


def test_cap_env_variable(capsys, tmp_path, monkeypatch):
    path = write_doc(tmp_path, "s.json", SUBBASIS_SPACE)
    monkeypatch.setenv("FTOP_CAP", "3")
    code, _, err = run(capsys, "validate", path)
    assert code == 3 and "error[cap]" in err

    code, report, _ = run_json(capsys, "validate", path, "--cap", "100")
    assert code == 0 and report["members"] == 5

    monkeypatch.setenv("FTOP_CAP", "many")
    code, _, err = run(capsys, "validate", path)
    assert code == 2 and "error[bad-cap]" in err


def test_format_flag_works_in_both_positions(capsys):
    code_a, out_a, _ = run(capsys, "--format", "json", "validate", "example1.json")
    code_b, out_b, _ = run(capsys, "validate", "example1.json", "--format", "json")
    assert code_a == code_b == 0
    assert out_a == out_b
    json.loads(out_a)


def test_text_format_is_the_default(capsys):
    code, out, _ = run(capsys, "validate", "example1.json")
    assert code == 0
    assert "valid: true" in out
    with pytest.raises(json.JSONDecodeError):
        json.loads(out)
