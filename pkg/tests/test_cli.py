"""End-to-end checks for the command line front end.

Everything goes through ``solvpoly.cli.main`` with an argv list, so the
tests exercise exactly what a shell user gets: parsing, exit codes and
the canonical JSON output mode.
"""

import json

import pytest

from solvpoly import fixtures as corpus
from solvpoly.algebra import UnknownGenerator
from solvpoly.cli import ParseError, SchemaError, main, parse_problem


def run(capsys, *argv):
    """Invoke the CLI and return (exit_code, stdout, stderr)."""
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, "--json", *argv)
    return code, json.loads(out)


def problem_file(tmp_path, doc, name="problem.json"):
    path = tmp_path / name
    path.write_text(json.dumps(doc))
    return str(path)


def base_doc(**overrides):
    doc = {
        "field": {"kind": "Rationals"},
        "generators": ["x", "y"],
        "order": {"kind": "grlex"},
        "relations": ["y*x = x*y"],
        "module": {"rank": 1},
        "submodule_generators": ["x", "y"],
    }
    doc.update(overrides)
    return doc


# ---------------------------------------------------------------------------
# parse_problem


def test_parse_problem_takes_dict_text_and_path(tmp_path):
    doc = base_doc()
    from_dict = parse_problem(doc)
    from_text = parse_problem(json.dumps(doc))
    from_path = parse_problem(problem_file(tmp_path, doc))
    for pf in (from_dict, from_text, from_path):
        assert pf.names == ("x", "y")
        assert pf.module.rank == 1


def test_parse_error_carries_line_and_column():
    with pytest.raises(ParseError) as info:
        parse_problem('{"field": \n  }')
    message = str(info.value)
    assert "line 2" in message
    assert "column" in message


def test_source_that_is_not_json_text_is_read_as_a_path():
    with pytest.raises(ParseError, match="cannot read"):
        parse_problem("no/such/file.json")


def test_non_object_document_is_a_schema_error(tmp_path):
    path = tmp_path / "list.json"
    path.write_text("[1, 2, 3]")
    with pytest.raises(SchemaError, match="JSON object"):
        parse_problem(str(path))


@pytest.mark.parametrize("doc", [
    base_doc(extra_key=1),
    {k: v for k, v in base_doc().items() if k != "generators"},
    base_doc(generators=["x", "x"]),
    base_doc(degrees=[1, 2, 3]),
    base_doc(degrees=[0, 1]),
    base_doc(order={"kind": "mystery"}),
    base_doc(order={"kind": "grlex", "priority": [0, 0]}),
    base_doc(relations="y*x = x*y"),
    base_doc(module={"rank": 0}),
    base_doc(module={"rank": 1, "shifts": [1, 2]}),
    base_doc(module={"rank": 1, "order": "sideways"}),
    base_doc(module={"rank": 2}, submodule_generators=["x"]),
    base_doc(options=[]),
])
def test_schema_rejections(doc):
    with pytest.raises(SchemaError):
        parse_problem(doc)


def test_algebra_construction_is_lazy():
    # Shape validation happens eagerly, algebra construction on demand,
    # so verify-presentation can report on files gb would reject.
    pf = parse_problem(base_doc(relations=["y*x = x*w"]))
    assert pf.names == ("x", "y")
    with pytest.raises(UnknownGenerator):
        pf.algebra


# ---------------------------------------------------------------------------
# fixtures package


def test_fixture_corpus_loads():
    names = corpus.all_names()
    assert set(names) == {"comm2", "weyl1", "qplane", "ex12", "ex14", "qheis"}
    for name in names:
        pf = corpus.load(name)
        assert pf.algebra.n == len(pf.names)
    with pytest.raises(KeyError):
        corpus.path("nonexistent")


# ---------------------------------------------------------------------------
# exit codes


def test_gb_succeeds_on_corpus_fixture(capsys):
    code, out, err = run(capsys, "gb", corpus.path("ex12"))
    assert code == 0
    assert err == ""
    assert "basis" in out


def test_member_negative_exits_one(capsys, tmp_path):
    doc = json.loads(open(corpus.path("ex12")).read())
    doc["options"] = {"element": "a1"}
    code, payload = run_json(capsys, "member", problem_file(tmp_path, doc))
    assert code == 1
    assert payload["member"] is False
    assert payload["normal_form"] == "a1"


def test_member_positive_exits_zero(capsys):
    code, payload = run_json(capsys, "member", corpus.path("ex12"))
    assert code == 0
    assert payload["member"] is True
    assert payload["normal_form"] == "0"


def test_graded_check_verdicts(capsys):
    code, payload = run_json(capsys, "graded-check", corpus.path("comm2"))
    assert (code, payload["graded"]) == (0, True)
    code, payload = run_json(capsys, "graded-check", corpus.path("weyl1"))
    assert (code, payload["graded"]) == (1, False)
    assert payload["violations"]


def test_zero_lambda_is_a_negative_for_gb(capsys, tmp_path):
    doc = base_doc(relations=["y*x = 1"], submodule_generators=["x"])
    code, out, err = run(capsys, "gb", problem_file(tmp_path, doc))
    assert code == 1
    assert out == ""
    assert err.startswith("not solvable type:")


def test_zero_lambda_still_gets_a_presentation_report(capsys, tmp_path):
    # verify-presentation analyses the free relations itself, so the
    # same file that kills gb produces a structured verdict here.
    doc = base_doc(relations=["y*x = 1"], submodule_generators=["x"])
    code, payload = run_json(capsys, "verify-presentation",
                             problem_file(tmp_path, doc))
    assert code == 1
    assert payload["verdict"] == "ShapeViolation"
    assert payload["violations"]


def test_malformed_json_exits_two(capsys, tmp_path):
    path = tmp_path / "broken.json"
    path.write_text('{"field": {')
    code, out, err = run(capsys, "gb", str(path))
    assert code == 2
    assert "line" in err


def test_unknown_generator_exits_two(capsys, tmp_path):
    doc = base_doc(submodule_generators=["x", "z"])
    code, out, err = run(capsys, "gb", problem_file(tmp_path, doc))
    assert code == 2
    assert err.startswith("error:")


def test_schema_error_exits_two(capsys, tmp_path):
    code, out, err = run(capsys, "gb",
                         problem_file(tmp_path, base_doc(surprise=1)))
    assert code == 2
    assert "surprise" in err


def test_missing_file_exits_two(capsys, tmp_path):
    code, out, err = run(capsys, "gb", str(tmp_path / "absent.json"))
    assert code == 2


# ---------------------------------------------------------------------------
# canonical JSON output


def test_json_output_is_byte_identical_across_runs(capsys):
    code1, out1, _ = run(capsys, "--json", "gb", "--reduce",
                         corpus.path("qheis"))
    code2, out2, _ = run(capsys, "gb", "--reduce", "--json",
                         corpus.path("qheis"))
    assert code1 == code2 == 0
    assert out1 == out2
    assert out1.endswith("\n")


def test_json_output_is_canonical_form(capsys):
    _, out, _ = run(capsys, "--json", "pdim", corpus.path("comm2"))
    payload = json.loads(out)
    recoded = json.dumps(payload, sort_keys=True,
                         separators=(",", ":")) + "\n"
    assert out == recoded


def test_json_flag_accepted_before_or_after_subcommand(capsys):
    _, before, _ = run(capsys, "--json", "graded-check", corpus.path("comm2"))
    _, after, _ = run(capsys, "graded-check", "--json", corpus.path("comm2"))
    assert before == after


def test_human_mode_differs_from_json_mode(capsys):
    _, human, _ = run(capsys, "pdim", corpus.path("comm2"))
    with pytest.raises(json.JSONDecodeError):
        json.loads(human)
    assert "pdim" in human


# ---------------------------------------------------------------------------
# payload shapes per command


def test_verify_presentation_reports_lambdas(capsys):
    code, payload = run_json(capsys, "verify-presentation",
                             corpus.path("ex14"))
    assert code == 0
    assert payload["verdict"] == "SolvableTypeCertified"
    assert payload["overlaps_checked"] == 1
    assert payload["lambdas"]["X3*X1"] == "5"
    assert payload["lambdas"]["X1*X2"] == "1"


def test_verify_presentation_max_steps_block(capsys):
    code, payload = run_json(capsys, "verify-presentation", "--max-steps",
                             "10", corpus.path("ex14"))
    assert code == 0
    comp = payload["completion"]
    assert comp["complete"] is True
    assert comp["basis_size"] == 3


def test_gb_reduced_payload_for_ex12(capsys):
    code, payload = run_json(capsys, "gb", "--reduce", corpus.path("ex12"))
    assert code == 0
    assert payload["basis"] == ["a2", "a3"]
    assert payload["reduced"] is True
    assert payload["minimal"] is True
    assert payload["truncated_at"] is None
    assert len(payload["V"]) == len(payload["basis"])
    assert len(payload["U"]) == 2


def test_gb_truncate_flag_sets_marker(capsys):
    code, payload = run_json(capsys, "gb", "--truncate", "3",
                             corpus.path("comm2"))
    assert code == 0
    assert payload["truncated_at"] == 3


def test_syz_payload_annihilates(capsys):
    code, payload = run_json(capsys, "syz", corpus.path("comm2"))
    assert code == 0
    assert payload["annihilates"] is True
    assert payload["rank"] == len(payload["shifts"])
    assert payload["syzygies"]


def test_resolve_and_pdim_agree(capsys):
    # Both commands resolve the quotient of the free module by the
    # submodule; for the Koszul pair that is the full length-2 ladder.
    _, resolved = run_json(capsys, "resolve", corpus.path("comm2"))
    _, pdim = run_json(capsys, "pdim", corpus.path("comm2"))
    assert resolved["length"] == 2
    assert resolved["ranks"] == [1, 2, 1]
    assert pdim["pdim"] == 2
    assert pdim["ranks"] == [1, 2, 1]


def test_min_gens_drops_nothing_for_koszul_pair(capsys):
    code, payload = run_json(capsys, "min-gens", corpus.path("comm2"))
    assert code == 0
    assert payload["count"] == 2
    assert sorted(payload["generators"]) == ["x", "y"]


def test_graded_resolve_betti_table(capsys):
    code, payload = run_json(capsys, "graded-resolve", "--betti",
                             corpus.path("comm2"))
    assert code == 0
    assert payload["flavor"] == "Graded"
    assert payload["ranks"] == [1, 2, 1]
    assert payload["betti"] == {"0": {"0": 1}, "1": {"1": 2}, "2": {"2": 1}}


def test_graded_resolve_rejects_filtered_algebra(capsys):
    code, out, err = run(capsys, "graded-resolve", corpus.path("weyl1"))
    assert code == 2
    assert err.startswith("error:")


def test_assoc_graded_of_weyl_is_commutative(capsys):
    code, payload = run_json(capsys, "assoc-graded", corpus.path("weyl1"))
    assert code == 0
    assert payload["generators"] == ["x", "y"]
    assert payload["relations"] == ["y*x = x*y"]


def test_rees_payload_names_homogenizer(capsys):
    code, payload = run_json(capsys, "rees", corpus.path("weyl1"))
    assert code == 0
    assert payload["homogenizing_generator"] == "Z"
    assert "y*x = x*y + Z^2" in payload["relations"]
    assert "Z*x = x*Z" in payload["relations"]
    assert "Z*y = y*Z" in payload["relations"]


def test_filtered_resolve_payload(capsys):
    code, payload = run_json(capsys, "filtered-resolve", corpus.path("ex12"))
    assert code == 0
    assert payload["flavor"] == "Filtered"
    assert payload["ranks"][0] >= 1


def test_filtered_resolve_shifts_override(capsys, tmp_path):
    doc = json.loads(open(corpus.path("comm2")).read())
    doc["module"] = {"rank": 2}
    doc["submodule_generators"] = [["x", "0"], ["0", "y"]]
    path = problem_file(tmp_path, doc)
    code, payload = run_json(capsys, "filtered-resolve", "--shifts", "0,3",
                             path)
    assert code == 0
    assert payload["shifts"][0] == [0, 3]
    code, out, err = run(capsys, "filtered-resolve", "--shifts", "0,1,2",
                         path)
    assert code == 2


def test_transfer_check_accepts_a_basis(capsys, tmp_path):
    # {a2, a3} is the reduced basis of the ex12 submodule, so the
    # verdicts hold on all three sides.
    doc = json.loads(open(corpus.path("ex12")).read())
    doc["submodule_generators"] = ["a2", "a3"]
    code, payload = run_json(capsys, "transfer-check",
                             problem_file(tmp_path, doc))
    assert code == 0
    assert payload["agree"] is True
    assert payload["in_algebra"] is True


def test_transfer_check_rejects_a_non_basis(capsys):
    # The raw ex12 generators are not a basis (a3 only appears after
    # completion), and the failure transfers coherently.
    code, payload = run_json(capsys, "transfer-check", corpus.path("ex12"))
    assert code == 1
    assert payload["in_algebra"] is False
    assert payload["agree"] is True


def test_oracle_staircase_degree_flag(capsys):
    code, payload = run_json(capsys, "oracle-staircase", "--oracle-degree",
                             "4", corpus.path("comm2"))
    assert code == 0
    assert payload["degree_bound"] == 4
    assert payload["staircase"]
    _, default = run_json(capsys, "oracle-staircase", corpus.path("comm2"))
    assert default["degree_bound"] == 6
