import json

import pytest

from superrep.cli import main, parse_degrees, run_command, InputError
from superrep.exactnum import FieldTag
from superrep.specfile import SpecError, builtin_spec, bundled_path, load_spec, parse_spec, serialize_spec
from superrep.supermodule import isomorphic

C, R = FieldTag.COMPLEX, FieldTag.REAL


def _q1_doc():
    return json.loads(bundled_path("q1.json").read_text())


@pytest.fixture
def write(tmp_path):
    def _write(name, content):
        p = tmp_path / name
        p.write_text(content if isinstance(content, str) else json.dumps(content))
        return str(p)
    return _write


def test_bundled_q1_file():
    spec = parse_spec(bundled_path("q1.json"))
    names = [m.name for m in spec.modules]
    assert {"I", "Pi"} <= set(names)
    assert any(n.startswith("L[") for n in names) and any(n.startswith("C[") for n in names)
    assert spec.algebra.names == ("H", "Q")


def test_empty_file_gives_trivial_algebra(write):
    spec = parse_spec(write("empty.json", "{}"))
    assert spec.algebra.dim == 0 and spec.modules == []


def test_wrong_bracket_is_a_module_error(write):
    doc = _q1_doc()
    doc["algebra"]["brackets"] = [["Q", "Q", "H", "3"]]
    path = write("bad.json", doc)
    with pytest.raises(SpecError, match=r"bracket \[Q,Q\] not respected"):
        parse_spec(path)
    rep = run_command(["validate", path])
    assert rep.exit_code == 1 and rep.lines[0].startswith("FAIL")


def test_syntax_error_has_position(write):
    path = write("syntax.json", '{"field": "C",\n "algebra": {,}}')
    rep = run_command(["validate", path])
    assert rep.exit_code == 2 and f"{path}:2:" in rep.text()


def test_schema_and_reference_errors(write):
    assert run_command(["validate", write("s.json", {"field": "Q"})]).exit_code == 2
    doc = _q1_doc()
    doc["algebra"]["brackets"] = [["Q", "Q", "X", "2"]]
    rep = run_command(["validate", write("u.json", doc)])
    assert rep.exit_code == 2 and "unknown generator 'X'" in rep.text()
    assert run_command(["validate", "/nonexistent/file.json"]).exit_code == 2


def test_jacobi_failure_reported(write):
    doc = {"field": "C", "algebra": {"generators": [{"name": "H", "parity": "even"}, {"name": "Q", "parity": "odd"}],
                                     "brackets": [["Q", "Q", "H", "2"], ["H", "Q", "Q", "1"]]}}
    rep = run_command(["validate", write("j.json", doc)])
    assert rep.exit_code == 1 and "(Q,Q,Q)" in rep.text()


@pytest.mark.parametrize("name,field", [("trivial", C), ("trivial", R), ("q1", C), ("q1", R),
                                        ("clifford:1,1", R), ("clifford:2,0", C)])
def test_serialize_round_trip(name, field):
    spec = builtin_spec(name, field)
    again = load_spec(json.loads(json.dumps(serialize_spec(spec))))
    assert again.algebra == spec.algebra and len(again.modules) == len(spec.modules)
    for a, b in zip(spec.modules, again.modules):
        assert a.g_action == b.g_action and a.cliff_action == b.cliff_action
        assert (a.dim_even, a.dim_odd, a.graded) == (b.dim_even, b.dim_odd, b.graded)


def test_real_q1_needs_real_roots():
    with pytest.raises(SpecError):
        builtin_spec("q1", R, ["-4"])
    assert run_command(["kgroups", "--builtin", "q1", "--field", "R", "--samples", "-4"]).exit_code == 2


def test_degree_parsing():
    assert parse_degrees("2..4") == [2, 3, 4] and parse_degrees("3") == [3]
    for bad in ("4..2", "x", "-1..2"):
        with pytest.raises(InputError):
            parse_degrees(bad)


def test_text_and_json_agree():
    args = ["kgroups", "--builtin", "q1", "--degrees", "0..1"]
    text = run_command(args).text()
    doc = json.loads(run_command(args + ["--format", "json"]).render())
    for row in doc["degrees"]:
        line = next(l for l in text.splitlines() if l.split()[:1] == [str(row["degree"])])
        for key in ("R_Z2", "R+", "R-", "SR"):
            assert row[key]["text"] in line


def test_classify_reports_tags():
    doc = json.loads(run_command(["classify", "--builtin", "q1", "--format", "json"]).render())
    tags = {m["name"]: m["factors"][0] for m in doc["modules"]}
    assert tags["L[4]"]["tag"]["type"] == "Q" and tags["I"]["tag"]["type"] == "M"


def test_exactseq_variants():
    assert run_command(["exactseq", "--builtin", "trivial", "--field", "C", "--variant", "six-real"]).exit_code == 2
    rep = run_command(["exactseq", "--builtin", "trivial", "--field", "R", "--variant", "six-real",
                       "--degrees", "0..1", "--format", "json"])
    doc = json.loads(rep.render())
    assert rep.exit_code == 0 and [s["exact_nodes"] for s in doc["sequences"]] == [6, 6]


def test_main_prints_and_returns_code(capsys):
    assert main(["abs-table", "--field", "C", "--degrees", "0..1"]) == 0
    out = capsys.readouterr().out
    assert "Z" in out and "0" in out
    assert main(["abs-table", "--degrees", "5..1"]) == 2
