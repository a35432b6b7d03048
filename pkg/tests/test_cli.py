import json
import subprocess
import sys
from fractions import Fraction

import pytest

from jumploci.cli import main, run
from jumploci.cupdata import cup_config_torus
from jumploci.exact.scalar import sqrt
from jumploci.fixtures import fixture, fixture_names
from jumploci.serialize import (
    cup_from_json,
    cup_to_json,
    dumps,
    graph_from_json,
    graph_to_json,
    parse_polynomial,
    scalar_from_json,
    subspace_from_json,
    validate,
)
from jumploci.errors import InputError
from jumploci.artin import braid_graph


def write(tmp_path, doc, name="in.json"):
    p = tmp_path / name
    p.write_text(json.dumps(doc))
    return str(p)


def call(*argv):
    text, code = run(list(argv))
    return json.loads(text), code


class TestSerialize:
    def test_cup_round_trip(self):
        c = cup_config_torus(2)
        assert cup_from_json(json.loads(dumps(cup_to_json(c)))) == c

    def test_graph_labels_round_trip(self):
        b = braid_graph(4)
        lg = graph_from_json(graph_to_json(b.graph, b.labels))
        assert lg.labels == b.labels

    def test_no_floats(self):
        with pytest.raises(InputError):
            scalar_from_json(0.5)
        assert scalar_from_json("1+2√2") == 1 + 2 * sqrt(2)

    def test_schema_error_names_path(self):
        with pytest.raises(InputError, match="mu/0"):
            validate({"n": 2, "m": 1, "mu": [[0, 1]]}, "cup")

    def test_subspace_by_equations(self):
        s = subspace_from_json({"equations": [["0", "0", "2", "1"]]}, 4)
        assert s.dim == 3

    def test_polynomial_parser(self):
        names = ["x1", "x2"]
        f = parse_polynomial("x1^2 - 2*x2^2", names)
        g = parse_polynomial("(x1 - √2 x2)*(x1 + √2*x2)", names)
        assert f == g
        assert parse_polynomial("t1^-1 - 1/2", ["t1"]).terms == {(-1,): 1, (0,): Fraction(-1, 2)}

    @pytest.mark.parametrize("text", ["x1 / x2", "x1 ** x2", "__import__('os')", "x3", "x1 ^ (1/2)"])
    def test_polynomial_parser_rejects(self, text):
        with pytest.raises(InputError):
            parse_polynomial(text, ["x1", "x2"])


class TestCommands:
    def test_cup(self):
        out, code = call("cup", "--fixture", "irrational-resonance")
        assert code == 0 and out["cup"]["m"] == 3

    def test_res_member(self):
        out, code = call("res-member", "--fixture", "irrational-resonance")  # no z
        assert code == 2 and "'z'" in out["error"]

    def test_res_member_points(self, tmp_path):
        doc = fixture("irrational-resonance")
        doc["z"] = ["0", "0", "1", "0"]
        out, code = call("res-member", "--in", write(tmp_path, doc))
        assert code == 0 and out["member"]
        doc["z"] = ["1", "1", "0", "0"]
        out, code = call("res-member", "--in", write(tmp_path, doc))
        assert code == 1 and not out["member"]

    def test_res_contains_over_sqrt2(self, tmp_path):
        doc = fixture("irrational-resonance")
        doc["subspace"] = {"equations": [["1", "-√2", "0", "0"]]}
        out, code = call("res-contains", "--in", write(tmp_path, doc), "--sqrt", "2")
        assert code == 0 and out["contained"]
        out, code = call("res-contains", "--in", write(tmp_path, doc), "--sqrt", "3")
        assert code == 2

    def test_res_minors(self):
        out, code = call("res-minors", "--fixture", "z2")
        assert code == 0 and out["minors"] == ["-x2", "x1"]

    def test_char_member(self, tmp_path):
        doc = fixture("trefoil")
        doc["character"] = {"t": ["2", "2"]}
        out, code = call("char-member", "--in", write(tmp_path, doc))
        assert code == 1 and out["twisted_b1"] == 0

    def test_alex_matrix(self):
        out, code = call("alex-matrix", "--fixture", "z2")
        assert code == 0 and out["rows"] == [["-t2 + 1", "t1 - 1"]]

    def test_tau1(self, tmp_path):
        doc = {"n": 2, "polynomials": ["(t1-1)*(t2-1)"]}
        out, code = call("tau1", "--in", write(tmp_path, doc))
        assert code == 0
        assert sorted(out["tau1"]["subspaces"]) == [[["0", "1"]], [["1", "0"]]]

    def test_tc_compare(self):
        out, code = call("tc-compare", "--fixture", "A2134")
        assert code == 0 and out["verdict"] == "equal"
        out, code = call("tc-compare", "--fixture", "circle-bundle-g2", "--k", "3")
        assert code == 1 and out["verdict"] == "strictly-contained"

    def test_battery_a2134(self):
        out, code = call("battery", "--fixture", "A2134")
        assert code == 1
        assert out["failed"] == ["isotropicity", "intersections", "filtration"]
        assert all(out["tests"][t]["witnesses"] for t in out["failed"])

    def test_battery_surface(self):
        out, code = call("battery", "--fixture", "surface-g2")
        assert code == 0 and out["passed"]

    def test_raag(self):
        out, code = call("raag", "verdict", "--fixture", "c4")
        assert code == 0 and out["quasi_kahler"] and not out["kahler"]
        out, code = call("raag", "resonance", "--fixture", "p3")
        assert out["subsets"] == [["v1", "v3"]]
        out, code = call("raag", "subtori", "--fixture", "k3")
        assert out["subtori"] == []

    def test_artin_verdict(self):
        out, code = call("artin-verdict", "--fixture", "braid-5")
        assert code == 0 and out["verdict"] and out["contraction"]["vertices"] == ["s1"]

    def test_fixtures(self):
        out, code = call("fixtures")
        assert code == 0 and sorted(out) == fixture_names()
        out, code = call("fixtures", "A2134")
        assert out["presentation"]["generators"] == ["x1", "x2", "x3", "x4"]

    def test_resource_bound(self, tmp_path):
        doc = {"n": 1, "polynomials": [" + ".join(f"t1^{k}" for k in range(14)) + " - 14"]}
        out, code = call("tau1", "--in", write(tmp_path, doc), "--support-bound", "12")
        assert code == 3 and out["kind"] == "resource-bound"

    def test_input_errors(self, tmp_path):
        bad = tmp_path / "bad.json"
        bad.write_text("{not json")
        out, code = call("cup", "--in", str(bad))
        assert code == 2 and "line 1" in out["error"]
        out, code = call("cup", "--in", write(tmp_path, {"generators": ["x"], "relators": [5]}))
        assert code == 2 and "relators/0" in out["error"]
        out, code = call("cup", "--fixture", "trefoil")
        assert code == 2
        out, code = call("cup", "--fixture", "nope")
        assert code == 2


class TestContract:
    @pytest.mark.parametrize("argv", [
        ["battery", "--fixture", "A2134", "--seed", "5"],
        ["tc-compare", "--fixture", "irrational-resonance"],
        ["raag", "resonance", "--fixture", "c4"],
        ["cup", "--fixture", "heisenberg"],
    ])
    def test_deterministic_and_round_trip(self, argv):
        a, code_a = run(argv)
        b, code_b = run(argv)
        assert a == b and code_a == code_b
        assert dumps(json.loads(a)) == a

    def test_main_writes_out_file(self, tmp_path, capsys):
        target = tmp_path / "out.json"
        code = main(["raag", "verdict", "--fixture", "k4", "--out", str(target)])
        assert code == 0 and json.loads(target.read_text())["kahler"]
        assert capsys.readouterr().out == ""

    def test_main_errors_go_to_stderr(self, capsys):
        assert main(["cup", "--fixture", "nope"]) == 2
        err = capsys.readouterr()
        assert err.out == "" and json.loads(err.err)["kind"] == "input"

    def test_stdin_subprocess(self):
        doc = json.dumps({"generators": ["x", "y"], "relators": ["(x,y)"]})
        proc = subprocess.run(
            [sys.executable, "-m", "jumploci.cli", "cup"], input=doc, capture_output=True, text=True, check=False
        )
        assert proc.returncode == 0
        assert json.loads(proc.stdout)["cup"]["mu"] == [[0, 1, ["1"]]]
