"""Explanation bundle assembly, serialization, and schema validation."""

import json

import pytest
from jsonschema import ValidationError

from hyperscope import (
    analyze_violation,
    bundle_json,
    find_counterexample,
    parse_counterexample,
    parse_formula,
    relevant_columns,
    statement_lines,
    validate_bundle,
)
from hyperscope.bundle import machine_var_decls
from hyperscope.casegen import build_scale_case
from hyperscope.traces import VarDecl

BUNDLE_FIELDS = {
    "formula",
    "varDecls",
    "stemLen",
    "loopLen",
    "traces",
    "stateSequences",
    "causes",
    "statements",
    "verdicts",
    "dot",
}


@pytest.fixture(scope="module")
def drone_bundle(drone_machine, drone_formula):
    res = find_counterexample(drone_machine, drone_formula, bound=8)
    return analyze_violation(drone_formula, res.assignment, machine=drone_machine)


class TestAssembly:
    def test_exactly_the_declared_fields(self, drone_bundle):
        assert set(drone_bundle) == BUNDLE_FIELDS
        validate_bundle(drone_bundle)

    def test_formula_block_mirrors_node_table(self, drone_bundle, drone_formula):
        assert drone_bundle["formula"]["text"] == drone_formula.text
        nodes = drone_bundle["formula"]["nodes"]
        assert [n["id"] for n in nodes] == list(range(len(drone_formula.nodes)))

    def test_shape_and_traces(self, drone_bundle):
        assert drone_bundle["stemLen"] == 2
        assert drone_bundle["loopLen"] == 2
        assert [t["var"] for t in drone_bundle["traces"]] == ["p", "q"]
        assert drone_bundle["traces"][0]["stem"] == [[], []]
        assert drone_bundle["traces"][0]["loop"] == [["bound"], ["emergency"]]

    def test_state_sequences_and_dot(self, drone_bundle):
        assert drone_bundle["stateSequences"] == {
            "p": [0, 0, 0, 3],
            "q": [0, 1, 2, 2],
        }
        assert drone_bundle["dot"].startswith("digraph machine {")
        assert "penwidth" not in drone_bundle["dot"]

    def test_causes_sorted_with_atom_occurrence_links(self, drone_bundle):
        causes = drone_bundle["causes"]
        assert [(c["trace"], c["atom"], c["t"]) for c in causes] == [
            ("p", "bound", 2),
            ("p", "emergency", 3),
            ("q", "bound", 2),
            ("q", "emergency", 3),
        ]
        by_key = {(c["trace"], c["atom"]): c["subformulas"] for c in causes}
        assert by_key[("p", "bound")] == [3]
        assert by_key[("q", "bound")] == [4]
        assert by_key[("p", "emergency")] == [7]
        assert by_key[("q", "emergency")] == [8]

    def test_verdict_map_keys_are_node_id_strings(self, drone_bundle):
        assert set(drone_bundle["verdicts"]) == {str(i) for i in range(9)}
        assert drone_bundle["verdicts"]["0"] == "violated"

    def test_machine_var_decls(self, drone_machine, fig1_circuit_machine):
        decls = machine_var_decls(drone_machine)
        assert [(d.name, d.kind) for d in decls] == [
            ("up", "input"),
            ("bound", "input"),
            ("emergency", "output"),
        ]
        kinds = {d.name: d.kind for d in machine_var_decls(fig1_circuit_machine)}
        assert kinds["got_plain"] == "latch"
        assert kinds["i"] == "input" and kinds["o1"] == "output"


class TestMachineless:
    def test_nullable_fields_and_decl_fallback(self, drone_formula):
        text = (
            "cex traces=2 stem=2 loop=2\n"
            "0 2 bound 1\n0 3 emergency 1\n1 2 bound 1\n"
        )
        decls = [VarDecl("bound", "input"), VarDecl("emergency", "output")]
        a = parse_counterexample(text, decls).rebind(("p", "q"))
        bundle = analyze_violation(drone_formula, a)
        validate_bundle(bundle)
        assert bundle["stateSequences"] is None
        assert bundle["dot"] is None
        assert {(d["name"], d["kind"]) for d in bundle["varDecls"]} == {
            ("bound", "output"),
            ("emergency", "output"),
        }

    def test_scale_case_columns(self):
        case = build_scale_case()
        f = parse_formula(case.formula_text)
        a = parse_counterexample(case.cex_text, case.decls).rebind(f.trace_vars)
        bundle = analyze_violation(f, a, var_decls=case.decls)
        validate_bundle(bundle)
        cols = relevant_columns(bundle)
        assert cols["output"] == ["out11"]
        assert cols["latch"] == []
        assert set(cols["input"]) <= {"in0", "in1", "in2"}


class TestSerialization:
    def test_bytes_are_deterministic(self, drone_bundle):
        one = bundle_json(drone_bundle)
        two = bundle_json(json.loads(one))
        assert one == two
        assert one.endswith("\n")
        assert json.loads(one) == drone_bundle

    def test_statement_lines_match_verbalizer(self, drone_bundle):
        assert statement_lines(drone_bundle) == [
            "invariant (subformula 0) violated: bound agrees across traces"
            " (true) at step 2; emergency differs across traces at step 3"
        ]


class TestValidation:
    def test_missing_field_rejected(self, drone_bundle):
        broken = dict(drone_bundle)
        del broken["verdicts"]
        with pytest.raises(ValidationError):
            validate_bundle(broken)

    def test_extra_field_rejected(self, drone_bundle):
        broken = dict(drone_bundle)
        broken["notes"] = "hello"
        with pytest.raises(ValidationError):
            validate_bundle(broken)

    def test_bad_verdict_value_rejected(self, drone_bundle):
        broken = json.loads(bundle_json(drone_bundle))
        broken["verdicts"]["0"] = "broken"
        with pytest.raises(ValidationError):
            validate_bundle(broken)

    def test_bad_statement_operator_rejected(self, drone_bundle):
        broken = json.loads(bundle_json(drone_bundle))
        broken["statements"][0]["temporalOperator"] = "Z"
        with pytest.raises(ValidationError):
            validate_bundle(broken)
