"""Assembly, serialization, and validation of the analysis bundle.

The bundle is the single JSON artifact a violated check produces: formula
text with its span table, the violating traces, the machine runs behind
them, the minimized cause set, per-operator statements, per-node verdicts,
and an optional DOT rendering of the machine.  Everything downstream
(storage, HTTP, the browser frontend) consumes this one shape.
"""

from __future__ import annotations

import json
from importlib import resources

import jsonschema

from .checker import replay
from .explain import (
    AtomFact,
    CauseSet,
    ExplanationStatement,
    Verdict,
    generate_statements,
    mark_relevant,
    minimize,
    verbalize,
)
from .formula import QuantifiedFormula, render_formula
from .machine import MooreMachine, to_dot
from .traces import TraceAssignment, VarDecl, assignment_json


def assemble_bundle(
    f: QuantifiedFormula,
    assignment: TraceAssignment,
    cause: CauseSet,
    verdicts: dict[int, Verdict],
    statements: list[ExplanationStatement],
    var_decls: list[VarDecl],
    state_sequences: dict[str, list[int]] | None = None,
    dot: str | None = None,
) -> dict:
    """Bundle dict from already-computed analysis pieces."""
    text, nodes = render_formula(f)
    causes = [
        {
            "trace": var,
            "atom": atom,
            "t": t,
            "subformulas": sorted(cause.supporting.get((var, atom, t), ())),
        }
        for var, atom, t in sorted(cause.triples)
    ]
    statement_rows = [
        {
            "statementId": s.statement_id,
            "colorIndex": s.color_index,
            "subformulaId": s.subformula_id,
            "temporalOperator": s.temporal_operator,
            "verdict": s.verdict.value,
            "atomFacts": [
                {
                    "atomName": fact.atom_name,
                    "positions": list(fact.positions),
                    "traceRelation": fact.trace_relation,
                    "constancy": fact.constancy,
                }
                for fact in s.atom_facts
            ],
        }
        for s in statements
    ]
    return {
        "formula": {"text": text, "nodes": nodes},
        "varDecls": [{"name": d.name, "kind": d.kind} for d in var_decls],
        "stemLen": assignment.stem_len,
        "loopLen": assignment.loop_len,
        "traces": assignment_json(assignment),
        "stateSequences": state_sequences,
        "causes": causes,
        "statements": statement_rows,
        "verdicts": {str(i): v.value for i, v in sorted(verdicts.items())},
        "dot": dot,
    }


def machine_var_decls(machine: MooreMachine) -> list[VarDecl]:
    decls = [VarDecl(name, "input") for name in machine.inputs]
    decls += [VarDecl(name, "output") for name in machine.outputs]
    decls += [VarDecl(name, "latch") for name in machine.latch_aps]
    return decls


def analyze_violation(
    f: QuantifiedFormula,
    assignment: TraceAssignment,
    machine: MooreMachine | None = None,
    var_decls: list[VarDecl] | None = None,
) -> dict:
    """Full explanation pipeline for a violating assignment.

    With a machine the traces are replayed to state runs and a DOT graph is
    attached; without one (externally produced counterexamples) those two
    fields are null.  Raises NotViolated when the formula in fact holds.
    """
    if assignment.vars != f.trace_vars:
        assignment = assignment.rebind(f.trace_vars)
    cause, verdict_map = mark_relevant(f.body, assignment)
    cause = minimize(cause, f.body, assignment)
    statements = generate_statements(f, assignment, cause, verdict_map)

    state_sequences: dict[str, list[int]] | None = None
    dot: str | None = None
    if machine is not None:
        state_sequences = {
            var: list(replay(machine, trace)) for var, trace in assignment.binding
        }
        dot = to_dot(machine)
        if var_decls is None:
            var_decls = machine_var_decls(machine)
    if var_decls is None:
        names = sorted({atom for atom, _ in f.body.atoms()})
        var_decls = [VarDecl(name, "output") for name in names]

    return assemble_bundle(
        f,
        assignment,
        cause,
        verdict_map,
        statements,
        var_decls,
        state_sequences=state_sequences,
        dot=dot,
    )


def bundle_json(bundle: dict) -> str:
    """Deterministic serialization: sorted keys, two-space indent."""
    return json.dumps(bundle, indent=2, sort_keys=True) + "\n"


def _schema() -> dict:
    ref = resources.files("hyperscope").joinpath("schemas/bundle.schema.json")
    return json.loads(ref.read_text(encoding="utf-8"))


def validate_bundle(bundle: dict) -> None:
    """Raise jsonschema.ValidationError when the bundle breaks the contract."""
    jsonschema.validate(bundle, _schema())


def statement_lines(bundle: dict) -> list[str]:
    """Verbalized statements of a serialized bundle, for terminal output."""
    lines = []
    for row in bundle["statements"]:
        stmt = ExplanationStatement(
            statement_id=row["statementId"],
            color_index=row["colorIndex"],
            subformula_id=row["subformulaId"],
            temporal_operator=row["temporalOperator"],
            verdict=Verdict(row["verdict"]),
            atom_facts=tuple(
                AtomFact(
                    fact["atomName"],
                    tuple(fact["positions"]),
                    fact["traceRelation"],
                    fact["constancy"],
                )
                for fact in row["atomFacts"]
            ),
        )
        lines.append(verbalize(stmt))
    return lines


def relevant_columns(bundle: dict) -> dict[str, list[str]]:
    """Filter metadata: per kind, the variables the cause set touches.

    This is what the frontend's filter mode reduces the trace columns to.
    """
    kind_of = {d["name"]: d["kind"] for d in bundle["varDecls"]}
    out: dict[str, list[str]] = {"input": [], "output": [], "latch": []}
    seen: set[str] = set()
    for cause in bundle["causes"]:
        name = cause["atom"]
        if name in seen or name not in kind_of:
            continue
        seen.add(name)
        out[kind_of[name]].append(name)
    for names in out.values():
        names.sort()
    return out
