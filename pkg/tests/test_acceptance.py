"""Workbench acceptance suite.

Eight numbered end-to-end criteria, each printing one PASS/FAIL line so a
plain pytest run doubles as a checklist.  Criteria with a stated time
budget measure wall-clock time and fail when the budget is exceeded.
"""

import json
import random
import time
from contextlib import contextmanager

from fastapi.testclient import TestClient

from hyperscope import (
    Counterexample,
    Kleene,
    analyze_violation,
    eval3,
    eval_formula,
    extract_moore,
    find_counterexample,
    generate_statements,
    mark_relevant,
    minimize,
    oracle_eval,
    parse_aag,
    parse_counterexample,
    parse_formula,
    relevant_columns,
    replay,
    validate_bundle,
)
from hyperscope.casegen import build_scale_case
from hyperscope.explain import Verdict
from hyperscope.service import create_app

from .conftest import read_fixture
from .helpers import atom_universe, completions
from .strategies import random_assignment, random_body, random_circuit_text


@contextmanager
def criterion(capsys, number: int, title: str):
    """Print a single PASS/FAIL line for one acceptance criterion."""
    started = time.perf_counter()
    try:
        yield
    except BaseException:
        with capsys.disabled():
            print(f"[criterion {number}] FAIL  {title}")
        raise
    elapsed = time.perf_counter() - started
    with capsys.disabled():
        print(f"[criterion {number}] PASS  {title} ({elapsed:.2f}s)")


def test_criterion_1_observational_determinism(capsys, fig1_machine, od_formula):
    with criterion(capsys, 1, "observational determinism counterexample on the 3-state machine"):
        started = time.perf_counter()
        res = find_counterexample(fig1_machine, od_formula, bound=3)
        elapsed = time.perf_counter() - started
        assert elapsed < 1.0
        assert isinstance(res, Counterexample)
        a = res.assignment

        for t in range(a.position_count):
            assert a.value("p", "i", t) == a.value("q", "i", t)
        for t in range(1, a.position_count):
            p_out = (a.value("p", "o1", t), a.value("p", "o2", t))
            q_out = (a.value("q", "o1", t), a.value("q", "o2", t))
            assert p_out != q_out

        assert res.state_sequences == {"p": (0, 1), "q": (0, 2)}
        finals = {
            frozenset(fig1_machine.states[replay(fig1_machine, a.trace(v))[-1]].label)
            for v in ("p", "q")
        }
        assert finals == {frozenset({"o1"}), frozenset({"o2"})}


def test_criterion_2_arbiter_symmetry(capsys, arbiter_machine, symmetry_formula):
    with criterion(capsys, 2, "asymmetric arbiter: grant_0 on p true, grant_1 on q false at step 1"):
        res = find_counterexample(arbiter_machine, symmetry_formula, bound=8)
        assert isinstance(res, Counterexample)
        a = res.assignment
        assert a.value("p", "grant_0", 1) is True
        assert a.value("q", "grant_1", 1) is False

        _, verdicts = mark_relevant(symmetry_formula.body, a)
        assert verdicts[6] == Verdict.VIOLATED  # grant_0[p] <-> grant_1[q]


def test_criterion_3_drone_statement_facts(capsys, drone_machine, drone_formula):
    with criterion(capsys, 3, "drone statements: bound equal at 2, emergency unequal at 3"):
        res = find_counterexample(drone_machine, drone_formula, bound=8)
        a = res.assignment
        cause, verdicts = mark_relevant(drone_formula.body, a)
        cause = minimize(cause, drone_formula.body, a)
        statements = generate_statements(drone_formula, a, cause, verdicts)

        facts = [f for s in statements for f in s.atom_facts]
        assert [(f.atom_name, f.positions, f.trace_relation) for f in facts] == [
            ("bound", (2,), "equal"),
            ("emergency", (3,), "unequal"),
        ]
        assert facts[0].constancy == "alwaysTrue"


def test_criterion_4_evaluator_oracle_equivalence(capsys):
    with criterion(capsys, 4, "eval matches the fixpoint oracle on 500 random instances"):
        started = time.perf_counter()
        for seed in range(500):
            rng = random.Random(41000 + seed)
            body = random_body(rng, depth=4)
            a = random_assignment(rng, max_positions=6)
            for i in range(a.position_count):
                assert eval_formula(body, a, i) == oracle_eval(body, a, i)
        assert time.perf_counter() - started < 10.0


def test_criterion_5_cause_correctness(capsys):
    with criterion(capsys, 5, "200 violated instances: causes sufficient and minimal"):
        found = 0
        seed = 0
        while found < 200:
            seed += 1
            rng = random.Random(52000 + seed)
            body = random_body(rng, depth=4)
            a = random_assignment(rng, max_positions=5)
            if eval_formula(body, a):
                continue
            found += 1

            cause, _ = mark_relevant(body, a)
            cause = minimize(cause, body, a)
            assert eval3(body, a, cause.triples) == Kleene.FALSE
            for triple in cause.triples:
                assert eval3(body, a, cause.triples - {triple}) != Kleene.FALSE

            free = [t for t in atom_universe(body, a) if t not in cause.triples]
            if len(free) <= 12:
                assert all(
                    eval_formula(body, other) is False
                    for other in completions(a, free)
                )


def test_criterion_6_circuit_fidelity(capsys):
    with criterion(capsys, 6, "50 random circuits: extraction matches simulation to depth 6"):
        for seed in range(50):
            rng = random.Random(67000 + seed)
            circuit = parse_aag(random_circuit_text(rng))
            machine = extract_moore(circuit)

            n = len(machine.states)
            assert 0 <= machine.initial < n
            atom_pool = set(machine.outputs) | set(machine.latch_aps)
            for state in machine.states:
                assert set(state.label) <= atom_pool
            for row in machine.transitions:
                assert len(row) == machine.valuation_count
                assert all(0 <= dst < n for dst in row)

            # joint BFS visits every (latch valuation, state) pair reachable
            # within 6 steps, so label agreement here covers every input
            # sequence of length <= 6
            width = len(machine.inputs)
            start = (circuit.initial_latches(), machine.initial)
            frontier = [start]
            seen = {start}
            for _ in range(6):
                next_frontier = []
                for latches, state in frontier:
                    for valuation in range(machine.valuation_count):
                        bits = tuple((valuation >> i) & 1 for i in range(width))
                        nxt, outs = circuit.step(latches, bits)
                        expected = {
                            circuit.output_name(pos)
                            for pos, bit in enumerate(outs)
                            if bit
                        }
                        assert set(machine.states[state].label) & set(
                            machine.outputs
                        ) == expected
                        succ = (nxt, machine.transitions[state][valuation])
                        if succ not in seen:
                            seen.add(succ)
                            next_frontier.append(succ)
                frontier = next_frontier


def test_criterion_7_wide_fixture(capsys):
    with criterion(capsys, 7, "wide fixture: bundle under 5s, one output diverging at step 6"):
        case = build_scale_case()
        assert len(case.decls) == 50

        started = time.perf_counter()
        f = parse_formula(case.formula_text)
        a = parse_counterexample(case.cex_text, case.decls)
        bundle = analyze_violation(f, a, var_decls=case.decls)
        assert time.perf_counter() - started < 5.0

        validate_bundle(bundle)
        kind_of = {d.name: d.kind for d in case.decls}
        output_causes = [
            c for c in bundle["causes"] if kind_of[c["atom"]] == "output"
        ]
        assert output_causes
        assert {c["t"] for c in output_causes} == {6}
        assert {c["atom"] for c in output_causes} == {"out11"}
        assert len(relevant_columns(bundle)["output"]) == 1


def test_criterion_8_pipeline_persistence(capsys, tmp_path):
    with criterion(capsys, 8, "bundle survives service restart; failed edit makes no version"):
        data_dir = str(tmp_path / "data")
        with TestClient(create_app(data_dir)) as client:
            r = client.post(
                "/projects",
                json={"name": "drone", "machine": read_fixture("drone_v1.json")},
            )
            pid = r.json()["project"]["id"]
            vid = r.json()["project"]["versions"][0]
            r = client.post(
                f"/projects/{pid}/versions/{vid}/checks",
                json={"formulaText": read_fixture("drone.hltl")},
            )
            cid = r.json()["check"]["id"]
            assert client.post(f"/checks/{cid}/run").json()["check"]["status"] == "fail"
            before = client.get(f"/checks/{cid}/bundle").content

        with TestClient(create_app(data_dir)) as client:
            after = client.get(f"/checks/{cid}/bundle").content
            assert after == before
            validate_bundle(json.loads(after))

            r = client.put(
                f"/checks/{cid}/formula", json={"formulaText": "forall p. (oops[p]"}
            )
            assert r.status_code == 422
            versions = client.get(f"/projects/{pid}/versions").json()["versions"]
            assert [v["id"] for v in versions] == [vid]
