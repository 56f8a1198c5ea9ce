"""Lasso traces, assignments, and the counterexample text format."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hyperscope.errors import IndexOutOfRange, MalformedLine, UnknownVariable
from hyperscope.traces import (
    LassoTrace,
    TraceAssignment,
    VarDecl,
    assignment_json,
    parse_counterexample,
    serialize_counterexample,
)

from .strategies import random_assignment

DECLS = [VarDecl("a", "input"), VarDecl("b", "output")]


def s(*names: str) -> frozenset[str]:
    return frozenset(names)


class TestLassoTrace:
    def test_letter_wraps_into_loop(self):
        tr = LassoTrace((s("a"),), (s("b"), s()))
        assert tr.letter(0) == s("a")
        assert tr.letter(1) == s("b")
        assert tr.letter(2) == s()
        assert tr.letter(3) == s("b")
        assert tr.letter(100) == tr.letter(1 + (100 - 1) % 2)

    def test_unroll_prefix(self):
        tr = LassoTrace((), (s("a"), s("b")))
        assert tr.unroll(5) == (s("a"), s("b"), s("a"), s("b"), s("a"))

    def test_empty_loop_rejected(self):
        with pytest.raises(ValueError):
            LassoTrace((s("a"),), ())

    def test_position_count(self):
        assert LassoTrace((s(),), (s(), s())).position_count == 3


class TestAssignment:
    def test_succ_folds_back_to_loop_start(self):
        a = TraceAssignment.bind(
            ("p",), [LassoTrace((s(), s()), (s(), s(), s()))]
        )
        assert [a.succ(i) for i in range(5)] == [1, 2, 3, 4, 2]

    def test_value_reads_letters(self):
        a = TraceAssignment.bind(("p",), [LassoTrace((s("a"),), (s("b"),))])
        assert a.value("p", "a", 0) and not a.value("p", "a", 1)
        assert a.value("p", "b", 1) and not a.value("p", "b", 0)

    def test_shape_must_align(self):
        with pytest.raises(ValueError):
            TraceAssignment.bind(
                ("p", "q"),
                [LassoTrace((), (s(),)), LassoTrace((s(),), (s(),))],
            )

    def test_rebind_renames_in_order(self):
        a = TraceAssignment.bind(("p", "q"), [
            LassoTrace((), (s("a"),)),
            LassoTrace((), (s("b"),)),
        ])
        b = a.rebind(("x", "y"))
        assert b.vars == ("x", "y")
        assert b.trace("x") == a.trace("p")


class TestCounterexampleText:
    def test_documented_format_round_trip(self):
        text = (
            "cex traces=2 stem=1 loop=2\n"
            "# positions: 0..2\n"
            "0 0 a 1\n"
            "0 2 b 1\n"
            "1 1 a 1\n"
        )
        a = parse_counterexample(text, DECLS)
        assert a.vars == ("t0", "t1")
        assert a.stem_len == 1 and a.loop_len == 2
        assert a.trace("t0").letter(0) == s("a")
        assert a.trace("t0").letter(2) == s("b")
        assert a.trace("t1").letter(1) == s("a")
        assert a.trace("t1").letter(0) == s()

    def test_two_trace_example(self):
        decls = [
            VarDecl("i", "input"),
            VarDecl("s", "input"),
            VarDecl("o1", "output"),
            VarDecl("o2", "output"),
        ]
        text = (
            "cex traces=2 stem=1 loop=1\n"
            "0 0 i 1\n0 0 s 1\n0 1 o2 1\n"
            "1 0 i 1\n1 1 o1 1\n"
        )
        a = parse_counterexample(text, decls)
        assert a.trace("t0").stem == (s("i", "s"),)
        assert a.trace("t0").loop == (s("o2"),)
        assert a.trace("t1").stem == (s("i"),)
        assert a.trace("t1").loop == (s("o1"),)

    def test_empty_body_defaults_to_all_false(self):
        a = parse_counterexample("cex traces=1 stem=0 loop=1\n", [VarDecl("a", "input")])
        assert a.trace("t0").stem == () and a.trace("t0").loop == (s(),)

    def test_serialize_emits_only_true_observations(self):
        a = TraceAssignment.bind(
            ("p",), [LassoTrace((s("a"),), (s(),))]
        )
        text = serialize_counterexample(a, DECLS)
        lines = text.strip().splitlines()
        assert lines[0] == "cex traces=1 stem=1 loop=1"
        assert lines[1:] == ["0 0 a 1"]

    @settings(max_examples=80, deadline=None)
    @given(st.integers(0, 2**32 - 1))
    def test_serialize_parse_round_trip(self, seed):
        a = random_assignment(random.Random(seed), atoms=("a", "b"))
        text = serialize_counterexample(a, DECLS)
        back = parse_counterexample(text, DECLS)
        assert back.traces == a.traces

    def test_bad_header(self):
        with pytest.raises(MalformedLine):
            parse_counterexample("cex traces=1 stem=1\n", DECLS)
        with pytest.raises(MalformedLine):
            parse_counterexample("not a header\n", DECLS)

    def test_malformed_observation_line(self):
        with pytest.raises(MalformedLine):
            parse_counterexample(
                "cex traces=1 stem=0 loop=1\n0 0 a\n", DECLS
            )
        with pytest.raises(MalformedLine):
            parse_counterexample(
                "cex traces=1 stem=0 loop=1\n0 0 a maybe\n", DECLS
            )

    def test_unknown_variable(self):
        with pytest.raises(UnknownVariable):
            parse_counterexample(
                "cex traces=1 stem=0 loop=1\n0 0 zz 1\n", DECLS
            )

    def test_indices_out_of_range(self):
        with pytest.raises(IndexOutOfRange):
            parse_counterexample(
                "cex traces=1 stem=0 loop=1\n0 1 a 1\n", DECLS
            )
        with pytest.raises(IndexOutOfRange):
            parse_counterexample(
                "cex traces=1 stem=0 loop=1\n1 0 a 1\n", DECLS
            )


class TestJsonView:
    def test_assignment_json_shape(self):
        a = TraceAssignment.bind(
            ("p", "q"),
            [
                LassoTrace((s("a"),), (s(),)),
                LassoTrace((s(),), (s("b"),)),
            ],
        )
        view = assignment_json(a)
        assert view == [
            {"var": "p", "stem": [["a"]], "loop": [[]]},
            {"var": "q", "stem": [[]], "loop": [["b"]]},
        ]

    def test_var_decl_kind_checked(self):
        with pytest.raises(ValueError):
            VarDecl("a", "wire")
