"""Word and assignment manipulation helpers shared by several test files."""

from __future__ import annotations

from itertools import product
from typing import Iterator

from hyperscope import formula as F
from hyperscope.traces import LassoTrace, TraceAssignment

Triple = tuple[str, str, int]


def pump_loop(a: TraceAssignment) -> TraceAssignment:
    """The same omega-word with the loop written out twice."""
    return TraceAssignment.bind(
        a.vars,
        [LassoTrace(t.stem, t.loop + t.loop) for t in a.traces],
    )


def with_values(a: TraceAssignment, values: dict[Triple, bool]) -> TraceAssignment:
    """Copy of `a` with the given (var, atom, position) observations forced."""
    count = a.position_count
    stem = a.stem_len
    per_var = {
        var: [set(a.trace(var).letter(i)) for i in range(count)] for var in a.vars
    }
    for (var, atom, pos), val in values.items():
        if val:
            per_var[var][pos].add(atom)
        else:
            per_var[var][pos].discard(atom)
    return TraceAssignment.bind(
        a.vars,
        [
            LassoTrace(
                tuple(frozenset(x) for x in per_var[var][:stem]),
                tuple(frozenset(x) for x in per_var[var][stem:]),
            )
            for var in a.vars
        ],
    )


def atom_universe(body: F.FormulaNode, a: TraceAssignment) -> list[Triple]:
    """Every (traceVar, atomName, position) triple the body can observe."""
    pairs = sorted(set(body.atoms()))
    return [
        (var, atom, pos)
        for atom, var in pairs
        for pos in range(a.position_count)
    ]


def completions(
    a: TraceAssignment, free: list[Triple]
) -> Iterator[TraceAssignment]:
    """All 2^|free| assignments differing from `a` only on `free`."""
    for bits in product((False, True), repeat=len(free)):
        yield with_values(a, dict(zip(free, bits)))
