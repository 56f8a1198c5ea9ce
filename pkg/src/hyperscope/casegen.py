"""Synthetic workload generation for stress runs and demos.

build_scale_case fabricates a large observational-determinism violation:
many declared signals over a long lasso where the quantified inputs agree
everywhere and exactly one output pair diverges at one timestep.  The
returned pieces (formula text, declarations, counterexample text) feed the
machine-less explain pipeline.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .traces import LassoTrace, TraceAssignment, VarDecl, serialize_counterexample


@dataclass(frozen=True)
class ScaleCase:
    formula_text: str
    decls: list[VarDecl]
    cex_text: str
    diverging_output: str
    diverging_step: int


def build_scale_case(
    seed: int = 11,
    n_inputs: int = 10,
    n_outputs: int = 25,
    n_latches: int = 15,
    stem_len: int = 28,
    loop_len: int = 2,
    quantified_inputs: int = 3,
    diverging_output: int = 11,
    diverging_step: int = 6,
) -> ScaleCase:
    """Two-trace violation with a single diverging output.

    The formula relates the first quantified_inputs inputs and all outputs;
    remaining inputs and all latches are free noise.  Both traces agree on
    every constrained signal except outputs[diverging_output], which is
    flipped on the second trace at diverging_step (which must lie in the
    stem's interior strictly before its end).
    """
    if not 0 <= diverging_step < stem_len:
        raise ValueError("diverging step must fall inside the stem")
    rng = random.Random(seed)
    inputs = [f"in{i}" for i in range(n_inputs)]
    outputs = [f"out{i}" for i in range(n_outputs)]
    latches = [f"l{i}" for i in range(n_latches)]
    decls = (
        [VarDecl(n, "input") for n in inputs]
        + [VarDecl(n, "output") for n in outputs]
        + [VarDecl(n, "latch") for n in latches]
    )

    count = stem_len + loop_len
    letters: list[list[set[str]]] = [[set() for _ in range(count)] for _ in range(2)]
    for t in range(count):
        for name in inputs[:quantified_inputs] + outputs:
            if rng.random() < 0.5:
                letters[0][t].add(name)
                letters[1][t].add(name)
        for trace in range(2):
            for name in inputs[quantified_inputs:] + latches:
                if rng.random() < 0.5:
                    letters[trace][t].add(name)

    flipped = outputs[diverging_output]
    if flipped in letters[1][diverging_step]:
        letters[1][diverging_step].discard(flipped)
    else:
        letters[1][diverging_step].add(flipped)

    traces = [
        LassoTrace(
            tuple(frozenset(s) for s in row[:stem_len]),
            tuple(frozenset(s) for s in row[stem_len:]),
        )
        for row in letters
    ]
    assignment = TraceAssignment.bind(["t0", "t1"], traces)
    cex_text = serialize_counterexample(assignment, decls)

    premise = " & ".join(f"({n}[p] <-> {n}[q])" for n in inputs[:quantified_inputs])
    conclusion = " & ".join(f"({n}[p] <-> {n}[q])" for n in outputs)
    formula_text = f"forall p. forall q. (G ({premise})) -> (G ({conclusion}))"
    return ScaleCase(formula_text, decls, cex_text, flipped, diverging_step)
