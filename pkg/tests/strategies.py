"""Random instance builders shared across the property tests.

Plain random.Random builders cover the bulk seeded sweeps (fixed instance
counts, reproducible seeds); thin hypothesis wrappers reuse them where
shrinking is worth having.
"""

from __future__ import annotations

import random

from hypothesis import strategies as st

from hyperscope import formula as F
from hyperscope.machine import MooreMachine, MooreState
from hyperscope.traces import LassoTrace, TraceAssignment

ATOM_POOL = ("a", "b", "c")
TRACE_POOL = ("p", "q")

_UNARY = (F.not_, F.next_, F.globally, F.eventually)
_BINARY = (F.and_, F.or_, F.implies, F.iff, F.until, F.release)


def random_body(
    rng: random.Random,
    depth: int = 4,
    atoms: tuple[str, ...] = ATOM_POOL,
    traces: tuple[str, ...] = TRACE_POOL,
) -> F.FormulaNode:
    if depth <= 0 or rng.random() < 0.3:
        return F.atom(rng.choice(atoms), rng.choice(traces))
    build = rng.choice(_UNARY + _BINARY)
    if build in _UNARY:
        return build(random_body(rng, depth - 1, atoms, traces))
    return build(
        random_body(rng, depth - 1, atoms, traces),
        random_body(rng, depth - 1, atoms, traces),
    )


def random_formula(
    rng: random.Random,
    depth: int = 4,
    atoms: tuple[str, ...] = ATOM_POOL,
    traces: tuple[str, ...] = TRACE_POOL,
) -> F.QuantifiedFormula:
    prefix = tuple(("forall", v) for v in traces)
    return F.QuantifiedFormula(prefix, random_body(rng, depth, atoms, traces))


def random_trace(
    rng: random.Random,
    atoms: tuple[str, ...],
    stem: int,
    loop: int,
) -> LassoTrace:
    def letter() -> frozenset[str]:
        return frozenset(a for a in atoms if rng.random() < 0.5)

    return LassoTrace(
        tuple(letter() for _ in range(stem)),
        tuple(letter() for _ in range(loop)),
    )


def random_assignment(
    rng: random.Random,
    atoms: tuple[str, ...] = ATOM_POOL,
    traces: tuple[str, ...] = TRACE_POOL,
    max_positions: int = 6,
) -> TraceAssignment:
    total = rng.randint(1, max_positions)
    loop = rng.randint(1, total)
    stem = total - loop
    return TraceAssignment.bind(
        traces, [random_trace(rng, atoms, stem, loop) for _ in traces]
    )


def random_machine(
    rng: random.Random,
    max_states: int = 4,
    inputs: tuple[str, ...] = ("a",),
    outputs: tuple[str, ...] = ("b",),
) -> MooreMachine:
    """Total deterministic machine with random labels and transitions."""
    n = rng.randint(1, max_states)
    width = 1 << len(inputs)
    states = tuple(
        MooreState(str(i), frozenset(o for o in outputs if rng.random() < 0.5))
        for i in range(n)
    )
    transitions = tuple(
        tuple(rng.randrange(n) for _ in range(width)) for _ in range(n)
    )
    return MooreMachine(
        inputs=inputs,
        states=states,
        initial=0,
        transitions=transitions,
        outputs=outputs,
    )


def random_circuit_text(
    rng: random.Random,
    max_inputs: int = 3,
    max_latches: int = 6,
) -> str:
    """Random well-formed aag source whose outputs have input-free cones.

    Gates come in two blocks.  The first block reads only latches and
    earlier first-block gates, so any literal from it (or a latch, or a
    constant) may serve as an output without the output depending on the
    current inputs.  The second block may read anything and feeds the
    latch next-state functions.
    """
    n_in = rng.randint(1, max_inputs)
    n_latch = rng.randint(1, max_latches)
    n_state_gates = rng.randint(0, 4)
    n_free_gates = rng.randint(0, 6)

    inputs = [2 * (1 + i) for i in range(n_in)]
    latches = [2 * (1 + n_in + i) for i in range(n_latch)]

    def negate(lit: int) -> int:
        return lit ^ 1 if rng.random() < 0.5 else lit

    gates: list[tuple[int, int, int]] = []
    next_var = 1 + n_in + n_latch
    state_pool = [0] + latches
    for _ in range(n_state_gates):
        lhs = 2 * next_var
        next_var += 1
        r0, r1 = (negate(rng.choice(state_pool)) for _ in range(2))
        gates.append((lhs, max(r0, r1), min(r0, r1)))
        state_pool.append(lhs)
    full_pool = state_pool + inputs
    for _ in range(n_free_gates):
        lhs = 2 * next_var
        next_var += 1
        r0, r1 = (negate(rng.choice(full_pool)) for _ in range(2))
        gates.append((lhs, max(r0, r1), min(r0, r1)))
        full_pool.append(lhs)

    outputs = [negate(rng.choice(state_pool)) for _ in range(rng.randint(1, 3))]
    nexts = [negate(rng.choice(full_pool)) for _ in range(n_latch)]
    resets = [rng.randint(0, 1) for _ in range(n_latch)]

    lines = [f"aag {next_var - 1} {n_in} {n_latch} {len(outputs)} {len(gates)}"]
    lines += [str(lit) for lit in inputs]
    lines += [
        f"{lit} {nxt} {init}" if init else f"{lit} {nxt}"
        for lit, nxt, init in zip(latches, nexts, resets)
    ]
    lines += [str(lit) for lit in outputs]
    lines += [f"{lhs} {r0} {r1}" for lhs, r0, r1 in gates]
    lines += [f"i{i} in{i}" for i in range(n_in)]
    lines += [f"o{i} out{i}" for i in range(len(outputs))]
    return "\n".join(lines) + "\n"


@st.composite
def bodies(draw, depth: int = 3) -> F.FormulaNode:
    rng = random.Random(draw(st.integers(0, 2**32 - 1)))
    return random_body(rng, depth)


@st.composite
def assignments(draw, max_positions: int = 6) -> TraceAssignment:
    rng = random.Random(draw(st.integers(0, 2**32 - 1)))
    return random_assignment(rng, max_positions=max_positions)
