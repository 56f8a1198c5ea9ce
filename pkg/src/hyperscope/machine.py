"""Finite Moore machines over boolean input valuations.

A machine has named boolean inputs, a finite state set, a per-state output
label (the set of output names the state emits), and a total deterministic
transition function on input valuations.  Valuations are encoded as ints:
bit j is the value of the j-th declared input.

Machines come from two places: an explicit JSON description, or symbolic
extraction from an AIGER circuit (`extract_moore`), which explores the
reachable latch valuations breadth-first and checks the Moore condition
(outputs must not depend on the current inputs) as it goes.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .aiger import AigCircuit, parse_aag
from .errors import (
    MalformedLine,
    NondeterministicGuards,
    NonMooreOutput,
    PartialGuards,
    StateBudgetExceeded,
    WidthMismatch,
)

MAX_EXTRACT_INPUTS = 16


@dataclass(frozen=True)
class MooreState:
    name: str
    label: frozenset[str]
    latches: tuple[int, ...] | None = None


@dataclass
class MooreMachine:
    inputs: tuple[str, ...]
    states: tuple[MooreState, ...]
    initial: int
    transitions: tuple[tuple[int, ...], ...]  # [state][valuation] -> state
    outputs: tuple[str, ...] = ()
    latch_aps: tuple[str, ...] = ()

    def __post_init__(self):
        width = 1 << len(self.inputs)
        for s, row in enumerate(self.transitions):
            if len(row) != width:
                raise WidthMismatch(
                    f"state S{self.states[s].name} defines {len(row)} successors, expected {width}"
                )
        if not self.outputs:
            names: set[str] = set()
            for st in self.states:
                names |= st.label
            self.outputs = tuple(sorted(names))

    @property
    def valuation_count(self) -> int:
        return 1 << len(self.inputs)

    def transition(self, state: int, valuation: int) -> int:
        return self.transitions[state][valuation]

    def label(self, state: int) -> frozenset[str]:
        return self.states[state].label

    def input_atoms(self, valuation: int) -> frozenset[str]:
        return frozenset(
            name for j, name in enumerate(self.inputs) if (valuation >> j) & 1
        )

    def valuation_of(self, letter: frozenset[str]) -> int:
        """Input valuation encoded by the input atoms present in `letter`."""
        v = 0
        for j, name in enumerate(self.inputs):
            if name in letter:
                v |= 1 << j
        return v

    def letter(self, state: int, valuation: int) -> frozenset[str]:
        """The trace letter emitted in `state` while reading `valuation`."""
        return self.label(state) | self.input_atoms(valuation)


def _cover(valuations: list[int] | set[int], n_inputs: int) -> list[str]:
    """Cubes over the declared inputs covering exactly `valuations`.

    Recursive Shannon cofactoring in declaration order: when the two
    cofactors on input j are equal, j becomes a dontcare of the merged cube.
    """

    def rec(j: int, prefix: str, pool: set[int]) -> list[str]:
        if not pool:
            return []
        if j == n_inputs:
            return [prefix]
        zero = {v for v in pool if not (v >> j) & 1}
        one = {v for v in pool if (v >> j) & 1}
        if {v | (1 << j) for v in zero} == one:
            return rec(j + 1, prefix + "*", zero | one)
        return rec(j + 1, prefix + "0", zero) + rec(j + 1, prefix + "1", one)

    return rec(0, "", set(valuations))


def cube_text(cube: str, inputs: tuple[str, ...]) -> str:
    """`10*` over (i, s, r) -> `i & !s`; the all-dontcare cube prints `*`."""
    terms = [
        name if ch == "1" else "!" + name
        for ch, name in zip(cube, inputs)
        if ch != "*"
    ]
    return " & ".join(terms) if terms else "*"


def extract_moore(circuit: AigCircuit, state_budget: int = 4096) -> MooreMachine:
    """Enumerate the reachable states of `circuit` as an explicit Moore machine.

    States are reachable latch valuations, labeled with the output names the
    circuit asserts there.  Every state is probed under all input valuations;
    if any output bit varies with the inputs the circuit is not a Moore
    machine and extraction fails.
    """
    n_in = len(circuit.inputs)
    if n_in > MAX_EXTRACT_INPUTS:
        raise StateBudgetExceeded(
            f"{n_in} inputs exceeds the {MAX_EXTRACT_INPUTS}-input extraction guard"
        )
    input_names = tuple(circuit.input_name(j) for j in range(n_in))
    output_names = tuple(circuit.output_name(j) for j in range(len(circuit.outputs)))
    latch_aps = tuple(circuit.latch_name(j) for j in range(len(circuit.latches)))

    init = circuit.initial_latches()
    index: dict[tuple[int, ...], int] = {init: 0}
    order: list[tuple[int, ...]] = [init]
    labels: list[frozenset[str]] = []
    rows: list[tuple[int, ...]] = []

    head = 0
    while head < len(order):
        latches = order[head]
        head += 1
        label: frozenset[str] | None = None
        row: list[int] = []
        for v in range(1 << n_in):
            bits = tuple((v >> j) & 1 for j in range(n_in))
            nxt, outs = circuit.step(latches, bits)
            letter = frozenset(name for name, bit in zip(output_names, outs) if bit)
            if label is None:
                label = letter
            elif label != letter:
                raise NonMooreOutput(
                    f"outputs of latch state {latches} vary with the inputs"
                )
            if nxt not in index:
                if len(order) >= state_budget:
                    raise StateBudgetExceeded(
                        f"more than {state_budget} reachable states"
                    )
                index[nxt] = len(order)
                order.append(nxt)
            row.append(index[nxt])
        labels.append(label if label is not None else frozenset())
        rows.append(tuple(row))

    states = tuple(
        MooreState(str(k), labels[k], order[k]) for k in range(len(order))
    )
    return MooreMachine(
        input_names,
        states,
        0,
        tuple(rows),
        outputs=output_names,
        latch_aps=latch_aps,
    )


def _bits(valuation: int, n_inputs: int) -> str:
    return "".join(str((valuation >> j) & 1) for j in range(n_inputs))


def parse_machine_json(text: str) -> MooreMachine:
    """Explicit machine description.

    Shape:
      {"aps": {"inputs": [...], "outputs": [...]},
       "states": [{"id": 0, "outputs": [...]}, ...],
       "initial": 0,
       "edges": [{"src": 0, "dst": 1, "guard": {"<input>": 0 or 1}}, ...]}

    A guard maps input names to required values; inputs omitted from the
    guard are dontcares.  The guards leaving each state must cover every
    input valuation exactly once.
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise MalformedLine(e.lineno, f"invalid JSON: {e.msg}") from None
    for key in ("aps", "states", "initial", "edges"):
        if key not in doc:
            raise MalformedLine(0, f"missing top-level key {key!r}")
    aps = doc["aps"]
    inputs = tuple(aps.get("inputs", ()))
    declared_outputs = tuple(aps.get("outputs", ()))
    n_in = len(inputs)

    ids: list = []
    labels: list[frozenset[str]] = []
    for st in doc["states"]:
        ids.append(st["id"])
        label = frozenset(st.get("outputs", ()))
        extra = label - set(declared_outputs)
        if extra:
            raise MalformedLine(0, f"state {st['id']} emits undeclared outputs {sorted(extra)}")
        labels.append(label)
    if len(set(ids)) != len(ids):
        raise MalformedLine(0, "duplicate state id")
    index = {sid: k for k, sid in enumerate(ids)}
    if doc["initial"] not in index:
        raise MalformedLine(0, f"initial state {doc['initial']!r} is not declared")

    width = 1 << n_in
    rows: list[list[int | None]] = [[None] * width for _ in ids]
    for edge in doc["edges"]:
        src, dst = edge["src"], edge["dst"]
        guard = edge.get("guard", {})
        if src not in index or dst not in index:
            raise MalformedLine(0, f"edge references unknown state: {edge!r}")
        unknown = set(guard) - set(inputs)
        if unknown:
            raise MalformedLine(0, f"guard uses undeclared inputs {sorted(unknown)}")
        for v in range(width):
            if all(int(guard[name]) == ((v >> j) & 1) for j, name in enumerate(inputs) if name in guard):
                prev = rows[index[src]][v]
                if prev is not None and prev != index[dst]:
                    raise NondeterministicGuards(src, _bits(v, n_in))
                rows[index[src]][v] = index[dst]
    for sid, row in zip(ids, rows):
        for v, dst in enumerate(row):
            if dst is None:
                raise PartialGuards(sid, _bits(v, n_in))

    states = tuple(MooreState(str(sid), label) for sid, label in zip(ids, labels))
    return MooreMachine(
        inputs,
        states,
        index[doc["initial"]],
        tuple(tuple(r) for r in rows),
        outputs=declared_outputs,
    )


def machine_json(machine: MooreMachine) -> dict:
    """Round-trippable JSON document for an explicit machine."""

    def ident(name: str):
        return int(name) if name.isdigit() else name

    edges = []
    for s, row in enumerate(machine.transitions):
        targets: dict[int, list[int]] = {}
        for v, dst in enumerate(row):
            targets.setdefault(dst, []).append(v)
        for dst in sorted(targets):
            for cube in _cover(targets[dst], len(machine.inputs)):
                guard = {
                    name: int(ch)
                    for ch, name in zip(cube, machine.inputs)
                    if ch != "*"
                }
                edges.append(
                    {
                        "src": ident(machine.states[s].name),
                        "dst": ident(machine.states[dst].name),
                        "guard": guard,
                    }
                )
    return {
        "aps": {"inputs": list(machine.inputs), "outputs": list(machine.outputs)},
        "states": [
            {"id": ident(st.name), "outputs": sorted(st.label)}
            for st in machine.states
        ],
        "initial": ident(machine.states[machine.initial].name),
        "edges": edges,
    }


@dataclass
class DotHighlights:
    """Per-trace-variable state runs to emphasize in the rendering."""

    sequences: dict[str, list[int]] = field(default_factory=dict)


def to_dot(machine: MooreMachine, highlights: DotHighlights | None = None) -> str:
    """Graphviz digraph of the machine: one node per state, guard-labeled edges.

    Deterministic output: states in id order, edge labels built from
    cofactor-merged cubes in input declaration order.  Highlighted states
    carry a `class` attribute listing the trace variables that visit them;
    edges on a highlighted run are drawn bold.
    """
    hl_states: dict[int, list[str]] = {}
    hl_edges: set[tuple[int, int]] = set()
    if highlights:
        for var in sorted(highlights.sequences):
            seq = highlights.sequences[var]
            for s in seq:
                hl_states.setdefault(s, [])
                if var not in hl_states[s]:
                    hl_states[s].append(var)
            for a, b in zip(seq, seq[1:]):
                hl_edges.add((a, b))

    lines = [
        "digraph machine {",
        "  rankdir=LR;",
        '  node [shape=circle, fontname="Helvetica"];',
        "  __init [shape=point];",
    ]
    for k, st in enumerate(machine.states):
        label = f"S{st.name}"
        label += "\\n{" + ",".join(sorted(st.label)) + "}"
        attrs = [f'label="{label}"']
        if k in hl_states:
            attrs.append("penwidth=2")
            attrs.append(f'class="{" ".join(hl_states[k])}"')
        lines.append(f"  s{k} [{', '.join(attrs)}];")
    lines.append(f"  __init -> s{machine.initial};")
    for s, row in enumerate(machine.transitions):
        targets: dict[int, list[int]] = {}
        for v, dst in enumerate(row):
            targets.setdefault(dst, []).append(v)
        for dst in sorted(targets):
            cubes = _cover(targets[dst], len(machine.inputs))
            label = " | ".join(cube_text(c, machine.inputs) for c in cubes)
            attrs = [f'label="{label}"']
            if (s, dst) in hl_edges:
                attrs.append("penwidth=2")
            lines.append(f"  s{s} -> s{dst} [{', '.join(attrs)}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def load_machine(text: str) -> MooreMachine:
    """Route a machine source to the right parser by sniffing the header."""
    if text.lstrip().startswith("aag "):
        return extract_moore(parse_aag(text))
    return parse_machine_json(text)
