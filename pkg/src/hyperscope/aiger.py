"""ASCII AIGER (aag) circuits: parsing and single-step simulation.

Accepted format: `aag M I L O A` header, optionally followed by the
extension counts B C J F from the 1.9 format; of those only B C J F equal
to zero are meaningful here, nonzero sections are read and ignored with a
warning.  And-gate definitions must be monotone (lhs even, lhs > rhs0 >=
rhs1), which the standard reader also enforces.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field

from .errors import BadHeader, LiteralOutOfRange, MalformedLine, NonMonotoneAnd


@dataclass(frozen=True)
class Latch:
    lit: int
    next_lit: int
    init: int = 0


@dataclass
class AigCircuit:
    max_var: int
    inputs: list[int]
    latches: list[Latch]
    outputs: list[int]
    ands: dict[int, tuple[int, int]]
    input_names: dict[int, str] = field(default_factory=dict)
    latch_names: dict[int, str] = field(default_factory=dict)
    output_names: dict[int, str] = field(default_factory=dict)

    def input_name(self, pos: int) -> str:
        lit = self.inputs[pos]
        return self.input_names.get(lit, f"in{pos}")

    def latch_name(self, pos: int) -> str:
        lit = self.latches[pos].lit
        return self.latch_names.get(lit, f"latch{pos}")

    def output_name(self, pos: int) -> str:
        return self.output_names.get(pos, f"out{pos}")

    def initial_latches(self) -> tuple[int, ...]:
        return tuple(l.init for l in self.latches)

    def eval_literals(self, latch_values: tuple[int, ...], input_values: tuple[int, ...]) -> dict[int, bool]:
        """Value of every literal given current latch state and input valuation."""
        val: dict[int, bool] = {0: False, 1: True}

        def put(lit: int, v: bool):
            val[lit] = v
            val[lit ^ 1] = not v

        for lit, v in zip(self.inputs, input_values):
            put(lit, bool(v))
        for latch, v in zip(self.latches, latch_values):
            put(latch.lit, bool(v))
        for lhs in sorted(self.ands):  # monotone ordering makes one pass enough
            r0, r1 = self.ands[lhs]
            put(lhs, val[r0] and val[r1])
        return val

    def step(self, latch_values: tuple[int, ...], input_values: tuple[int, ...]):
        """-> (next latch values, output values) for one clock tick."""
        val = self.eval_literals(latch_values, input_values)
        nxt = tuple(int(val[l.next_lit]) for l in self.latches)
        outs = tuple(int(val[o]) for o in self.outputs)
        return nxt, outs


def _ints(line: str, line_no: int, expect: int) -> list[int]:
    parts = line.split()
    if len(parts) < expect:
        raise MalformedLine(line_no, f"expected {expect} integers, got {len(parts)}")
    try:
        return [int(p) for p in parts]
    except ValueError:
        raise MalformedLine(line_no, f"not an integer list: {line!r}") from None


def parse_aag(text: str) -> AigCircuit:
    lines = text.splitlines()
    if not lines:
        raise BadHeader("empty file")
    header = lines[0].split()
    if len(header) < 6 or header[0] != "aag":
        raise BadHeader(f"bad header line: {lines[0]!r}")
    try:
        counts = [int(x) for x in header[1:]]
    except ValueError:
        raise BadHeader(f"non-integer header field in {lines[0]!r}") from None
    m, i, l, o, a = counts[:5]
    extras = counts[5:]
    if len(extras) > 4:
        raise BadHeader(f"too many header fields in {lines[0]!r}")
    n_extra = sum(extras)
    if n_extra:
        warnings.warn(f"ignoring {n_extra} extension (B C J F) definitions", stacklevel=2)

    def check_lit(lit: int, line_no: int):
        if lit < 0 or lit > 2 * m + 1:
            raise LiteralOutOfRange(f"literal {lit} exceeds maximum variable {m} (line {line_no})")

    pos = 1

    def next_line(what: str) -> tuple[str, int]:
        nonlocal pos
        if pos >= len(lines):
            raise BadHeader(f"file ends before the declared {what}")
        line = lines[pos]
        pos += 1
        return line, pos

    inputs: list[int] = []
    for _ in range(i):
        line, ln = next_line("input definition")
        (lit,) = _ints(line, ln, 1)[:1]
        check_lit(lit, ln)
        if lit % 2 or lit == 0:
            raise MalformedLine(ln, f"input literal must be a positive even literal, got {lit}")
        inputs.append(lit)

    latches: list[Latch] = []
    for _ in range(l):
        line, ln = next_line("latch definition")
        vals = _ints(line, ln, 2)
        lit, nxt = vals[0], vals[1]
        init = vals[2] if len(vals) > 2 else 0
        check_lit(lit, ln)
        check_lit(nxt, ln)
        if lit % 2 or lit == 0:
            raise MalformedLine(ln, f"latch literal must be a positive even literal, got {lit}")
        if init not in (0, 1):
            raise MalformedLine(ln, f"latch reset value must be 0 or 1, got {init}")
        latches.append(Latch(lit, nxt, init))

    outputs: list[int] = []
    for _ in range(o):
        line, ln = next_line("output definition")
        (lit,) = _ints(line, ln, 1)[:1]
        check_lit(lit, ln)
        outputs.append(lit)

    ands: dict[int, tuple[int, int]] = {}
    for _ in range(a):
        line, ln = next_line("and-gate definition")
        lhs, r0, r1 = _ints(line, ln, 3)[:3]
        for x in (lhs, r0, r1):
            check_lit(x, ln)
        if lhs % 2 or lhs <= r0 or lhs <= r1 or lhs == 0:
            raise NonMonotoneAnd(f"gate {lhs} = {r0} & {r1} is not in monotone order (line {ln})")
        if lhs in ands:
            raise MalformedLine(ln, f"duplicate definition of gate {lhs}")
        ands[lhs] = (r0, r1)

    for _ in range(n_extra):
        next_line("extension definition")

    defined = {lit for lit in inputs}
    defined.update(latch.lit for latch in latches)
    defined.update(ands)
    if len(defined) != i + l + a:
        raise MalformedLine(pos, "some literal is defined more than once")

    circuit = AigCircuit(m, inputs, latches, outputs, ands)

    # symbol table and comment section
    in_comment = False
    while pos < len(lines):
        line = lines[pos]
        pos += 1
        if in_comment or not line.strip():
            continue
        if line.strip() == "c":
            in_comment = True
            continue
        if len(line) < 2 or line[0] not in "ilo":
            raise MalformedLine(pos, f"unrecognized symbol line: {line!r}")
        rest = line[1:]
        sep = rest.find(" ")
        if sep < 0:
            raise MalformedLine(pos, f"symbol line without a name: {line!r}")
        try:
            index = int(rest[:sep])
        except ValueError:
            raise MalformedLine(pos, f"bad symbol index in {line!r}") from None
        name = rest[sep + 1 :].strip()
        kind = line[0]
        if kind == "i":
            if index >= i:
                raise MalformedLine(pos, f"input symbol index {index} out of range")
            circuit.input_names[inputs[index]] = name
        elif kind == "l":
            if index >= l:
                raise MalformedLine(pos, f"latch symbol index {index} out of range")
            circuit.latch_names[latches[index].lit] = name
        else:
            if index >= o:
                raise MalformedLine(pos, f"output symbol index {index} out of range")
            circuit.output_names[index] = name
    return circuit
