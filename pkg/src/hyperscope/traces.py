"""Lasso traces, trace assignments, and the counterexample text format.

A lasso trace is an ultimately periodic word stem . loop^omega over sets of
atomic proposition names.  All traces of one assignment share the same stem
and loop lengths, so the carrier of positions 0 .. stemLen+loopLen-1 with

    succ(i) = i+1          if i < count-1
    succ(i) = stemLen      otherwise

represents the whole infinite unrolling.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import IndexOutOfRange, MalformedLine, UnknownVariable

VAR_KINDS = ("input", "output", "latch")


@dataclass(frozen=True)
class VarDecl:
    name: str
    kind: str

    def __post_init__(self):
        if self.kind not in VAR_KINDS:
            raise ValueError(f"unknown variable kind {self.kind!r}")


@dataclass(frozen=True)
class LassoTrace:
    stem: tuple[frozenset[str], ...]
    loop: tuple[frozenset[str], ...]

    def __post_init__(self):
        if len(self.loop) < 1:
            raise ValueError("lasso loop must contain at least one letter")

    @property
    def position_count(self) -> int:
        return len(self.stem) + len(self.loop)

    def letter(self, i: int) -> frozenset[str]:
        """Letter of the infinite unrolling at position i (any i >= 0)."""
        if i < 0:
            raise IndexOutOfRange(f"position {i}")
        if i < len(self.stem):
            return self.stem[i]
        return self.loop[(i - len(self.stem)) % len(self.loop)]

    def unroll(self, n: int) -> tuple[frozenset[str], ...]:
        return tuple(self.letter(i) for i in range(n))


@dataclass(frozen=True)
class TraceAssignment:
    """Ordered binding of trace variables to lasso traces of one shape."""

    binding: tuple[tuple[str, LassoTrace], ...]

    def __post_init__(self):
        binding = tuple(self.binding)
        if not binding:
            raise ValueError("assignment must bind at least one trace")
        shapes = {(len(t.stem), len(t.loop)) for _, t in binding}
        if len(shapes) > 1:
            raise ValueError(f"traces disagree on lasso shape: {sorted(shapes)}")
        names = [v for v, _ in binding]
        if len(set(names)) != len(names):
            raise ValueError("duplicate trace variable in assignment")
        object.__setattr__(self, "binding", binding)

    @classmethod
    def bind(cls, names, traces) -> "TraceAssignment":
        names = list(names)
        traces = list(traces)
        if len(names) != len(traces):
            raise ValueError(f"{len(names)} variables but {len(traces)} traces")
        return cls(tuple(zip(names, traces)))

    def rebind(self, names) -> "TraceAssignment":
        return TraceAssignment.bind(names, [t for _, t in self.binding])

    @property
    def vars(self) -> tuple[str, ...]:
        return tuple(v for v, _ in self.binding)

    @property
    def traces(self) -> tuple[LassoTrace, ...]:
        return tuple(t for _, t in self.binding)

    def trace(self, var: str) -> LassoTrace:
        for v, t in self.binding:
            if v == var:
                return t
        raise KeyError(var)

    @property
    def stem_len(self) -> int:
        return len(self.binding[0][1].stem)

    @property
    def loop_len(self) -> int:
        return len(self.binding[0][1].loop)

    @property
    def position_count(self) -> int:
        return self.stem_len + self.loop_len

    def succ(self, i: int) -> int:
        if i < 0 or i >= self.position_count:
            raise IndexOutOfRange(f"position {i}")
        return i + 1 if i < self.position_count - 1 else self.stem_len

    def value(self, var: str, atom: str, i: int) -> bool:
        return atom in self.trace(var).letter(i)


_HEADER_RE = re.compile(r"cex\s+traces=(\d+)\s+stem=(\d+)\s+loop=(\d+)\s*$")


def parse_counterexample(text: str, decls: list[VarDecl]) -> TraceAssignment:
    """Parse the plain-text counterexample format.

    Line 1: `cex traces=<k> stem=<s> loop=<l>`; the body lists
    `<traceIdx> <timestep> <var> <0|1>` entries; `#` starts a comment;
    absent (trace, timestep, var) triples default to 0.  Traces are bound to
    synthetic variables t0..t{k-1}; rebind() maps them onto a prefix.
    """
    lines = text.splitlines()
    header = None
    header_no = 0
    for no, raw in enumerate(lines, start=1):
        stripped = raw.split("#", 1)[0].strip()
        if stripped:
            header = stripped
            header_no = no
            break
    if header is None:
        raise MalformedLine(1, "missing header")
    m = _HEADER_RE.match(header)
    if m is None:
        raise MalformedLine(header_no, "expected 'cex traces=<k> stem=<s> loop=<l>'")
    k, stem_len, loop_len = (int(g) for g in m.groups())
    if k < 1 or loop_len < 1:
        raise MalformedLine(header_no, "need at least one trace and loop length >= 1")

    declared = {d.name for d in decls}
    count = stem_len + loop_len
    values: dict[tuple[int, int, str], int] = {}
    for no, raw in enumerate(lines, start=1):
        if no <= header_no:
            continue
        stripped = raw.split("#", 1)[0].strip()
        if not stripped:
            continue
        parts = stripped.split()
        if len(parts) != 4:
            raise MalformedLine(no, "expected '<trace> <timestep> <var> <0|1>'")
        try:
            trace_idx = int(parts[0])
            step = int(parts[1])
        except ValueError:
            raise MalformedLine(no, "trace index and timestep must be integers") from None
        var = parts[2]
        if parts[3] not in ("0", "1"):
            raise MalformedLine(no, "value must be 0 or 1")
        value = int(parts[3])
        if var not in declared:
            raise UnknownVariable(var)
        if trace_idx < 0 or trace_idx >= k:
            raise IndexOutOfRange(f"trace index {trace_idx} (traces={k})")
        if step < 0 or step >= count:
            raise IndexOutOfRange(f"timestep {step} (positions 0..{count - 1})")
        key = (trace_idx, step, var)
        if key in values and values[key] != value:
            raise MalformedLine(no, f"conflicting value for {var} at trace {trace_idx} step {step}")
        values[key] = value

    traces = []
    for trace_idx in range(k):
        letters = [
            frozenset(
                d.name for d in decls if values.get((trace_idx, step, d.name), 0) == 1
            )
            for step in range(count)
        ]
        traces.append(LassoTrace(tuple(letters[:stem_len]), tuple(letters[stem_len:])))
    return TraceAssignment.bind([f"t{i}" for i in range(k)], traces)


def serialize_counterexample(a: TraceAssignment, decls: list[VarDecl]) -> str:
    """Inverse of parse_counterexample (up to trace variable names)."""
    out = [f"cex traces={len(a.binding)} stem={a.stem_len} loop={a.loop_len}"]
    for idx, (_, trace) in enumerate(a.binding):
        for step in range(a.position_count):
            letter = trace.letter(step)
            for d in decls:
                if d.name in letter:
                    out.append(f"{idx} {step} {d.name} 1")
    return "\n".join(out) + "\n"


def assignment_json(a: TraceAssignment) -> list[dict]:
    """Trace arrays as they appear in an analysis bundle."""
    return [
        {
            "var": var,
            "stem": [sorted(letter) for letter in trace.stem],
            "loop": [sorted(letter) for letter in trace.loop],
        }
        for var, trace in a.binding
    ]
