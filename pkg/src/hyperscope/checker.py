"""Bounded counterexample search for universally quantified formulas.

The search walks the k-fold self-composition of the machine (k = number of
quantified trace variables): a joint state is a tuple of per-copy states,
a joint input is a tuple of per-copy input valuations, and every lasso of
the joint system induces one shape-aligned candidate TraceAssignment.

Enumeration order is fixed so results are reproducible:
  * lasso shapes (stemLen, loopLen) by ascending total length, then
    ascending stem length;
  * within a shape, depth-first over joint input sequences, joint inputs
    ordered numerically with copy 0 as the most significant digit.
A lasso closes when the joint state after the last input equals the joint
state at the loop-back position.  The first closing lasso whose induced
assignment falsifies the body at position 0 is returned.

The search is exponential in the worst case; a shortest-distance pruning
step cuts branches that provably cannot return to the loop-back state in
the remaining steps, which is what makes passing verdicts on small
machines affordable.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import product

from .errors import InconsistentTrace, UnsupportedQuantifier
from .evaluate import eval_formula
from .formula import QuantifiedFormula
from .machine import MooreMachine
from .traces import LassoTrace, TraceAssignment

DEFAULT_BOUND = 8

# joint state spaces larger than this skip distance pruning rather than
# paying |S|^k BFS precomputation
_PRUNE_LIMIT = 4096


@dataclass(frozen=True)
class NoCounterexample:
    """No shape-aligned violating lasso with stem+loop <= bound exists."""

    bound: int


@dataclass(frozen=True)
class Counterexample:
    assignment: TraceAssignment
    state_sequences: dict[str, tuple[int, ...]]


CheckResult = NoCounterexample | Counterexample


class _Search:
    def __init__(self, machine: MooreMachine, formula: QuantifiedFormula):
        if not formula.is_universal():
            raise UnsupportedQuantifier(
                "only all-universal quantifier prefixes are supported"
            )
        self.machine = machine
        self.body = formula.body
        self.vars = formula.trace_vars
        self.k = len(self.vars)
        self.joints = list(product(range(machine.valuation_count), repeat=self.k))
        self.initial = tuple([machine.initial] * self.k)
        self.distance = self._distances() if len(machine.states) ** self.k <= _PRUNE_LIMIT else None

    def _distances(self) -> dict[tuple[int, ...], dict[tuple[int, ...], int]]:
        """dist[target][q] = length of the shortest joint path q -> target."""
        m = self.machine
        succ_sets = [sorted(set(row)) for row in m.transitions]
        nodes = list(product(range(len(m.states)), repeat=self.k))
        preds: dict[tuple[int, ...], list[tuple[int, ...]]] = {q: [] for q in nodes}
        for q in nodes:
            for nxt in product(*(succ_sets[s] for s in q)):
                preds[nxt].append(q)
        dist: dict[tuple[int, ...], dict[tuple[int, ...], int]] = {}
        for target in nodes:
            d = {target: 0}
            queue = deque([target])
            while queue:
                cur = queue.popleft()
                for p in preds[cur]:
                    if p not in d:
                        d[p] = d[cur] + 1
                        queue.append(p)
            dist[target] = d
        return dist

    def _step(self, q: tuple[int, ...], jv: tuple[int, ...]) -> tuple[int, ...]:
        t = self.machine.transitions
        return tuple(t[s][v] for s, v in zip(q, jv))

    def _candidate(self, states, seq, stem: int) -> Counterexample | None:
        m = self.machine
        total = len(seq)
        traces = []
        for c in range(self.k):
            letters = [m.letter(states[t][c], seq[t][c]) for t in range(total)]
            traces.append(LassoTrace(tuple(letters[:stem]), tuple(letters[stem:])))
        assignment = TraceAssignment.bind(self.vars, traces)
        if eval_formula(self.body, assignment, 0):
            return None
        sequences = {
            var: tuple(states[t][c] for t in range(total))
            for c, var in enumerate(self.vars)
        }
        return Counterexample(assignment, sequences)

    def run(self, bound: int) -> CheckResult:
        for total in range(1, bound + 1):
            for stem in range(total):
                hit = self._shape(stem, total)
                if hit is not None:
                    return hit
        return NoCounterexample(bound)

    def _shape(self, stem: int, total: int) -> Counterexample | None:
        states: list[tuple[int, ...]] = [self.initial]
        seq: list[tuple[int, ...]] = []

        def rec(t: int) -> Counterexample | None:
            if t == total:
                if states[total] != states[stem]:
                    return None
                return self._candidate(states, seq, stem)
            for jv in self.joints:
                nxt = self._step(states[t], jv)
                if self.distance is not None and t + 1 > stem:
                    # the loop must still get back to the loop-back state
                    back = self.distance[states[stem]].get(nxt)
                    if back is None or back > total - (t + 1):
                        continue
                states.append(nxt)
                seq.append(jv)
                hit = rec(t + 1)
                if hit is not None:
                    return hit
                states.pop()
                seq.pop()
            return None

        return rec(0)


def find_counterexample(
    machine: MooreMachine, formula: QuantifiedFormula, bound: int = DEFAULT_BOUND
) -> CheckResult:
    """First violating shape-aligned lasso assignment, or a bounded pass."""
    if bound < 1:
        raise ValueError("bound must be at least 1")
    return _Search(machine, formula).run(bound)


def replay(machine: MooreMachine, trace: LassoTrace) -> tuple[int, ...]:
    """Drive the machine with the trace's input projection and check outputs.

    Returns the visited states for carrier positions 0..stem+loop-1.  The
    walk continues past the carrier until a (state, loop offset) pair
    repeats, so agreement is verified for the whole infinite word, not just
    its first period.
    """
    out_alphabet = frozenset(machine.outputs)
    stem, loop = len(trace.stem), len(trace.loop)
    count = stem + loop

    def offset(i: int) -> int:
        return i if i < stem else stem + ((i - stem) % loop)

    state = machine.initial
    visited: list[int] = []
    seen: set[tuple[int, int]] = set()
    i = 0
    while True:
        pos = offset(i)
        letter = trace.letter(pos)
        if machine.label(state) != letter & out_alphabet:
            raise InconsistentTrace(
                pos,
                f"trace outputs {sorted(letter & out_alphabet)} but state "
                f"S{machine.states[state].name} emits {sorted(machine.label(state))}",
            )
        if i < count:
            visited.append(state)
        else:
            key = (state, pos)
            if key in seen:
                break
            seen.add(key)
        state = machine.transition(state, machine.valuation_of(letter))
        i += 1
    return tuple(visited)
