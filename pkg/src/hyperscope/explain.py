"""Causal explanation of a violated formula on a concrete trace assignment.

mark_relevant walks the two-valued evaluation with a target polarity and
collects the atom readings that force the root to be false.  The recursion
descends only into branches whose actual value equals the target, so each
visited node carries a proof obligation it really meets; leaves become
(traceVar, atomName, position) triples.  The set is sufficient by
construction: revealing exactly these readings to the three-valued
semantics pins the root to False.

minimize prunes the set greedily until no single reading can be dropped
without losing that guarantee.  generate_statements then folds surviving
readings into one statement per outer temporal operator for display.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Mapping

from . import formula as F
from .errors import NotViolated
from .evaluate import EvalTable, Kleene, Triple, _preorder, eval3
from .traces import TraceAssignment


class Verdict(Enum):
    SATISFIED = "satisfied"
    VIOLATED = "violated"
    IRRELEVANT = "irrelevant"


@dataclass(frozen=True)
class CauseSet:
    """Atom readings sufficient for the violation.

    supporting maps each triple to the ids of the atom occurrences it was
    recorded through, which is what hover highlighting needs.
    """

    triples: frozenset[Triple]
    supporting: Mapping[Triple, frozenset[int]]


@dataclass(frozen=True)
class AtomFact:
    atom_name: str
    positions: tuple[int, ...]
    trace_relation: str
    constancy: str


@dataclass(frozen=True)
class ExplanationStatement:
    statement_id: int
    color_index: int
    subformula_id: int
    temporal_operator: str
    verdict: Verdict
    atom_facts: tuple[AtomFact, ...]


_OP_TOKEN = {
    F.NEXT: "X",
    F.GLOBALLY: "G",
    F.EVENTUALLY: "F",
    F.UNTIL: "U",
    F.RELEASE: "R",
}


def mark_relevant(
    body: F.FormulaNode, assignment: TraceAssignment
) -> tuple[CauseSet, dict[int, Verdict]]:
    """Cause set plus per-node verdicts for a body that is false at position 0.

    Tie-breaks are fixed for determinism: the leftmost false conjunct (dually
    the leftmost true disjunct) and the earliest witness position for
    temporal operators.  The "every position" cases (F false, G true, and
    the corresponding U/R arms) walk the carrier through succ until the
    memo table closes the loop.
    """
    table = EvalTable(body, assignment)
    if table.value(0, 0):
        raise NotViolated("formula holds on this assignment")
    nodes, kids = table.nodes, table.kids
    rows, succ = table.rows, table.succ

    triples: set[Triple] = set()
    supporting: dict[Triple, set[int]] = {}
    visits: dict[int, set[bool]] = {}
    seen: set[tuple[int, int, bool]] = set()
    stack: list[tuple[int, int, bool]] = [(0, 0, False)]

    while stack:
        task = stack.pop()
        if task in seen:
            continue
        seen.add(task)
        idx, pos, target = task
        node = nodes[idx]
        visits.setdefault(idx, set()).add(target)
        ks = kids[idx]
        match node.op:
            case F.ATOM:
                triple = (node.trace, node.atom, pos)
                triples.add(triple)
                supporting.setdefault(triple, set()).add(idx)
            case F.NOT:
                stack.append((ks[0], pos, not target))
            case F.AND:
                if target:
                    stack.append((ks[0], pos, True))
                    stack.append((ks[1], pos, True))
                else:
                    pick = ks[0] if not rows[ks[0]][pos] else ks[1]
                    stack.append((pick, pos, False))
            case F.OR:
                if target:
                    pick = ks[0] if rows[ks[0]][pos] else ks[1]
                    stack.append((pick, pos, True))
                else:
                    stack.append((ks[0], pos, False))
                    stack.append((ks[1], pos, False))
            case F.IMPLIES:
                if target:
                    if not rows[ks[0]][pos]:
                        stack.append((ks[0], pos, False))
                    else:
                        stack.append((ks[1], pos, True))
                else:
                    stack.append((ks[0], pos, True))
                    stack.append((ks[1], pos, False))
            case F.IFF:
                stack.append((ks[0], pos, rows[ks[0]][pos]))
                stack.append((ks[1], pos, rows[ks[1]][pos]))
            case F.NEXT:
                stack.append((ks[0], succ[pos], target))
            case F.GLOBALLY:
                if target:
                    stack.append((ks[0], pos, True))
                    stack.append((idx, succ[pos], True))
                elif not rows[ks[0]][pos]:
                    stack.append((ks[0], pos, False))
                else:
                    stack.append((idx, succ[pos], False))
            case F.EVENTUALLY:
                if target:
                    if rows[ks[0]][pos]:
                        stack.append((ks[0], pos, True))
                    else:
                        stack.append((idx, succ[pos], True))
                else:
                    stack.append((ks[0], pos, False))
                    stack.append((idx, succ[pos], False))
            case F.UNTIL:
                a, b = ks
                if target:
                    if rows[b][pos]:
                        stack.append((b, pos, True))
                    else:
                        stack.append((a, pos, True))
                        stack.append((idx, succ[pos], True))
                else:
                    stack.append((b, pos, False))
                    if not rows[a][pos]:
                        stack.append((a, pos, False))
                    else:
                        stack.append((idx, succ[pos], False))
            case F.RELEASE:
                a, b = ks
                if target:
                    stack.append((b, pos, True))
                    if rows[a][pos]:
                        stack.append((a, pos, True))
                    else:
                        stack.append((idx, succ[pos], True))
                elif not rows[b][pos]:
                    stack.append((b, pos, False))
                else:
                    stack.append((a, pos, False))
                    stack.append((idx, succ[pos], False))

    verdicts: dict[int, Verdict] = {}
    for idx in range(len(nodes)):
        targets = visits.get(idx)
        if targets is None:
            verdicts[idx] = Verdict.IRRELEVANT
        elif False in targets:
            verdicts[idx] = Verdict.VIOLATED
        else:
            verdicts[idx] = Verdict.SATISFIED

    cause = CauseSet(
        triples=frozenset(triples),
        supporting={t: frozenset(s) for t, s in supporting.items()},
    )
    return cause, verdicts


def minimize(cs: CauseSet, body: F.FormulaNode, assignment: TraceAssignment) -> CauseSet:
    """Greedy single-removal pruning under the three-valued semantics.

    Deletion candidates are tried in descending (position, atomName,
    traceVar) order; a removal survives iff the masked evaluation is still
    definitely False.
    """
    kept = set(cs.triples)
    order = sorted(kept, key=lambda t: (t[2], t[1], t[0]), reverse=True)
    for triple in order:
        kept.discard(triple)
        if eval3(body, assignment, kept) is not Kleene.FALSE:
            kept.add(triple)
    supporting = {t: cs.supporting.get(t, frozenset()) for t in kept}
    return CauseSet(triples=frozenset(kept), supporting=supporting)


def _owner(nodes: list[F.FormulaNode], occ: int) -> int | None:
    """Topmost temporal ancestor at depth <= 2 of an atom occurrence."""
    best = None
    cur = nodes[occ].parent
    while cur is not None:
        node = nodes[cur]
        if node.op in F.TEMPORAL_OPS and node.depth <= 2:
            best = cur
        cur = node.parent
    return best


def _fact_label(nodes: list[F.FormulaNode], occ: int) -> str:
    """Display label for an occurrence.

    An atom sitting directly under a two-atom comparison is labeled by the
    comparison ("grant_0/grant_1"), collapsing to the plain name when both
    sides agree on it.
    """
    node = nodes[occ]
    if node.parent is not None:
        parent = nodes[node.parent]
        if parent.op == F.IFF and all(c.op == F.ATOM for c in parent.children):
            left, right = parent.children
            if left.atom == right.atom:
                return left.atom
            return f"{left.atom}/{right.atom}"
    return node.atom


def _make_fact(label: str, triples: set[Triple], assignment: TraceAssignment) -> AtomFact:
    positions = tuple(sorted({t for _, _, t in triples}))
    observed: list[bool] = []
    by_position: dict[int, set[bool]] = {}
    trace_vars: set[str] = set()
    names: set[str] = set()
    for var, atom, t in triples:
        v = assignment.value(var, atom, t)
        observed.append(v)
        by_position.setdefault(t, set()).add(v)
        trace_vars.add(var)
        names.add(atom)
    if len(trace_vars) == 1 and len(names) == 1:
        relation = "single-trace"
    elif any(len(vs) > 1 for vs in by_position.values()):
        relation = "unequal"
    else:
        relation = "equal"
    if all(observed):
        constancy = "alwaysTrue"
    elif not any(observed):
        constancy = "alwaysFalse"
    else:
        constancy = "mixed"
    return AtomFact(label, positions, relation, constancy)


def generate_statements(
    f: F.QuantifiedFormula,
    assignment: TraceAssignment,
    cs: CauseSet,
    verdicts: Mapping[int, Verdict],
) -> list[ExplanationStatement]:
    """One statement per temporal node in the top two levels owning a triple.

    A triple is owned through its supporting occurrences; an occurrence
    buried below depth 2 is attributed to its topmost shallow temporal
    ancestor.  Facts aggregate a statement's triples by label, ordered by
    (first position, label); statements are ordered by subformula id and
    the color index is the ordinal.
    """
    nodes, _ = _preorder(f.body)
    grouped: dict[int, dict[str, set[Triple]]] = {}
    for triple in cs.triples:
        for occ in cs.supporting.get(triple, ()):
            owner = _owner(nodes, occ)
            if owner is None:
                continue
            label = _fact_label(nodes, occ)
            grouped.setdefault(owner, {}).setdefault(label, set()).add(triple)

    statements: list[ExplanationStatement] = []
    for ordinal, owner in enumerate(sorted(grouped)):
        facts = [
            _make_fact(label, triples, assignment)
            for label, triples in grouped[owner].items()
        ]
        facts.sort(key=lambda fact: (fact.positions[0], fact.atom_name))
        statements.append(
            ExplanationStatement(
                statement_id=ordinal,
                color_index=ordinal,
                subformula_id=owner,
                temporal_operator=_OP_TOKEN[nodes[owner].op],
                verdict=verdicts.get(owner, Verdict.IRRELEVANT),
                atom_facts=tuple(facts),
            )
        )
    return statements


_OP_PHRASE = {
    "X": "next-step requirement",
    "G": "invariant",
    "F": "eventuality",
    "U": "until requirement",
    "R": "release requirement",
}

_VALUE_WORD = {"alwaysTrue": "true", "alwaysFalse": "false", "mixed": "mixed"}


def verbalize(stmt: ExplanationStatement) -> str:
    """Single-line rendering of a statement for terminal output."""
    parts = []
    for fact in stmt.atom_facts:
        steps = ", ".join(str(p) for p in fact.positions)
        word = "step" if len(fact.positions) == 1 else "steps"
        value = _VALUE_WORD[fact.constancy]
        if fact.trace_relation == "unequal":
            parts.append(f"{fact.atom_name} differs across traces at {word} {steps}")
        elif fact.trace_relation == "equal":
            parts.append(f"{fact.atom_name} agrees across traces ({value}) at {word} {steps}")
        else:
            parts.append(f"{fact.atom_name} is {value} at {word} {steps}")
    head = _OP_PHRASE[stmt.temporal_operator]
    return f"{head} (subformula {stmt.subformula_id}) {stmt.verdict.value}: " + "; ".join(parts)
