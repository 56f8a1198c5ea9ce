"""LTL evaluation on the finite carrier of a lasso-shaped trace assignment.

Two engines live here on purpose:

* `EvalTable` / `eval_formula`: bottom-up dynamic programming.  For each node
  the full row over positions is computed, with Until/Eventually as least
  fixpoints (start False, iterate the expansion law to stability) and
  Release/Globally as greatest fixpoints (start True).

* `oracle_eval`: a deliberately different organization used to cross-check
  the first, namely global rounds of chaotic iteration.  Every round
  re-derives each row from the expansion laws, re-initializing temporal rows
  by operator polarity, and rounds repeat until a global fixpoint; nodes are
  processed parents-first so convergence genuinely relies on the rounds.

`eval3` is the Kleene strong three-valued semantics under a mask of revealed
(traceVar, atomName, position) triples.  Internally each row is a pair of
boolean rows (lo, hi): lo = "true in Kleene", hi = "not false in Kleene".
All connectives are monotone in this interval encoding, negation swaps the
components, and the temporal fixpoints run per component.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from . import formula as F
from .errors import UnboundAtom
from .traces import TraceAssignment

Triple = tuple[str, str, int]


class Kleene(Enum):
    TRUE = "true"
    FALSE = "false"
    UNKNOWN = "unknown"


def _preorder(body: F.FormulaNode):
    """Preorder node list plus child-index table.

    The index of a node in the list equals its id when the body comes from a
    QuantifiedFormula, but nothing here depends on ids being present.
    """
    nodes: list[F.FormulaNode] = []
    kids: list[list[int]] = []

    def walk(n: F.FormulaNode) -> int:
        idx = len(nodes)
        nodes.append(n)
        ks: list[int] = []
        kids.append(ks)
        for c in n.children:
            ks.append(walk(c))
        return idx

    walk(body)
    return nodes, kids


def _stabilize(row: list, step, count: int):
    """Iterate `row[i] = step(i)` sweeps (last position first) to a fixpoint."""
    changed = True
    while changed:
        changed = False
        for i in range(count - 1, -1, -1):
            v = step(i)
            if v != row[i]:
                row[i] = v
                changed = True


class EvalTable:
    """Two-valued truth of every subformula at every carrier position."""

    def __init__(self, body: F.FormulaNode, assignment: TraceAssignment):
        self.assignment = assignment
        self.nodes, self.kids = _preorder(body)
        n = assignment.position_count
        self.count = n
        self.succ = [assignment.succ(i) for i in range(n)]
        rows: list[list[bool] | None] = [None] * len(self.nodes)
        for idx in range(len(self.nodes) - 1, -1, -1):
            rows[idx] = self._row(idx, rows)
        self.rows: list[list[bool]] = rows

    def _atom_row(self, node: F.FormulaNode) -> list[bool]:
        try:
            trace = self.assignment.trace(node.trace)
        except KeyError:
            raise UnboundAtom(node.atom, node.trace) from None
        return [node.atom in trace.letter(i) for i in range(self.count)]

    def _row(self, idx: int, rows) -> list[bool]:
        node = self.nodes[idx]
        kids = self.kids[idx]
        n, succ = self.count, self.succ
        match node.op:
            case F.ATOM:
                return self._atom_row(node)
            case F.NOT:
                (c,) = (rows[k] for k in kids)
                return [not v for v in c]
            case F.AND:
                a, b = (rows[k] for k in kids)
                return [x and y for x, y in zip(a, b)]
            case F.OR:
                a, b = (rows[k] for k in kids)
                return [x or y for x, y in zip(a, b)]
            case F.IMPLIES:
                a, b = (rows[k] for k in kids)
                return [(not x) or y for x, y in zip(a, b)]
            case F.IFF:
                a, b = (rows[k] for k in kids)
                return [x == y for x, y in zip(a, b)]
            case F.NEXT:
                (c,) = (rows[k] for k in kids)
                return [c[succ[i]] for i in range(n)]
            case F.GLOBALLY:
                (c,) = (rows[k] for k in kids)
                row = [True] * n
                _stabilize(row, lambda i: c[i] and row[succ[i]], n)
                return row
            case F.EVENTUALLY:
                (c,) = (rows[k] for k in kids)
                row = [False] * n
                _stabilize(row, lambda i: c[i] or row[succ[i]], n)
                return row
            case F.UNTIL:
                a, b = (rows[k] for k in kids)
                row = [False] * n
                _stabilize(row, lambda i: b[i] or (a[i] and row[succ[i]]), n)
                return row
            case F.RELEASE:
                a, b = (rows[k] for k in kids)
                row = [True] * n
                _stabilize(row, lambda i: b[i] and (a[i] or row[succ[i]]), n)
                return row
        raise ValueError(f"unknown operator {node.op!r}")

    def value(self, idx: int, pos: int) -> bool:
        return self.rows[idx][pos]


def eval_formula(body: F.FormulaNode, assignment: TraceAssignment, i: int = 0) -> bool:
    """Truth of `body` on `assignment` at carrier position i."""
    return EvalTable(body, assignment).value(0, i)


@dataclass
class TruthTable3:
    """Three-valued truth per (node index, position)."""

    lo: list[list[bool]]
    hi: list[list[bool]]

    def value(self, idx: int, pos: int) -> Kleene:
        if self.lo[idx][pos]:
            return Kleene.TRUE
        if not self.hi[idx][pos]:
            return Kleene.FALSE
        return Kleene.UNKNOWN


def eval3_table(body: F.FormulaNode, assignment: TraceAssignment, mask) -> TruthTable3:
    mask = set(mask)
    nodes, kids = _preorder(body)
    n = assignment.position_count
    succ = [assignment.succ(i) for i in range(n)]
    lo: list[list[bool] | None] = [None] * len(nodes)
    hi: list[list[bool] | None] = [None] * len(nodes)

    for idx in range(len(nodes) - 1, -1, -1):
        node = nodes[idx]
        ks = kids[idx]
        match node.op:
            case F.ATOM:
                try:
                    trace = assignment.trace(node.trace)
                except KeyError:
                    raise UnboundAtom(node.atom, node.trace) from None
                lo_row, hi_row = [], []
                for i in range(n):
                    if (node.trace, node.atom, i) in mask:
                        v = node.atom in trace.letter(i)
                        lo_row.append(v)
                        hi_row.append(v)
                    else:
                        lo_row.append(False)
                        hi_row.append(True)
            case F.NOT:
                (c,) = ks
                lo_row = [not v for v in hi[c]]
                hi_row = [not v for v in lo[c]]
            case F.AND:
                a, b = ks
                lo_row = [x and y for x, y in zip(lo[a], lo[b])]
                hi_row = [x and y for x, y in zip(hi[a], hi[b])]
            case F.OR:
                a, b = ks
                lo_row = [x or y for x, y in zip(lo[a], lo[b])]
                hi_row = [x or y for x, y in zip(hi[a], hi[b])]
            case F.IMPLIES:
                a, b = ks
                lo_row = [(not x) or y for x, y in zip(hi[a], lo[b])]
                hi_row = [(not x) or y for x, y in zip(lo[a], hi[b])]
            case F.IFF:
                a, b = ks
                lo_row = [
                    (la and lb) or (not ha and not hb)
                    for la, lb, ha, hb in zip(lo[a], lo[b], hi[a], hi[b])
                ]
                hi_row = [
                    (ha and hb) or (not la and not lb)
                    for la, lb, ha, hb in zip(lo[a], lo[b], hi[a], hi[b])
                ]
            case F.NEXT:
                (c,) = ks
                lo_row = [lo[c][succ[i]] for i in range(n)]
                hi_row = [hi[c][succ[i]] for i in range(n)]
            case F.GLOBALLY:
                (c,) = ks
                lo_row = [True] * n
                _stabilize(lo_row, lambda i: lo[c][i] and lo_row[succ[i]], n)
                hi_row = [True] * n
                _stabilize(hi_row, lambda i: hi[c][i] and hi_row[succ[i]], n)
            case F.EVENTUALLY:
                (c,) = ks
                lo_row = [False] * n
                _stabilize(lo_row, lambda i: lo[c][i] or lo_row[succ[i]], n)
                hi_row = [False] * n
                _stabilize(hi_row, lambda i: hi[c][i] or hi_row[succ[i]], n)
            case F.UNTIL:
                a, b = ks
                lo_row = [False] * n
                _stabilize(lo_row, lambda i: lo[b][i] or (lo[a][i] and lo_row[succ[i]]), n)
                hi_row = [False] * n
                _stabilize(hi_row, lambda i: hi[b][i] or (hi[a][i] and hi_row[succ[i]]), n)
            case F.RELEASE:
                a, b = ks
                lo_row = [True] * n
                _stabilize(lo_row, lambda i: lo[b][i] and (lo[a][i] or lo_row[succ[i]]), n)
                hi_row = [True] * n
                _stabilize(hi_row, lambda i: hi[b][i] and (hi[a][i] or hi_row[succ[i]]), n)
            case _:
                raise ValueError(f"unknown operator {node.op!r}")
        lo[idx] = lo_row
        hi[idx] = hi_row

    return TruthTable3(lo, hi)


def eval3(body: F.FormulaNode, assignment: TraceAssignment, mask, i: int = 0) -> Kleene:
    """Kleene truth of `body` at position i when only `mask` triples are revealed."""
    return eval3_table(body, assignment, mask).value(0, i)


_LFP_OPS = (F.UNTIL, F.EVENTUALLY)
_GFP_OPS = (F.RELEASE, F.GLOBALLY)


def oracle_eval(body: F.FormulaNode, assignment: TraceAssignment, i: int = 0) -> bool:
    """Reference semantics via rounds of chaotic iteration; see module docstring."""
    nodes, kids = _preorder(body)
    n = assignment.position_count
    succ = [assignment.succ(i) for i in range(n)]

    atom_rows: dict[int, list[bool]] = {}
    for idx, node in enumerate(nodes):
        if node.op == F.ATOM:
            try:
                trace = assignment.trace(node.trace)
            except KeyError:
                raise UnboundAtom(node.atom, node.trace) from None
            atom_rows[idx] = [node.atom in trace.letter(p) for p in range(n)]

    rows: list[list[bool]] = []
    for idx, node in enumerate(nodes):
        if node.op == F.ATOM:
            rows.append(list(atom_rows[idx]))
        elif node.op in _GFP_OPS:
            rows.append([True] * n)
        else:
            rows.append([False] * n)

    def expansion(idx: int) -> list[bool]:
        node = nodes[idx]
        ks = kids[idx]
        if node.op == F.ATOM:
            return list(atom_rows[idx])
        if node.op == F.NOT:
            return [not v for v in rows[ks[0]]]
        if node.op == F.AND:
            return [x and y for x, y in zip(rows[ks[0]], rows[ks[1]])]
        if node.op == F.OR:
            return [x or y for x, y in zip(rows[ks[0]], rows[ks[1]])]
        if node.op == F.IMPLIES:
            return [(not x) or y for x, y in zip(rows[ks[0]], rows[ks[1]])]
        if node.op == F.IFF:
            return [x == y for x, y in zip(rows[ks[0]], rows[ks[1]])]
        if node.op == F.NEXT:
            return [rows[ks[0]][succ[p]] for p in range(n)]
        # temporal fixpoint: re-derive the whole row from the expansion law,
        # starting from the polarity initialization
        row = [node.op in _GFP_OPS] * n
        if node.op == F.GLOBALLY:
            c = rows[ks[0]]
            _stabilize(row, lambda p: c[p] and row[succ[p]], n)
        elif node.op == F.EVENTUALLY:
            c = rows[ks[0]]
            _stabilize(row, lambda p: c[p] or row[succ[p]], n)
        elif node.op == F.UNTIL:
            a, b = rows[ks[0]], rows[ks[1]]
            _stabilize(row, lambda p: b[p] or (a[p] and row[succ[p]]), n)
        elif node.op == F.RELEASE:
            a, b = rows[ks[0]], rows[ks[1]]
            _stabilize(row, lambda p: b[p] and (a[p] or row[succ[p]]), n)
        else:
            raise ValueError(f"unknown operator {node.op!r}")
        return row

    changed = True
    while changed:
        changed = False
        for idx in range(len(nodes)):  # parents first: rounds do the propagation
            new = expansion(idx)
            if new != rows[idx]:
                rows[idx] = new
                changed = True
    return rows[0][i]
