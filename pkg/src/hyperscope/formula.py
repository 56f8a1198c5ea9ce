"""HyperLTL formulas: AST, parser, canonical rendering, span index.

A formula is a quantifier prefix (`forall p.` / `exists p.`) over a
quantifier-free LTL body whose atoms are `name[traceVar]`.  Operator
precedence, tightest first:

    ! G F X   (unary, prefix)
    U R       (non-associative; chains must be parenthesized)
    &
    |
    ->        (right-associative)
    <->       (left-associative)

Body nodes carry positional metadata (preorder id, depth, parent, character
span into the canonical rendering).  The metadata is excluded from equality:
two formulas are equal iff they have the same prefix and the same tree shape.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .errors import DuplicateTraceVar, FormulaSyntaxError, UnboundTraceVar, UnknownId

ATOM = "atom"
NOT = "not"
AND = "and"
OR = "or"
IMPLIES = "implies"
IFF = "iff"
NEXT = "next"
GLOBALLY = "globally"
EVENTUALLY = "eventually"
UNTIL = "until"
RELEASE = "release"

UNARY_OPS = (NOT, NEXT, GLOBALLY, EVENTUALLY)
BINARY_OPS = (AND, OR, IMPLIES, IFF, UNTIL, RELEASE)
TEMPORAL_OPS = (NEXT, GLOBALLY, EVENTUALLY, UNTIL, RELEASE)

RESERVED = {"forall", "exists", "G", "F", "X", "U", "R"}

_PREC = {
    IFF: 1,
    IMPLIES: 2,
    OR: 3,
    AND: 4,
    UNTIL: 5,
    RELEASE: 5,
    NOT: 6,
    GLOBALLY: 6,
    EVENTUALLY: 6,
    NEXT: 6,
    ATOM: 7,
}

_UNARY_TOKEN = {NOT: "!", GLOBALLY: "G ", EVENTUALLY: "F ", NEXT: "X "}
_BINARY_TOKEN = {AND: "&", OR: "|", IMPLIES: "->", IFF: "<->", UNTIL: "U", RELEASE: "R"}

# (left min precedence, right min precedence); the loose side matches the
# operator's own level, the strict side forces parentheses, which fixes the
# associativity of the rendering.
_CHILD_PREC = {
    AND: (4, 5),
    OR: (3, 4),
    IMPLIES: (3, 2),
    IFF: (1, 2),
    UNTIL: (6, 6),
    RELEASE: (6, 6),
}

_POLISH_TOKEN = {
    NOT: "Not",
    AND: "And",
    OR: "Or",
    IMPLIES: "Implies",
    IFF: "Iff",
    NEXT: "X",
    GLOBALLY: "G",
    EVENTUALLY: "F",
    UNTIL: "U",
    RELEASE: "R",
}


@dataclass(frozen=True)
class FormulaNode:
    """One body node.  `op` is one of the module-level op constants."""

    op: str
    children: tuple["FormulaNode", ...] = ()
    atom: str | None = None
    trace: str | None = None
    # metadata relative to the enclosing body; filled in by QuantifiedFormula
    id: int | None = field(default=None, compare=False, repr=False)
    depth: int | None = field(default=None, compare=False, repr=False)
    parent: int | None = field(default=None, compare=False, repr=False)
    span: tuple[int, int] | None = field(default=None, compare=False, repr=False)

    def atoms(self):
        """Distinct (atomName, traceVar) pairs occurring in this subtree."""
        out = set()
        stack = [self]
        while stack:
            n = stack.pop()
            if n.op == ATOM:
                out.add((n.atom, n.trace))
            stack.extend(n.children)
        return out


def atom(name: str, trace: str) -> FormulaNode:
    return FormulaNode(ATOM, atom=name, trace=trace)


def not_(x: FormulaNode) -> FormulaNode:
    return FormulaNode(NOT, (x,))


def and_(left: FormulaNode, right: FormulaNode) -> FormulaNode:
    return FormulaNode(AND, (left, right))


def or_(left: FormulaNode, right: FormulaNode) -> FormulaNode:
    return FormulaNode(OR, (left, right))


def implies(left: FormulaNode, right: FormulaNode) -> FormulaNode:
    return FormulaNode(IMPLIES, (left, right))


def iff(left: FormulaNode, right: FormulaNode) -> FormulaNode:
    return FormulaNode(IFF, (left, right))


def next_(x: FormulaNode) -> FormulaNode:
    return FormulaNode(NEXT, (x,))


def globally(x: FormulaNode) -> FormulaNode:
    return FormulaNode(GLOBALLY, (x,))


def eventually(x: FormulaNode) -> FormulaNode:
    return FormulaNode(EVENTUALLY, (x,))


def until(left: FormulaNode, right: FormulaNode) -> FormulaNode:
    return FormulaNode(UNTIL, (left, right))


def release(left: FormulaNode, right: FormulaNode) -> FormulaNode:
    return FormulaNode(RELEASE, (left, right))


def _size(node: FormulaNode) -> int:
    return 1 + sum(_size(c) for c in node.children)


def _annotate(node: FormulaNode, nid: int, depth: int, parent: int | None) -> FormulaNode:
    kids = []
    cid = nid + 1
    for ch in node.children:
        kids.append(_annotate(ch, cid, depth + 1, nid))
        cid += _size(ch)
    return FormulaNode(
        op=node.op,
        children=tuple(kids),
        atom=node.atom,
        trace=node.trace,
        id=nid,
        depth=depth,
        parent=parent,
    )


def _render(node: FormulaNode, min_prec: int, pieces: list[str], pos: int) -> int:
    """Append the canonical text of `node`, record its span, return the new cursor.

    U/R nodes are always parenthesized: they are non-associative and the
    conservative brackets keep the rendering unambiguous at a glance.
    Context-forced parentheses belong to the wrapped child's span.
    """
    start = pos
    wrap = _PREC[node.op] < min_prec or node.op in (UNTIL, RELEASE)
    if wrap:
        pieces.append("(")
        pos += 1
    if node.op == ATOM:
        text = f"{node.atom}[{node.trace}]"
        pieces.append(text)
        pos += len(text)
    elif node.op in _UNARY_TOKEN:
        tok = _UNARY_TOKEN[node.op]
        pieces.append(tok)
        pos += len(tok)
        pos = _render(node.children[0], 6, pieces, pos)
    else:
        left_prec, right_prec = _CHILD_PREC[node.op]
        pos = _render(node.children[0], left_prec, pieces, pos)
        tok = f" {_BINARY_TOKEN[node.op]} "
        pieces.append(tok)
        pos += len(tok)
        pos = _render(node.children[1], right_prec, pieces, pos)
    if wrap:
        pieces.append(")")
        pos += 1
    object.__setattr__(node, "span", (start, pos))
    return pos


def _validate_body(node: FormulaNode, declared: set[str]):
    if node.op == ATOM:
        if node.atom is None or node.trace is None:
            raise ValueError("atom node without name or trace variable")
        if node.trace not in declared:
            raise UnboundTraceVar(node.trace)
        if node.children:
            raise ValueError("atom node with children")
        return
    if node.op in UNARY_OPS:
        if len(node.children) != 1:
            raise ValueError(f"{node.op} expects one child")
    elif node.op in BINARY_OPS:
        if len(node.children) != 2:
            raise ValueError(f"{node.op} expects two children")
    else:
        raise ValueError(f"unknown operator {node.op!r}")
    for ch in node.children:
        _validate_body(ch, declared)


@dataclass(frozen=True)
class QuantifiedFormula:
    """Quantifier prefix plus body.

    Construction validates the prefix and atom bindings, rebuilds the body
    with fresh preorder metadata, and computes the canonical rendering.  The
    derived fields (`text`, `nodes`) are not part of equality.
    """

    prefix: tuple[tuple[str, str], ...]
    body: FormulaNode
    text: str = field(init=False, compare=False, repr=False, default="")
    nodes: tuple[FormulaNode, ...] = field(init=False, compare=False, repr=False, default=())

    def __post_init__(self):
        prefix = tuple((q, v) for q, v in self.prefix)
        if not prefix:
            raise ValueError("quantifier prefix must not be empty")
        seen = set()
        for q, v in prefix:
            if q not in ("forall", "exists"):
                raise ValueError(f"unknown quantifier {q!r}")
            if v in seen:
                raise DuplicateTraceVar(v)
            seen.add(v)
        _validate_body(self.body, seen)

        body = _annotate(self.body, 0, 0, None)
        head = "".join(f"{q} {v}. " for q, v in prefix)
        pieces = [head]
        end = _render(body, 0, pieces, len(head))
        nodes: list[FormulaNode] = []
        stack = [body]
        while stack:
            n = stack.pop()
            nodes.append(n)
            stack.extend(reversed(n.children))
        nodes.sort(key=lambda n: n.id)

        object.__setattr__(self, "prefix", prefix)
        object.__setattr__(self, "body", body)
        object.__setattr__(self, "text", "".join(pieces))
        object.__setattr__(self, "nodes", tuple(nodes))
        assert end == len(self.text)

    @property
    def trace_vars(self) -> tuple[str, ...]:
        return tuple(v for _, v in self.prefix)

    def is_universal(self) -> bool:
        return all(q == "forall" for q, _ in self.prefix)


_TOKEN_RE = re.compile(
    r"(?P<ident>[A-Za-z_][A-Za-z0-9_]*)"
    r"|(?P<iff><->)"
    r"|(?P<implies>->)"
    r"|(?P<lparen>\()"
    r"|(?P<rparen>\))"
    r"|(?P<lbracket>\[)"
    r"|(?P<rbracket>\])"
    r"|(?P<dot>\.)"
    r"|(?P<amp>&)"
    r"|(?P<pipe>\|)"
    r"|(?P<bang>!)"
)


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    n = len(text)
    while pos < n:
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise FormulaSyntaxError(pos, "a formula token")
        tokens.append((m.lastgroup, m.group(), pos))
        pos = m.end()
    tokens.append(("eof", "", n))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.i = 0
        self.declared: list[str] = []

    def peek(self):
        return self.tokens[self.i]

    def advance(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, kind: str, what: str):
        tok = self.advance()
        if tok[0] != kind:
            raise FormulaSyntaxError(tok[2], what)
        return tok

    def at_ident(self, *values: str) -> bool:
        kind, value, _ = self.peek()
        return kind == "ident" and value in values

    def parse(self) -> QuantifiedFormula:
        prefix = []
        if not self.at_ident("forall", "exists"):
            raise FormulaSyntaxError(self.peek()[2], "'forall' or 'exists'")
        while self.at_ident("forall", "exists"):
            _, quant, _ = self.advance()
            kind, name, pos = self.advance()
            if kind != "ident" or name in RESERVED:
                raise FormulaSyntaxError(pos, "a trace variable name")
            if name in self.declared:
                raise DuplicateTraceVar(name)
            self.declared.append(name)
            self.expect("dot", "'.' after the trace variable")
            prefix.append((quant, name))
        body = self.parse_iff()
        kind, _, pos = self.peek()
        if kind != "eof":
            raise FormulaSyntaxError(pos, "end of formula")
        return QuantifiedFormula(tuple(prefix), body)

    def parse_iff(self) -> FormulaNode:
        node = self.parse_implies()
        while self.peek()[0] == "iff":
            self.advance()
            node = FormulaNode(IFF, (node, self.parse_implies()))
        return node

    def parse_implies(self) -> FormulaNode:
        node = self.parse_or()
        if self.peek()[0] == "implies":
            self.advance()
            return FormulaNode(IMPLIES, (node, self.parse_implies()))
        return node

    def parse_or(self) -> FormulaNode:
        node = self.parse_and()
        while self.peek()[0] == "pipe":
            self.advance()
            node = FormulaNode(OR, (node, self.parse_and()))
        return node

    def parse_and(self) -> FormulaNode:
        node = self.parse_until_release()
        while self.peek()[0] == "amp":
            self.advance()
            node = FormulaNode(AND, (node, self.parse_until_release()))
        return node

    def parse_until_release(self) -> FormulaNode:
        node = self.parse_unary()
        if self.at_ident("U", "R"):
            _, tok, _ = self.advance()
            right = self.parse_unary()
            node = FormulaNode(UNTIL if tok == "U" else RELEASE, (node, right))
            if self.at_ident("U", "R"):
                raise FormulaSyntaxError(
                    self.peek()[2], "parentheses (U and R chains are ambiguous)"
                )
        return node

    def parse_unary(self) -> FormulaNode:
        kind, value, _ = self.peek()
        if kind == "bang":
            self.advance()
            return FormulaNode(NOT, (self.parse_unary(),))
        if kind == "ident" and value in ("G", "F", "X"):
            self.advance()
            op = {"G": GLOBALLY, "F": EVENTUALLY, "X": NEXT}[value]
            return FormulaNode(op, (self.parse_unary(),))
        return self.parse_primary()

    def parse_primary(self) -> FormulaNode:
        kind, value, pos = self.advance()
        if kind == "lparen":
            node = self.parse_iff()
            self.expect("rparen", "')'")
            return node
        if kind == "ident":
            if value in RESERVED:
                raise FormulaSyntaxError(pos, "an atom, '(' or a unary operator")
            self.expect("lbracket", "'[' after the atom name")
            tkind, tvalue, tpos = self.advance()
            if tkind != "ident" or tvalue in RESERVED:
                raise FormulaSyntaxError(tpos, "a trace variable name")
            if tvalue not in self.declared:
                raise UnboundTraceVar(tvalue)
            self.expect("rbracket", "']'")
            return FormulaNode(ATOM, atom=value, trace=tvalue)
        raise FormulaSyntaxError(pos, "an atom, '(' or a unary operator")


def parse_formula(text: str) -> QuantifiedFormula:
    """Parse `text` into a QuantifiedFormula.

    Raises FormulaSyntaxError (with the character position and the expected
    token class), UnboundTraceVar, or DuplicateTraceVar.
    """
    return _Parser(text).parse()


def render_formula(f: QuantifiedFormula) -> tuple[str, list[dict]]:
    """Canonical single-line rendering plus the span table of the body.

    Each row describes one body node: preorder id, operator, atom/trace for
    leaves, character span into the text, depth, and parent id.  Re-parsing
    the text yields a formula equal to `f`.
    """
    rows = []
    for n in f.nodes:
        rows.append(
            {
                "id": n.id,
                "op": n.op,
                "atom": n.atom,
                "trace": n.trace,
                "start": n.span[0],
                "end": n.span[1],
                "depth": n.depth,
                "parent": n.parent,
            }
        )
    return f.text, rows


def subformula_at(f: QuantifiedFormula, node_id: int) -> FormulaNode:
    if not isinstance(node_id, int) or node_id < 0 or node_id >= len(f.nodes):
        raise UnknownId(node_id)
    return f.nodes[node_id]


def to_polish(f: QuantifiedFormula) -> str:
    """Whitespace-separated prefix form, e.g. `Forall G a[p]`.

    Deterministic and injective up to spans: every operator has a fixed arity,
    so the prefix word reconstructs the tree.
    """
    out = ["Forall" if q == "forall" else "Exists" for q, _ in f.prefix]

    def walk(n: FormulaNode):
        if n.op == ATOM:
            out.append(f"{n.atom}[{n.trace}]")
            return
        out.append(_POLISH_TOKEN[n.op])
        for c in n.children:
            walk(c)

    walk(f.body)
    return " ".join(out)
