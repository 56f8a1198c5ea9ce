// Client-side mirror of the server's formula grammar, used only for live
// editor diagnostics and the preview rendering.  The server stays the
// authority: submitted text is re-parsed there, and this mirror matches
// its precedence, associativity, and error positions (0-based columns).
//
// Precedence, tightest to loosest: ! G F X, then U R (non-associative),
// &, |, -> (right-associative), <-> (left-associative).

export type Quantifier = "forall" | "exists";

export type BodyNode =
  | { op: "atom"; atom: string; trace: string }
  | { op: "not" | "globally" | "eventually" | "next"; child: BodyNode }
  | {
      op: "and" | "or" | "implies" | "iff" | "until" | "release";
      left: BodyNode;
      right: BodyNode;
    };

export interface ParsedFormula {
  prefix: [Quantifier, string][];
  body: BodyNode;
}

export interface ParseFailure {
  column: number;
  expected: string;
  /** Full message overriding the assembled "syntax error" phrasing. */
  message?: string;
}

export type ParseOutcome =
  | { ok: true; formula: ParsedFormula }
  | { ok: false; error: ParseFailure };

const RESERVED = new Set(["forall", "exists", "G", "F", "X", "U", "R"]);
const NAME_RE = /^[A-Za-z_][A-Za-z0-9_]*/;

interface Token {
  kind: string;
  text: string;
  pos: number;
}

function tokenize(text: string): Token[] | ParseFailure {
  const tokens: Token[] = [];
  let i = 0;
  while (i < text.length) {
    const ch = text[i] ?? "";
    if (ch === " " || ch === "\t" || ch === "\n" || ch === "\r") {
      i += 1;
      continue;
    }
    if (ch === "<" && text.startsWith("<->", i)) {
      tokens.push({ kind: "<->", text: "<->", pos: i });
      i += 3;
      continue;
    }
    if (ch === "-" && text.startsWith("->", i)) {
      tokens.push({ kind: "->", text: "->", pos: i });
      i += 2;
      continue;
    }
    if ("()[].!&|".includes(ch)) {
      tokens.push({ kind: ch, text: ch, pos: i });
      i += 1;
      continue;
    }
    const m = NAME_RE.exec(text.slice(i));
    if (m) {
      const word = m[0];
      tokens.push({ kind: RESERVED.has(word) ? word : "name", text: word, pos: i });
      i += word.length;
      continue;
    }
    return { column: i, expected: "a formula token" };
  }
  tokens.push({ kind: "eof", text: "", pos: text.length });
  return tokens;
}

class Parser {
  private i = 0;
  private declared = new Set<string>();

  constructor(private tokens: Token[]) {}

  private peek(): Token {
    return this.tokens[this.i] ?? { kind: "eof", text: "", pos: 0 };
  }

  private take(): Token {
    const tok = this.peek();
    this.i += 1;
    return tok;
  }

  private fail(pos: number, expected: string, message?: string): never {
    throw { column: pos, expected, message } satisfies ParseFailure;
  }

  private expect(kind: string, what: string): Token {
    const tok = this.peek();
    if (tok.kind !== kind) this.fail(tok.pos, what);
    return this.take();
  }

  parse(): ParsedFormula {
    const prefix: [Quantifier, string][] = [];
    while (this.peek().kind === "forall" || this.peek().kind === "exists") {
      const q = this.take().kind as Quantifier;
      const name = this.peek();
      if (name.kind !== "name") this.fail(name.pos, "a trace variable name");
      this.take();
      if (this.declared.has(name.text)) {
        this.fail(
          name.pos,
          "a distinct trace variable",
          `trace variable '${name.text}' is bound twice`,
        );
      }
      this.declared.add(name.text);
      this.expect(".", "'.' after the trace variable");
      prefix.push([q, name.text]);
    }
    if (prefix.length === 0) this.fail(this.peek().pos, "'forall' or 'exists'");
    const body = this.iff();
    const trailing = this.peek();
    if (trailing.kind !== "eof") this.fail(trailing.pos, "end of formula");
    return { prefix, body };
  }

  private iff(): BodyNode {
    let node = this.implies();
    while (this.peek().kind === "<->") {
      this.take();
      node = { op: "iff", left: node, right: this.implies() };
    }
    return node;
  }

  private implies(): BodyNode {
    const left = this.or();
    if (this.peek().kind === "->") {
      this.take();
      return { op: "implies", left, right: this.implies() };
    }
    return left;
  }

  private or(): BodyNode {
    let node = this.and();
    while (this.peek().kind === "|") {
      this.take();
      node = { op: "or", left: node, right: this.and() };
    }
    return node;
  }

  private and(): BodyNode {
    let node = this.untilRelease();
    while (this.peek().kind === "&") {
      this.take();
      node = { op: "and", left: node, right: this.untilRelease() };
    }
    return node;
  }

  private untilRelease(): BodyNode {
    const left = this.unary();
    const tok = this.peek();
    if (tok.kind !== "U" && tok.kind !== "R") return left;
    this.take();
    const right = this.unary();
    const next = this.peek();
    if (next.kind === "U" || next.kind === "R") {
      this.fail(next.pos, "parentheses (U and R chains are ambiguous)");
    }
    return { op: tok.kind === "U" ? "until" : "release", left, right };
  }

  private unary(): BodyNode {
    const tok = this.peek();
    const ops: Record<string, "not" | "globally" | "eventually" | "next"> = {
      "!": "not",
      G: "globally",
      F: "eventually",
      X: "next",
    };
    const op = ops[tok.kind];
    if (op) {
      this.take();
      return { op, child: this.unary() };
    }
    if (tok.kind === "(") {
      this.take();
      const inner = this.iff();
      this.expect(")", "')'");
      return inner;
    }
    if (tok.kind === "name") {
      this.take();
      this.expect("[", "'[' after the atom name");
      const trace = this.peek();
      if (trace.kind !== "name") this.fail(trace.pos, "a trace variable name");
      this.take();
      if (!this.declared.has(trace.text)) {
        this.fail(
          trace.pos,
          "a bound trace variable",
          `trace variable '${trace.text}' is not bound by the quantifier prefix`,
        );
      }
      this.expect("]", "']'");
      return { op: "atom", atom: tok.text, trace: trace.text };
    }
    this.fail(tok.pos, "an atom, '(' or a unary operator");
  }
}

/** Parse editor text; never throws. */
export function tryParse(text: string): ParseOutcome {
  const tokens = tokenize(text);
  if (!Array.isArray(tokens)) return { ok: false, error: tokens };
  try {
    return { ok: true, formula: new Parser(tokens).parse() };
  } catch (err) {
    return { ok: false, error: err as ParseFailure };
  }
}

export function describeFailure(error: ParseFailure): string {
  return error.message ?? `syntax error at column ${error.column}: expected ${error.expected}`;
}

const PREC: Record<BodyNode["op"], number> = {
  iff: 1,
  implies: 2,
  or: 3,
  and: 4,
  until: 5,
  release: 5,
  not: 6,
  globally: 6,
  eventually: 6,
  next: 6,
  atom: 7,
};

const CHILD_PREC: Record<string, [number, number]> = {
  and: [4, 5],
  or: [3, 4],
  implies: [3, 2],
  iff: [1, 2],
  until: [6, 6],
  release: [6, 6],
};

interface Symbols {
  not: string;
  globally: string;
  eventually: string;
  next: string;
  and: string;
  or: string;
  implies: string;
  iff: string;
  until: string;
  release: string;
  forall: string;
  exists: string;
}

const ASCII: Symbols = {
  not: "!",
  globally: "G ",
  eventually: "F ",
  next: "X ",
  and: "&",
  or: "|",
  implies: "->",
  iff: "<->",
  until: "U",
  release: "R",
  forall: "forall",
  exists: "exists",
};

const UNICODE: Symbols = {
  not: "¬",
  globally: "G ",
  eventually: "F ",
  next: "X ",
  and: "∧",
  or: "∨",
  implies: "→",
  iff: "↔",
  until: "U",
  release: "R",
  forall: "∀",
  exists: "∃",
};

function renderBody(node: BodyNode, minPrec: number, symbols: Symbols): string {
  const wrap = PREC[node.op] < minPrec || node.op === "until" || node.op === "release";
  let text: string;
  if (node.op === "atom") {
    text = `${node.atom}[${node.trace}]`;
  } else if ("child" in node) {
    text = symbols[node.op] + renderBody(node.child, 6, symbols);
  } else {
    const [lp, rp] = CHILD_PREC[node.op] ?? [0, 0];
    text =
      renderBody(node.left, lp, symbols) +
      ` ${symbols[node.op]} ` +
      renderBody(node.right, rp, symbols);
  }
  return wrap ? `(${text})` : text;
}

/** Canonical ASCII text, matching the server's rendering of the same formula. */
export function renderAscii(f: ParsedFormula): string {
  const prefix = f.prefix.map(([q, v]) => `${ASCII[q]} ${v}. `).join("");
  return prefix + renderBody(f.body, 0, ASCII);
}

/** Display rendering with logic symbols, for the editor preview. */
export function renderUnicode(f: ParsedFormula): string {
  const prefix = f.prefix.map(([q, v]) => `${UNICODE[q]}${v}. `).join("");
  return prefix + renderBody(f.body, 0, UNICODE);
}
