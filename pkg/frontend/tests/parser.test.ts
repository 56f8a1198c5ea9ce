// The client parser must agree with the service's parser on precedence,
// canonical rendering, and error positions, so editor previews and server
// responses never contradict each other.  Expected strings below were pinned
// against the service implementation.

import { describe, expect, it } from "vitest";
import { describeFailure, renderAscii, renderUnicode, tryParse } from "../src/formula";

function parsed(text: string) {
  const outcome = tryParse(text);
  if (!outcome.ok) throw new Error(describeFailure(outcome.error));
  return outcome.formula;
}

function failure(text: string) {
  const outcome = tryParse(text);
  if (outcome.ok) throw new Error(`unexpectedly parsed: ${text}`);
  return outcome.error;
}

describe("canonical rendering", () => {
  const roundTrips: [string, string][] = [
    ["forall p. G !a[p]", "forall p. G !a[p]"],
    ["forall p. X X a[p]", "forall p. X X a[p]"],
    ["forall p. !(a[p] & b[p])", "forall p. !(a[p] & b[p])"],
    ["forall p. a[p] & b[p] | c[p]", "forall p. a[p] & b[p] | c[p]"],
    ["forall p. (a[p] & b[p]) | c[p]", "forall p. a[p] & b[p] | c[p]"],
    ["forall p. a[p] -> b[p] -> c[p]", "forall p. a[p] -> b[p] -> c[p]"],
    ["forall p. a[p] -> (b[p] -> c[p])", "forall p. a[p] -> b[p] -> c[p]"],
    ["forall p. (a[p] -> b[p]) -> c[p]", "forall p. (a[p] -> b[p]) -> c[p]"],
    ["forall p. a[p] <-> b[p] <-> c[p]", "forall p. a[p] <-> b[p] <-> c[p]"],
    ["forall p. a[p] U b[p]", "forall p. (a[p] U b[p])"],
    ["forall p. (a[p] U b[p]) | c[p]", "forall p. (a[p] U b[p]) | c[p]"],
    ["forall p. F (a[p] R b[p])", "forall p. F (a[p] R b[p])"],
    ["forall p. (a[p] U b[p]) U c[p]", "forall p. ((a[p] U b[p]) U c[p])"],
    [
      "forall p. forall q. G ((bound[p] <-> bound[q]) -> X (emergency[p] <-> emergency[q]))",
      "forall p. forall q. G ((bound[p] <-> bound[q]) -> X (emergency[p] <-> emergency[q]))",
    ],
  ];

  for (const [input, canonical] of roundTrips) {
    it(`renders ${JSON.stringify(input)} canonically`, () => {
      expect(renderAscii(parsed(input))).toBe(canonical);
    });
  }

  it("canonical text is a fixpoint", () => {
    for (const [input] of roundTrips) {
      const once = renderAscii(parsed(input));
      expect(renderAscii(parsed(once))).toBe(once);
    }
  });

  it("renders logic symbols for the preview", () => {
    expect(renderUnicode(parsed("forall p. G (a[p] -> F b[p])"))).toBe(
      "∀p. G (a[p] → F b[p])",
    );
    expect(renderUnicode(parsed("exists p. !a[p] & b[p]"))).toBe(
      "∃p. ¬a[p] ∧ b[p]",
    );
  });
});

describe("error positions match the service parser", () => {
  const failures: [string, string][] = [
    ["forall p. G (bound[p]", "syntax error at column 21: expected ')'"],
    [
      "forall p. a[p] &",
      "syntax error at column 16: expected an atom, '(' or a unary operator",
    ],
    ["forall p. a[", "syntax error at column 12: expected a trace variable name"],
    [
      "forall p. a[p] U b[p] U c[p]",
      "syntax error at column 22: expected parentheses (U and R chains are ambiguous)",
    ],
    [
      "forall p. ",
      "syntax error at column 10: expected an atom, '(' or a unary operator",
    ],
    ["a[p]", "syntax error at column 0: expected 'forall' or 'exists'"],
    ["forall p. a[p] @", "syntax error at column 15: expected a formula token"],
    [
      "forall p. G",
      "syntax error at column 11: expected an atom, '(' or a unary operator",
    ],
    ["forall p. a[p] b[p]", "syntax error at column 15: expected end of formula"],
    [
      "forall p. forall[p]",
      "syntax error at column 16: expected a trace variable name",
    ],
    ["forall p. a[q]", "trace variable 'q' is not bound by the quantifier prefix"],
    ["forall p. forall p. a[p]", "trace variable 'p' is bound twice"],
  ];

  for (const [input, message] of failures) {
    it(`rejects ${JSON.stringify(input)}`, () => {
      expect(describeFailure(failure(input))).toBe(message);
    });
  }

  it("reports the caret column of bound-variable errors", () => {
    expect(failure("forall p. a[q]").column).toBe(12);
    expect(failure("forall p. forall p. a[p]").column).toBe(17);
  });
});

describe("parse results", () => {
  it("keeps the quantifier prefix in order", () => {
    const f = parsed("forall p. exists q. a[p] -> a[q]");
    expect(f.prefix).toEqual([
      ["forall", "p"],
      ["exists", "q"],
    ]);
  });

  it("treats reserved words as operators, not atoms", () => {
    const err = failure("forall p. forall[p] & a[p]");
    expect(err.column).toBe(16);
  });

  it("accepts underscore names", () => {
    expect(renderAscii(parsed("forall p. grant_0[p]"))).toBe("forall p. grant_0[p]");
  });
});
