// Client-side wording for explanation statements, matching the CLI's
// single-line rendering word for word so both surfaces read the same.

import { AtomFact, Statement } from "./bundle";

const OP_PHRASE: Record<Statement["temporalOperator"], string> = {
  X: "next-step requirement",
  G: "invariant",
  F: "eventuality",
  U: "until requirement",
  R: "release requirement",
};

const VALUE_WORD: Record<AtomFact["constancy"], string> = {
  alwaysTrue: "true",
  alwaysFalse: "false",
  mixed: "mixed",
};

export function factPhrase(fact: AtomFact): string {
  const steps = fact.positions.join(", ");
  const word = fact.positions.length === 1 ? "step" : "steps";
  const value = VALUE_WORD[fact.constancy];
  if (fact.traceRelation === "unequal") {
    return `${fact.atomName} differs across traces at ${word} ${steps}`;
  }
  if (fact.traceRelation === "equal") {
    return `${fact.atomName} agrees across traces (${value}) at ${word} ${steps}`;
  }
  return `${fact.atomName} is ${value} at ${word} ${steps}`;
}

export function verbalize(stmt: Statement): string {
  const head = OP_PHRASE[stmt.temporalOperator];
  const parts = stmt.atomFacts.map(factPhrase).join("; ");
  return `${head} (subformula ${stmt.subformulaId}) ${stmt.verdict}: ${parts}`;
}
