// Shared highlight computation.  Every emphasis or dimming class any view
// applies is derived here from the bundle and the view state, so relevance
// can never be invented by a view: cause cells come from bundle.causes,
// statement colors from bundle.statements, and hover emphasis from the
// typed hover target.

import {
  Bundle,
  Cause,
  FormulaNode,
  Statement,
  causeIndex,
  causeKey,
  positionCount,
  relevantSubformulasAt,
  statementOfCause,
} from "./bundle";
import { HoverTarget, ViewState } from "./state";

export interface Emphasis {
  traces: Set<string>;
  positions: Set<number>;
  states: Set<number>;
  subformulas: Set<number>;
  /** Value cells, keyed by causeKey(trace, atom, t). */
  values: Set<string>;
  /** Whole (trace, step) cells, keyed `${trace}:${t}`. */
  runCells: Set<string>;
}

function emptyEmphasis(): Emphasis {
  return {
    traces: new Set(),
    positions: new Set(),
    states: new Set(),
    subformulas: new Set(),
    values: new Set(),
    runCells: new Set(),
  };
}

function subtreeIds(bundle: Bundle, rootId: number): Set<number> {
  const ids = new Set<number>([rootId]);
  let grew = true;
  while (grew) {
    grew = false;
    for (const node of bundle.formula.nodes) {
      if (node.parent !== null && ids.has(node.parent) && !ids.has(node.id)) {
        ids.add(node.id);
        grew = true;
      }
    }
  }
  return ids;
}

function ancestorsAndSelf(bundle: Bundle, id: number): number[] {
  const out: number[] = [];
  let node: FormulaNode | undefined = bundle.formula.nodes[id];
  while (node) {
    out.push(node.id);
    node = node.parent === null ? undefined : bundle.formula.nodes[node.parent];
  }
  return out;
}

/** Emphasis sets implied by the current hover target. */
export function hoverEmphasis(bundle: Bundle, target: HoverTarget | null): Emphasis {
  const em = emptyEmphasis();
  if (!target) return em;
  switch (target.kind) {
    case "trace": {
      em.traces.add(target.var);
      for (let t = 0; t < positionCount(bundle); t++) {
        em.runCells.add(`${target.var}:${t}`);
      }
      break;
    }
    case "position": {
      em.positions.add(target.t);
      if (bundle.stateSequences) {
        for (const [v, run] of Object.entries(bundle.stateSequences)) {
          const s = run[target.t];
          if (s !== undefined) em.states.add(s);
          em.runCells.add(`${v}:${target.t}`);
        }
      }
      for (const id of relevantSubformulasAt(bundle, target.t)) em.subformulas.add(id);
      break;
    }
    case "state": {
      em.states.add(target.id);
      if (bundle.stateSequences) {
        for (const [v, run] of Object.entries(bundle.stateSequences)) {
          run.forEach((s, t) => {
            if (s === target.id) em.runCells.add(`${v}:${t}`);
          });
        }
      }
      break;
    }
    case "subformula": {
      for (const id of subtreeIds(bundle, target.id)) em.subformulas.add(id);
      for (const node of bundle.formula.nodes) {
        if (em.subformulas.has(node.id) && node.op === "atom" && node.atom && node.trace) {
          for (let t = 0; t < positionCount(bundle); t++) {
            em.values.add(causeKey(node.trace, node.atom, t));
          }
        }
      }
      break;
    }
    case "value": {
      em.values.add(causeKey(target.trace, target.atom, target.t));
      for (const node of bundle.formula.nodes) {
        if (node.op === "atom" && node.atom === target.atom && node.trace === target.trace) {
          em.subformulas.add(node.id);
        }
      }
      break;
    }
  }
  return em;
}

export interface Relevance {
  /** Cause triples by cell key. */
  causes: Map<string, Cause>;
  /** Statement owning each cause cell (for its color). */
  statementOf: Map<string, Statement>;
  /** Formula nodes on a path from a cause occurrence to the root. */
  nodes: Set<number>;
  /** Variable names with at least one cause, per trace-agnostic name. */
  atoms: Set<string>;
}

export function computeRelevance(bundle: Bundle): Relevance {
  const causes = causeIndex(bundle);
  const statementOf = new Map<string, Statement>();
  const nodes = new Set<number>();
  const atoms = new Set<string>();
  for (const cause of bundle.causes) {
    const key = causeKey(cause.trace, cause.atom, cause.t);
    const stmt = statementOfCause(bundle, cause);
    if (stmt) statementOf.set(key, stmt);
    atoms.add(cause.atom);
    for (const occ of cause.subformulas) {
      for (const id of ancestorsAndSelf(bundle, occ)) nodes.add(id);
    }
  }
  return { causes, statementOf, nodes, atoms };
}

/** Variable names the trace and timeline views show under the current state. */
export function visibleColumns(bundle: Bundle, state: ViewState, relevance: Relevance): string[] {
  return bundle.varDecls
    .filter((d) => !state.hiddenKinds.has(d.kind))
    .filter((d) => !state.filterOn || relevance.atoms.has(d.name))
    .map((d) => d.name);
}

/** True when the letters of the traces differ at position t. */
export function divergesAt(bundle: Bundle, t: number): boolean {
  const seen = new Set<string>();
  for (const row of bundle.traces) {
    const letter = (t < row.stem.length ? row.stem[t] : row.loop[t - row.stem.length]) ?? [];
    seen.add([...letter].sort().join(","));
  }
  return seen.size > 1;
}
