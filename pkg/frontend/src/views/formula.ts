// Formula view: the formula text with nested hierarchy bars beneath it,
// one bar per subformula, positioned by character span (the text is
// rendered in a monospace block so `ch` units line up with columns).

import { Bundle } from "../bundle";
import { statementColor } from "../colors";
import { classes, el, hoverAttr } from "../dom";
import { Emphasis, Relevance } from "../relevance";
import { ViewState } from "../state";

function nodeClasses(
  bundle: Bundle,
  state: ViewState,
  relevance: Relevance,
  em: Emphasis,
  id: number,
): string {
  const verdict = bundle.verdicts[String(id)] ?? "irrelevant";
  return classes(
    `verdict-${verdict}`,
    em.subformulas.has(id) && "hovered",
    state.highlightOn && !relevance.nodes.has(id) && "dimmed",
  );
}

export function renderFormulaView(
  bundle: Bundle,
  state: ViewState,
  relevance: Relevance,
  em: Emphasis,
): HTMLElement {
  const { text, nodes } = bundle.formula;
  const statementByNode = new Map(
    bundle.statements.map((s) => [s.subformulaId, s] as const),
  );

  const textLine = el("div", { class: "formula-text", role: "presentation" });
  // split the text at every span boundary so each segment can carry the
  // classes of the innermost node covering it
  const cuts = new Set<number>([0, text.length]);
  for (const n of nodes) {
    cuts.add(n.start);
    cuts.add(n.end);
  }
  const sorted = [...cuts].sort((a, b) => a - b);
  for (let i = 0; i + 1 < sorted.length; i++) {
    const lo = sorted[i] ?? 0;
    const hi = sorted[i + 1] ?? 0;
    if (hi <= lo) continue;
    let owner: number | null = null;
    let ownerDepth = -1;
    for (const n of nodes) {
      if (n.start <= lo && hi <= n.end && n.depth > ownerDepth) {
        owner = n.id;
        ownerDepth = n.depth;
      }
    }
    const segment = el("span", { text: text.slice(lo, hi) });
    if (owner !== null) {
      segment.className = nodeClasses(bundle, state, relevance, em, owner);
      segment.dataset.node = String(owner);
      segment.dataset.hover = hoverAttr({ kind: "subformula", id: owner });
    } else {
      segment.className = "prefix";
    }
    textLine.append(segment);
  }

  const bars = el("div", { class: "formula-bars" });
  const maxDepth = Math.max(0, ...nodes.map((n) => n.depth));
  for (let depth = 0; depth <= maxDepth; depth++) {
    const row = el("div", { class: "bar-row" });
    for (const n of nodes) {
      if (n.depth !== depth) continue;
      const bar = el("div", {
        class: classes("bar", nodeClasses(bundle, state, relevance, em, n.id)),
        "data-node": String(n.id),
        "data-hover": hoverAttr({ kind: "subformula", id: n.id }),
        title: `subformula ${n.id}: ${text.slice(n.start, n.end)}`,
      });
      // bars are absolutely positioned inside the row so same-depth
      // siblings do not push each other out of column alignment
      bar.style.left = `${n.start}ch`;
      bar.style.width = `${Math.max(n.end - n.start, 1)}ch`;
      const stmt = statementByNode.get(n.id);
      if (stmt) bar.style.background = statementColor(stmt.colorIndex);
      row.append(bar);
    }
    if (row.childNodes.length) bars.append(row);
  }

  return el("div", { class: "formula-view" }, textLine, bars);
}
