// Statement view: the highlight and filter toggles plus one card per
// statement.  A card shows the statement's color swatch, its sentence, a
// verdict badge, and word-sized value glyphs for every (trace, fact position)
// pair so the seed values can be read without leaving the panel.

import { Bundle, letterAt, Statement } from "../bundle";
import { statementColor } from "../colors";
import { classes, el, hoverAttr } from "../dom";
import { Emphasis, Relevance } from "../relevance";
import { ViewState } from "../state";
import { verbalize } from "../verbalize";

function toggleButton(
  label: string,
  action: string,
  pressed: boolean,
): HTMLElement {
  return el("button", {
    class: classes("toggle", pressed && "on"),
    "data-action": action,
    "aria-pressed": String(pressed),
    text: label,
  });
}

function factGlyphs(bundle: Bundle, stmt: Statement): HTMLElement {
  const box = el("span", { class: "fact-glyphs" });
  for (const fact of stmt.atomFacts) {
    for (const t of fact.positions) {
      for (const row of bundle.traces) {
        const present = letterAt(row, t).includes(fact.atomName);
        box.append(
          el("span", {
            class: classes("glyph", present ? "filled" : "hollow"),
            "data-hover": hoverAttr({
              kind: "value",
              trace: row.var,
              atom: fact.atomName,
              t,
            }),
            title: `${fact.atomName}[${row.var}] at T${t}: ${present}`,
          }),
        );
      }
    }
  }
  return box;
}

export function renderStatementView(
  bundle: Bundle,
  state: ViewState,
  relevance: Relevance,
  em: Emphasis,
): HTMLElement {
  const view = el("div", { class: "statement-view" });
  view.append(
    el(
      "div",
      { class: "statement-toolbar" },
      toggleButton("highlight", "toggle-highlight", state.highlightOn),
      toggleButton("filter", "toggle-filter", state.filterOn),
    ),
  );

  if (!bundle.statements.length) {
    view.append(el("p", { class: "empty-note", text: "no causal statements" }));
    return view;
  }

  for (const stmt of bundle.statements) {
    const card = el("div", {
      class: classes(
        "statement-card",
        em.subformulas.has(stmt.subformulaId) && "hovered",
      ),
      "data-hover": hoverAttr({ kind: "subformula", id: stmt.subformulaId }),
      "data-statement": String(stmt.statementId),
    });
    const swatch = el("span", { class: "swatch" });
    swatch.style.background = statementColor(stmt.colorIndex);
    card.append(
      swatch,
      el("span", { class: "statement-text", text: verbalize(stmt) }),
      factGlyphs(bundle, stmt),
      el("span", {
        class: `verdict-badge verdict-${stmt.verdict}`,
        text: stmt.verdict,
      }),
    );
    view.append(card);
  }
  return view;
}
