// Timeline view: a compact band per trace.  Each tick is one timestep; its
// tooltip lists the variables true there.  Below the bands, one bar track per
// statement marks the positions its facts talk about.

import { Bundle, letterAt, positionCount } from "../bundle";
import { statementColor, STEP_COLOR, traceColor } from "../colors";
import { classes, el, hoverAttr } from "../dom";
import { divergesAt, Emphasis, Relevance } from "../relevance";
import { ViewState } from "../state";

export function renderTimelineView(
  bundle: Bundle,
  state: ViewState,
  relevance: Relevance,
  em: Emphasis,
): HTMLElement {
  const count = positionCount(bundle);
  const view = el("div", { class: "timeline-view" });

  const axis = el("div", { class: "timeline-axis" }, el("span", { class: "band-label" }));
  for (let t = 0; t < count; t++) {
    axis.append(
      el("span", {
        class: classes(
          "axis-tick",
          t === state.currentStep && "step-current",
          t === bundle.stemLen && "loop-start",
        ),
        "data-action": "select-step",
        "data-step": String(t),
        text: String(t),
      }),
    );
  }
  view.append(axis);

  for (const row of bundle.traces) {
    const band = el("div", {
      class: classes("timeline-band", em.traces.has(row.var) && "hovered"),
    });
    const label = el("span", {
      class: "band-label",
      "data-hover": hoverAttr({ kind: "trace", var: row.var }),
      text: row.var,
    });
    label.style.color = traceColor(bundle, row.var);
    band.append(label);
    for (let t = 0; t < count; t++) {
      const truthy = letterAt(row, t);
      const tick = el("span", {
        class: classes(
          "tick",
          divergesAt(bundle, t) && "diverging",
          t === state.currentStep && "step-current",
          em.positions.has(t) && "hovered",
          em.runCells.has(`${row.var}:${t}`) && "run-hovered",
        ),
        "data-action": "select-step",
        "data-step": String(t),
        title: truthy.length ? truthy.join(", ") : "(none)",
      });
      tick.style.setProperty("--fill", truthy.length ? traceColor(bundle, row.var) : "transparent");
      if (t === state.currentStep) tick.style.outlineColor = STEP_COLOR;
      band.append(tick);
    }
    view.append(band);
  }

  for (const stmt of bundle.statements) {
    const marked = new Set<number>();
    for (const fact of stmt.atomFacts) for (const t of fact.positions) marked.add(t);
    const track = el("div", {
      class: classes(
        "statement-track",
        em.subformulas.has(stmt.subformulaId) && "hovered",
      ),
      "data-hover": hoverAttr({ kind: "subformula", id: stmt.subformulaId }),
    });
    const label = el("span", {
      class: "band-label",
      text: `#${stmt.subformulaId}`,
    });
    label.style.color = statementColor(stmt.colorIndex);
    track.append(label);
    for (let t = 0; t < count; t++) {
      const bar = el("span", {
        class: classes("track-cell", marked.has(t) && "fact-bar"),
      });
      if (marked.has(t)) bar.style.background = statementColor(stmt.colorIndex);
      track.append(bar);
    }
    view.append(track);
  }

  return view;
}
