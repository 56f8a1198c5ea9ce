// Trace view: one column group per trace, one row per timestep.  A filled
// rectangle is a present variable, a hollow one absent.  Rows carry state
// indicators and the lasso loop marker; headers carry kind icons and the
// per-kind hide controls.

import { Bundle, causeKey, letterAt, positionCount, VarKind } from "../bundle";
import { statementColor, traceColor } from "../colors";
import { classes, el, hoverAttr } from "../dom";
import { divergesAt, Emphasis, Relevance, visibleColumns } from "../relevance";
import { ViewState } from "../state";

const KIND_ICON: Record<VarKind, string> = { input: "→", output: "←", latch: "⟳" };

function hideControls(state: ViewState): HTMLElement {
  const bar = el("div", { class: "hide-controls" });
  for (const kind of ["input", "output", "latch"] as VarKind[]) {
    const label = el("label", {}, `${KIND_ICON[kind]} ${kind}`);
    const box = el("input", {
      type: "checkbox",
      "data-action": "toggle-kind",
      "data-kind": kind,
    }) as HTMLInputElement;
    box.checked = !state.hiddenKinds.has(kind);
    label.prepend(box);
    bar.append(label);
  }
  return bar;
}

export function renderTraceView(
  bundle: Bundle,
  state: ViewState,
  relevance: Relevance,
  em: Emphasis,
): HTMLElement {
  const columns = visibleColumns(bundle, state, relevance);
  const kindOf = new Map(bundle.varDecls.map((d) => [d.name, d.kind]));
  const count = positionCount(bundle);
  const table = el("table", { class: "trace-table" });

  const groupRow = el("tr", {}, el("th", {}), el("th", {}));
  const headRow = el("tr", {}, el("th", { text: "T" }), el("th", {}));
  for (const row of bundle.traces) {
    const group = el("th", {
      class: classes("trace-group", em.traces.has(row.var) && "hovered"),
      colspan: String(columns.length + 1),
      "data-hover": hoverAttr({ kind: "trace", var: row.var }),
      text: row.var,
    });
    group.style.color = traceColor(bundle, row.var);
    groupRow.append(group);
    headRow.append(el("th", { class: "state-head", text: "state" }));
    for (const name of columns) {
      const kind = kindOf.get(name) ?? "output";
      headRow.append(
        el(
          "th",
          { class: `col-${kind}`, "data-column": name },
          el("span", { class: "kind-icon", text: KIND_ICON[kind] }),
          el("span", { class: "col-name", text: name }),
        ),
      );
    }
  }
  table.append(groupRow, headRow);

  for (let t = 0; t < count; t++) {
    const isStep = state.currentStep === t;
    const tr = el("tr", {
      class: classes(
        t === bundle.stemLen && "loop-start",
        isStep && "step-current",
        em.positions.has(t) && "hovered",
      ),
    });
    tr.append(
      el("td", {
        class: "step-label",
        "data-action": "select-step",
        "data-step": String(t),
        "data-hover": hoverAttr({ kind: "position", t }),
        text: `T${t}`,
      }),
      el("td", { class: "loop-marker", text: t === bundle.stemLen ? "⟳" : "" }),
    );
    const stepDiverges = isStep && divergesAt(bundle, t);
    for (const row of bundle.traces) {
      const run = bundle.stateSequences?.[row.var];
      const stateId = run?.[t];
      const stateCell = el("td", {
        class: classes(
          "state-cell",
          stateId !== undefined && em.states.has(stateId) && "hovered",
        ),
        text: stateId === undefined ? "" : `S${stateId}`,
      });
      if (stateId !== undefined) {
        stateCell.dataset.hover = hoverAttr({ kind: "state", id: stateId });
      }
      tr.append(stateCell);

      const letter = letterAt(row, t);
      for (const name of columns) {
        const present = letter.includes(name);
        const key = causeKey(row.var, name, t);
        const cause = relevance.causes.get(key);
        const stmt = relevance.statementOf.get(key);
        const othersDiffer =
          stepDiverges &&
          bundle.traces.some(
            (other) =>
              other.var !== row.var && letterAt(other, t).includes(name) !== present,
          );
        const cell = el(
          "td",
          {
            class: classes(
              "value-cell",
              cause && "cause",
              state.highlightOn && !cause && "dimmed",
              (em.values.has(key) || em.runCells.has(`${row.var}:${t}`)) && "hovered",
              isStep && "step-cell",
              othersDiffer && "diverging",
            ),
            "data-hover": hoverAttr({ kind: "value", trace: row.var, atom: name, t }),
            "data-cell": `${row.var}:${name}:${t}`,
          },
          el("span", {
            class: classes("glyph", present ? "filled" : "hollow"),
            title: `${name}[${row.var}] at T${t}: ${present}`,
          }),
        );
        if (cause && stmt) {
          cell.style.outlineColor = statementColor(stmt.colorIndex);
          cell.classList.add(`statement-${stmt.statementId}`);
        }
        tr.append(cell);
      }
    }
    table.append(tr);
  }

  const wrap = el("div", { class: "trace-view" }, hideControls(state));
  wrap.append(el("div", { class: "trace-scroll" }, table));
  return wrap;
}
