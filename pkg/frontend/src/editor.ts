// Formula editor: a textarea with a symbol palette, live parse diagnostics,
// and a submit path that stores the edit as a new version and optionally
// re-runs the edited check.

import { ApiError, VersionInfo, WorkbenchClient } from "./api";
import { classes, el } from "./dom";
import { describeFailure, renderUnicode, tryParse } from "./formula";

export interface EditorOptions {
  client: WorkbenchClient;
  checkId: string;
  initialText: string;
  bound?: number;
  onEdited?: (version: VersionInfo) => void;
}

const PALETTE: [string, string][] = [
  ["∀", "forall "],
  ["∃", "exists "],
  ["G", "G "],
  ["F", "F "],
  ["X", "X "],
  ["U", "U "],
  ["R", "R "],
  ["¬", "!"],
  ["∧", "&"],
  ["∨", "|"],
  ["→", "->"],
  ["↔", "<->"],
];

export function createEditor(options: EditorOptions): HTMLElement {
  const root = el("div", { class: "formula-editor" });
  const area = el("textarea", {
    class: "formula-input",
    rows: "3",
    spellcheck: "false",
  }) as HTMLTextAreaElement;
  area.value = options.initialText;

  const preview = el("div", { class: "parse-preview" });
  const submit = el("button", {
    class: "submit-edit",
    text: "save as new version",
  }) as HTMLButtonElement;
  const status = el("div", { class: "edit-status" });
  let inFlight = false;

  const refresh = (): void => {
    const outcome = tryParse(area.value);
    preview.replaceChildren();
    if (outcome.ok) {
      preview.append(
        el("code", { class: "preview-ok", text: renderUnicode(outcome.formula) }),
      );
    } else {
      const caret = " ".repeat(outcome.error.column) + "^";
      preview.append(
        el("div", { class: "preview-error", text: describeFailure(outcome.error) }),
        el("pre", { class: "error-caret", text: `${area.value}\n${caret}` }),
      );
    }
    submit.disabled = inFlight || !outcome.ok;
  };

  const palette = el("div", { class: "symbol-palette" });
  for (const [symbol, insertion] of PALETTE) {
    const btn = el("button", {
      class: "palette-key",
      type: "button",
      title: `insert ${insertion.trim() || insertion}`,
      text: symbol,
    });
    btn.addEventListener("click", () => {
      const start = area.selectionStart ?? area.value.length;
      const end = area.selectionEnd ?? start;
      area.value = area.value.slice(0, start) + insertion + area.value.slice(end);
      const cursor = start + insertion.length;
      area.setSelectionRange(cursor, cursor);
      area.focus();
      refresh();
    });
    palette.append(btn);
  }

  area.addEventListener("input", refresh);

  const offerRecheck = (version: VersionInfo): void => {
    const target = version.editedCheckId;
    if (!target) return;
    const btn = el("button", {
      class: "run-edited",
      text: "re-check edited formula",
    }) as HTMLButtonElement;
    btn.addEventListener("click", async () => {
      btn.disabled = true;
      try {
        const check = await options.client.runCheck(target, options.bound);
        status.replaceChildren(
          el("span", {
            class: classes("run-result", `status-${check.status}`),
            text: `check ${check.id}: ${check.status}`,
          }),
        );
      } catch (err) {
        showError(err);
        btn.disabled = false;
      }
    });
    status.append(btn);
  };

  const showError = (err: unknown): void => {
    const text =
      err instanceof ApiError
        ? `${err.body.error}: ${err.body.detail}`
        : String(err);
    status.replaceChildren(el("span", { class: "edit-error", text }));
  };

  submit.addEventListener("click", async () => {
    if (inFlight) return;
    inFlight = true;
    submit.disabled = true;
    status.replaceChildren(el("span", { class: "edit-pending", text: "saving" }));
    try {
      const version = await options.client.editFormula(options.checkId, area.value);
      status.replaceChildren(
        el("span", {
          class: "edit-saved",
          text: `saved as version ${version.id}`,
        }),
      );
      offerRecheck(version);
      options.onEdited?.(version);
    } catch (err) {
      showError(err);
    } finally {
      inFlight = false;
      refresh();
    }
  });

  root.append(palette, area, preview, submit, status);
  refresh();
  return root;
}
