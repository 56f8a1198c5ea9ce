// Application shell: owns the bundle, the shared view state, and the five
// panels.  Views are pure; every interaction funnels through one delegated
// listener pair, produces the next state, and re-renders everything, so the
// panels can never disagree about what is highlighted.

import { ApiError, VersionInfo, WorkbenchClient } from "./api";
import { Bundle, VarKind } from "./bundle";
import { el, readHoverAttr } from "./dom";
import { createEditor } from "./editor";
import { computeRelevance, hoverEmphasis, Relevance } from "./relevance";
import {
  clearStep,
  initialState,
  rememberHighlightDefault,
  selectStep,
  setHighlight,
  setFilter,
  setHover,
  step,
  toggleKind,
  ViewState,
} from "./state";
import { renderFormulaView } from "./views/formula";
import { renderGraphView } from "./views/graph";
import { renderStatementView } from "./views/statements";
import { renderTimelineView } from "./views/timeline";
import { renderTraceView } from "./views/traces";

export interface AppOptions {
  client: WorkbenchClient;
  bound?: number;
  storage?: Storage;
}

const PANELS: [string, string][] = [
  ["formula", "formula"],
  ["statements", "causal statements"],
  ["traces", "traces"],
  ["graph", "state graph"],
  ["timeline", "timeline"],
];

export class App {
  private bundle: Bundle | null = null;
  private relevance: Relevance | null = null;
  private state: ViewState;
  private checkId: string | null = null;
  private runInFlight = false;
  private maximized: string | null = null;
  private collapsed = new Set<string>();
  private panelBodies = new Map<string, HTMLElement>();
  private panelShells = new Map<string, HTMLElement>();
  private grid: HTMLElement;
  private statusLine: HTMLElement;
  private runButton: HTMLButtonElement;
  private editorHost: HTMLElement;

  constructor(
    private container: HTMLElement,
    private options: AppOptions,
  ) {
    this.state = initialState(options.storage);

    this.statusLine = el("span", { class: "app-status" });
    this.runButton = el("button", {
      class: "run-check",
      "data-action": "run-check",
      text: "run check",
    }) as HTMLButtonElement;
    const toolbar = el(
      "div",
      { class: "app-toolbar" },
      el("button", { "data-action": "step-back", text: "◀ step" }),
      el("button", { "data-action": "step-forward", text: "step ▶" }),
      el("button", { "data-action": "clear-step", text: "clear step" }),
      this.runButton,
      el("button", { "data-action": "toggle-editor", text: "edit formula" }),
      this.statusLine,
    );

    this.grid = el("div", { class: "workbench-grid" });
    for (const [name, title] of PANELS) {
      const body = el("div", { class: "panel-body" });
      const shell = el(
        "section",
        { class: "panel", "data-panel": name },
        el(
          "header",
          { class: "panel-header" },
          el("span", { class: "panel-title", text: title }),
          el("button", {
            "data-action": "maximize-panel",
            "data-panel-name": name,
            title: "maximize",
            text: "⤢",
          }),
          el("button", {
            "data-action": "toggle-panel",
            "data-panel-name": name,
            title: "collapse",
            text: "−",
          }),
        ),
        body,
      );
      this.panelBodies.set(name, body);
      this.panelShells.set(name, shell);
      this.grid.append(shell);
    }

    this.editorHost = el("div", { class: "editor-host" });
    this.editorHost.hidden = true;

    container.append(toolbar, this.editorHost, this.grid);
    container.addEventListener("mouseover", (ev) => this.onHover(ev));
    container.addEventListener("mouseout", () => {
      if (this.state.hoverTarget) this.update(setHover(this.state, null));
    });
    container.addEventListener("click", (ev) => this.onAction(ev));
  }

  /** Install a bundle directly (already fetched or loaded from a file). */
  setBundle(bundle: Bundle, checkId: string | null = null): void {
    this.bundle = bundle;
    this.relevance = computeRelevance(bundle);
    this.checkId = checkId;
    this.state = { ...this.state, currentStep: null, hoverTarget: null };
    this.mountEditor();
    this.renderAll();
  }

  async loadBundle(checkId: string): Promise<void> {
    const bundle = await this.options.client.bundle(checkId);
    this.setBundle(bundle, checkId);
  }

  getState(): ViewState {
    return this.state;
  }

  private mountEditor(): void {
    this.editorHost.replaceChildren();
    if (!this.bundle || !this.checkId) return;
    this.editorHost.append(
      createEditor({
        client: this.options.client,
        checkId: this.checkId,
        initialText: this.bundle.formula.text,
        bound: this.options.bound,
        onEdited: (version: VersionInfo) => {
          if (version.editedCheckId) this.checkId = version.editedCheckId;
          this.statusLine.textContent = `formula stored as version ${version.id}`;
        },
      }),
    );
  }

  private update(next: ViewState): void {
    this.state = next;
    this.renderAll();
  }

  private renderAll(): void {
    if (!this.bundle || !this.relevance) return;
    const em = hoverEmphasis(this.bundle, this.state.hoverTarget);
    const bodies: Record<string, HTMLElement> = {
      formula: renderFormulaView(this.bundle, this.state, this.relevance, em),
      statements: renderStatementView(this.bundle, this.state, this.relevance, em),
      traces: renderTraceView(this.bundle, this.state, this.relevance, em),
      graph: renderGraphView(this.bundle, this.state, em),
      timeline: renderTimelineView(this.bundle, this.state, this.relevance, em),
    };
    for (const [name, body] of Object.entries(bodies)) {
      this.panelBodies.get(name)?.replaceChildren(body);
    }
    for (const [name, shell] of this.panelShells) {
      shell.classList.toggle("collapsed", this.collapsed.has(name));
      shell.classList.toggle("maximized", this.maximized === name);
      shell.hidden = this.maximized !== null && this.maximized !== name;
    }
    this.grid.classList.toggle("has-maximized", this.maximized !== null);
  }

  private onHover(ev: Event): void {
    const target = (ev.target as Element | null)?.closest?.("[data-hover]");
    const parsed = target ? readHoverAttr(target.getAttribute("data-hover")) : null;
    const current = JSON.stringify(this.state.hoverTarget);
    if (JSON.stringify(parsed) === current) return;
    this.update(setHover(this.state, parsed));
  }

  private onAction(ev: Event): void {
    const elem = (ev.target as Element | null)?.closest?.("[data-action]");
    if (!elem) return;
    const action = elem.getAttribute("data-action");
    const panelName = elem.getAttribute("data-panel-name");
    switch (action) {
      case "toggle-panel":
        if (panelName) {
          if (this.collapsed.has(panelName)) this.collapsed.delete(panelName);
          else this.collapsed.add(panelName);
          this.renderAll();
        }
        return;
      case "maximize-panel":
        this.maximized = this.maximized === panelName ? null : panelName;
        this.renderAll();
        return;
      case "toggle-editor":
        this.editorHost.hidden = !this.editorHost.hidden;
        return;
      case "run-check":
        void this.runCurrentCheck();
        return;
    }
    if (!this.bundle) return;
    switch (action) {
      case "select-step": {
        const t = Number(elem.getAttribute("data-step"));
        this.update(selectStep(this.state, this.bundle, t));
        return;
      }
      case "step-forward":
        this.update(step(this.state, this.bundle, "forward"));
        return;
      case "step-back":
        this.update(step(this.state, this.bundle, "back"));
        return;
      case "clear-step":
        this.update(clearStep(this.state));
        return;
      case "toggle-highlight": {
        const next = setHighlight(this.state, !this.state.highlightOn);
        rememberHighlightDefault(next.highlightOn, this.options.storage);
        this.update(next);
        return;
      }
      case "toggle-filter":
        this.update(setFilter(this.state, !this.state.filterOn));
        return;
      case "toggle-kind": {
        const kind = elem.getAttribute("data-kind") as VarKind | null;
        if (kind) this.update(toggleKind(this.state, kind));
        return;
      }
    }
  }

  private async runCurrentCheck(): Promise<void> {
    if (!this.checkId || this.runInFlight) return;
    this.runInFlight = true;
    this.runButton.disabled = true;
    this.statusLine.textContent = "running";
    try {
      const check = await this.options.client.runCheck(this.checkId, this.options.bound);
      if (check.status === "fail") {
        await this.loadBundle(this.checkId);
        this.statusLine.textContent = `check ${check.id}: counterexample found`;
      } else {
        this.statusLine.textContent = `check ${check.id}: ${check.status}`;
      }
    } catch (err) {
      this.statusLine.textContent =
        err instanceof ApiError ? `${err.body.error}: ${err.body.detail}` : String(err);
    } finally {
      this.runInFlight = false;
      this.runButton.disabled = false;
    }
  }
}
