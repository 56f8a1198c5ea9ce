// Browser entry point.  Query parameters pick the backend and the check:
//   ?api=http://127.0.0.1:8000   service base URL (default shown)
//   ?check=c1                    load this check's bundle immediately
//   ?bound=8                     bound passed to runs started from the UI
// Without ?check= a small browser over projects/versions/checks is shown;
// a local bundle JSON file can also be opened directly.

import { ApiError, WorkbenchClient } from "./api";
import { App } from "./app";
import { Bundle } from "./bundle";
import { el } from "./dom";

const params = new URLSearchParams(location.search);
const base = params.get("api") ?? "http://127.0.0.1:8000";
const client = new WorkbenchClient(base);

const root = document.getElementById("app");
if (!root) throw new Error("missing #app container");

const boundParam = Number(params.get("bound"));
const app = new App(root, {
  client,
  bound: Number.isFinite(boundParam) && boundParam > 0 ? boundParam : undefined,
});

async function renderPicker(host: HTMLElement): Promise<void> {
  host.replaceChildren(el("p", { text: "loading projects" }));
  try {
    const projects = await client.projects();
    const list = el("div", { class: "check-picker" });
    if (!projects.length) {
      list.append(el("p", { text: `no projects on ${base} yet` }));
    }
    for (const project of projects) {
      const section = el("div", {}, el("h3", { text: `${project.id}: ${project.name}` }));
      const versions = await client.versions(project.id);
      for (const version of versions) {
        for (const check of version.checks) {
          const button = el("button", {
            text: `${check.id} [${check.status}] ${check.formulaText}`,
          });
          button.addEventListener("click", async () => {
            try {
              await app.loadBundle(check.id);
              host.remove();
            } catch (err) {
              const note =
                err instanceof ApiError && err.status === 404
                  ? `${check.id} has no counterexample bundle; run it first`
                  : String(err);
              host.append(el("p", { class: "picker-error", text: note }));
            }
          });
          section.append(el("div", {}, button));
        }
      }
      list.append(section);
    }
    host.replaceChildren(el("h2", { text: "pick a failed check" }), list);
  } catch (err) {
    host.replaceChildren(
      el("p", { class: "picker-error", text: `cannot reach ${base}: ${String(err)}` }),
    );
  }

  const file = el("input", { type: "file", accept: ".json" }) as HTMLInputElement;
  file.addEventListener("change", async () => {
    const chosen = file.files?.[0];
    if (!chosen) return;
    const bundle = JSON.parse(await chosen.text()) as Bundle;
    app.setBundle(bundle);
    host.remove();
  });
  host.append(el("p", { text: "or open a saved bundle JSON:" }), file);
}

const checkId = params.get("check");
if (checkId) {
  void app.loadBundle(checkId).catch((err) => {
    root.prepend(el("p", { class: "picker-error", text: String(err) }));
  });
} else {
  const picker = el("div", { class: "picker-host" });
  root.prepend(picker);
  void renderPicker(picker);
}
