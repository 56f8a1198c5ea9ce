// Graph view: node-link rendering of the machine from its DOT text, with
// zoom/pan on the SVG and run coloring driven by the state sequences.

import { Bundle, positionCount } from "../bundle";
import { STEP_COLOR, traceColor } from "../colors";
import { classes, el, hoverAttr, svgEl } from "../dom";
import { MachineGraph, parseDot } from "../dot";
import { Emphasis } from "../relevance";
import { ViewState } from "../state";

const W = 560;
const H = 360;

interface Layout {
  x: number;
  y: number;
}

function circleLayout(graph: MachineGraph): Map<string, Layout> {
  const positions = new Map<string, Layout>();
  const n = graph.nodes.length;
  const radius = Math.min(W, H) / 2 - 60;
  graph.nodes.forEach((node, i) => {
    const angle = (2 * Math.PI * i) / Math.max(n, 1) - Math.PI / 2;
    positions.set(node.id, {
      x: W / 2 + radius * Math.cos(angle),
      y: H / 2 + radius * Math.sin(angle),
    });
  });
  return positions;
}

function stateIndex(nodeId: string): number {
  return Number(nodeId.replace(/^s/, ""));
}

interface RunMarks {
  /** node id -> trace vars whose run visits it */
  nodeRuns: Map<string, string[]>;
  /** "from>to" -> trace vars taking that transition */
  edgeRuns: Map<string, string[]>;
  /** node id -> trace vars sitting there at the current step */
  stepNodes: Map<string, string[]>;
  /** "from>to" -> trace vars taking it out of the current step */
  stepEdges: Map<string, string[]>;
}

function computeRuns(bundle: Bundle, state: ViewState): RunMarks {
  const marks: RunMarks = {
    nodeRuns: new Map(),
    edgeRuns: new Map(),
    stepNodes: new Map(),
    stepEdges: new Map(),
  };
  const runs = bundle.stateSequences;
  if (!runs) return marks;
  const push = (map: Map<string, string[]>, key: string, v: string) => {
    const list = map.get(key) ?? [];
    if (!list.includes(v)) list.push(v);
    map.set(key, list);
  };
  for (const [v, run] of Object.entries(runs)) {
    run.forEach((s, t) => {
      push(marks.nodeRuns, `s${s}`, v);
      const next = run[t + 1];
      if (next !== undefined) push(marks.edgeRuns, `s${s}>s${next}`, v);
    });
    const t = state.currentStep;
    if (t !== null) {
      const here = run[t];
      if (here !== undefined) push(marks.stepNodes, `s${here}`, v);
      const next = run[t + 1];
      if (here !== undefined && next !== undefined) {
        push(marks.stepEdges, `s${here}>s${next}`, v);
      }
    }
  }
  return marks;
}

function runStroke(bundle: Bundle, vars: string[]): string {
  // a state or transition shared by several traces at the step is blue
  if (vars.length > 1) return STEP_COLOR;
  return vars[0] ? traceColor(bundle, vars[0]) : STEP_COLOR;
}

function attachZoomPan(svg: SVGSVGElement): void {
  let scale = 1;
  let ox = 0;
  let oy = 0;
  const apply = () => {
    svg.setAttribute("viewBox", `${ox} ${oy} ${W / scale} ${H / scale}`);
  };
  apply();
  svg.addEventListener("wheel", (ev) => {
    ev.preventDefault();
    scale = Math.min(8, Math.max(0.25, scale * (ev.deltaY < 0 ? 1.2 : 1 / 1.2)));
    apply();
  });
  let dragging: { x: number; y: number } | null = null;
  svg.addEventListener("pointerdown", (ev) => {
    dragging = { x: ev.clientX, y: ev.clientY };
  });
  svg.addEventListener("pointermove", (ev) => {
    if (!dragging) return;
    ox -= (ev.clientX - dragging.x) / scale;
    oy -= (ev.clientY - dragging.y) / scale;
    dragging = { x: ev.clientX, y: ev.clientY };
    apply();
  });
  svg.addEventListener("pointerup", () => {
    dragging = null;
  });
}

export function renderGraphView(
  bundle: Bundle,
  state: ViewState,
  em: Emphasis,
): HTMLElement {
  const graph = bundle.dot ? parseDot(bundle.dot) : null;
  if (!graph) {
    return el(
      "div",
      { class: "graph-view" },
      el("p", {
        class: "graph-unavailable",
        text: "state graph unavailable: this counterexample was not produced from a machine",
      }),
    );
  }

  const layout = circleLayout(graph);
  const marks = computeRuns(bundle, state);
  const visited = new Set(marks.nodeRuns.keys());

  const svg = svgEl("svg", {
    class: "graph-svg",
    width: String(W),
    height: String(H),
  }) as SVGSVGElement;
  attachZoomPan(svg);

  for (const edge of graph.edges) {
    const from = layout.get(edge.from);
    const to = layout.get(edge.to);
    if (!from || !to) continue;
    const key = `${edge.from}>${edge.to}`;
    const runVars = marks.edgeRuns.get(key) ?? [];
    const stepVars = marks.stepEdges.get(key) ?? [];
    const hoverRun = runVars.filter((v) => em.traces.has(v));

    const group = svgEl("g", {
      class: classes(
        "edge",
        state.highlightOn && runVars.length === 0 && "dimmed",
        stepVars.length > 0 && "step-edge",
        ...hoverRun.map((v) => `run-${v}`),
      ),
    });
    let path: SVGElement;
    if (edge.from === edge.to) {
      path = svgEl("circle", {
        cx: String(from.x),
        cy: String(from.y - 30),
        r: "14",
        fill: "none",
      });
    } else {
      path = svgEl("line", {
        x1: String(from.x),
        y1: String(from.y),
        x2: String(to.x),
        y2: String(to.y),
      });
    }
    path.setAttribute("stroke", "#999");
    if (hoverRun.length) path.setAttribute("stroke", runStroke(bundle, hoverRun));
    if (stepVars.length) {
      path.setAttribute("stroke", runStroke(bundle, stepVars));
      path.setAttribute("stroke-width", "3");
    }
    group.append(path);
    const label = svgEl("text", {
      x: String((from.x + to.x) / 2),
      y: String(edge.from === edge.to ? from.y - 50 : (from.y + to.y) / 2 - 4),
      class: "edge-label",
    });
    label.textContent = edge.guard;
    group.append(label);
    svg.append(group);
  }

  for (const node of graph.nodes) {
    const pos = layout.get(node.id);
    if (!pos) continue;
    const idx = stateIndex(node.id);
    const runVars = marks.nodeRuns.get(node.id) ?? [];
    const stepVars = marks.stepNodes.get(node.id) ?? [];
    const hoverRun = runVars.filter((v) => em.traces.has(v));

    const group = svgEl("g", {
      class: classes(
        "state-node",
        graph.initial === node.id && "initial",
        em.states.has(idx) && "hovered",
        state.highlightOn && !visited.has(node.id) && "dimmed",
        stepVars.length > 0 && "step-node",
        ...hoverRun.map((v) => `run-${v}`),
      ),
      "data-hover": hoverAttr({ kind: "state", id: idx }),
    });
    const circle = svgEl("circle", {
      cx: String(pos.x),
      cy: String(pos.y),
      r: "22",
      fill: "#fff",
      stroke: "#444",
    });
    if (hoverRun.length) {
      circle.setAttribute("stroke", runStroke(bundle, hoverRun));
      circle.setAttribute("stroke-width", "3");
    }
    if (stepVars.length) {
      circle.setAttribute("stroke", runStroke(bundle, stepVars));
      circle.setAttribute("stroke-width", "4");
    }
    group.append(circle);
    const name = svgEl("text", {
      x: String(pos.x),
      y: String(pos.y + 4),
      "text-anchor": "middle",
      class: "state-name",
    });
    name.textContent = node.name;
    group.append(name);
    const label = svgEl("text", {
      x: String(pos.x),
      y: String(pos.y + 38),
      "text-anchor": "middle",
      class: "state-atoms",
    });
    label.textContent = `{${node.label.join(", ")}}`;
    group.append(label);
    svg.append(group);
  }

  const legend = el("div", { class: "graph-legend" });
  for (const row of bundle.traces) {
    const chip = el("span", {
      class: "legend-chip",
      "data-hover": hoverAttr({ kind: "trace", var: row.var }),
      text: row.var,
    });
    chip.style.color = traceColor(bundle, row.var);
    legend.append(chip);
  }
  if (state.currentStep !== null && positionCount(bundle) > 0) {
    legend.append(el("span", { class: "legend-step", text: `step T${state.currentStep}` }));
  }

  const view = el("div", { class: "graph-view" }, legend);
  view.append(svg);
  return view;
}
