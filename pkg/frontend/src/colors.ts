// One palette for the whole interface: every view asks here, so a trace
// or statement keeps its color everywhere.  The step color is reserved
// and never assigned to a trace or a statement.

import { Bundle } from "./bundle";

export const STEP_COLOR = "#1f6fd6";

const TRACE_COLORS = ["#d97706", "#7c3aed", "#0d9488", "#be185d", "#4d7c0f", "#b45309"];

const STATEMENT_COLORS = ["#16a34a", "#dc2626", "#9333ea", "#0891b2", "#ca8a04", "#db2777"];

export function traceColor(bundle: Bundle, traceVar: string): string {
  const i = bundle.traces.findIndex((r) => r.var === traceVar);
  return TRACE_COLORS[(i < 0 ? 0 : i) % TRACE_COLORS.length] ?? STEP_COLOR;
}

export function statementColor(colorIndex: number): string {
  return STATEMENT_COLORS[colorIndex % STATEMENT_COLORS.length] ?? STEP_COLOR;
}

/** Trace, statement, and step colors in use for one bundle. */
export function paletteInUse(bundle: Bundle): string[] {
  const colors = bundle.traces.map((r) => traceColor(bundle, r.var));
  for (const s of bundle.statements) colors.push(statementColor(s.colorIndex));
  colors.push(STEP_COLOR);
  return colors;
}
