import { describe, expect, it } from "vitest";
import {
  causeIndex,
  causeKey,
  letterAt,
  positionCount,
  relevantColumns,
  relevantSubformulasAt,
  statementOfCause,
  valueAt,
} from "../src/bundle";
import { computeRelevance, divergesAt, visibleColumns } from "../src/relevance";
import { initialState, setFilter, setHiddenKinds } from "../src/state";
import { verbalize } from "../src/verbalize";
import { droneBundle, wideBundle } from "./helpers";

const drone = droneBundle();
const wide = wideBundle();

describe("bundle readers", () => {
  it("counts stem plus one loop unrolling", () => {
    expect(positionCount(drone)).toBe(4);
    expect(positionCount(wide)).toBe(30);
  });

  it("reads letters through the loop seam", () => {
    const p = drone.traces[0]!;
    expect(letterAt(p, 0)).toEqual([]);
    expect(letterAt(p, 2)).toEqual(["bound"]);
    expect(letterAt(p, 3)).toEqual(["emergency"]);
    expect(valueAt(drone, "q", "up", 1)).toBe(true);
    expect(valueAt(drone, "q", "emergency", 3)).toBe(false);
  });

  it("indexes causes by (trace, atom, position)", () => {
    const index = causeIndex(drone);
    expect(index.size).toBe(4);
    expect(index.get(causeKey("p", "bound", 2))?.subformulas).toEqual([3]);
    expect(index.get(causeKey("q", "emergency", 3))?.subformulas).toEqual([8]);
    expect(index.has(causeKey("p", "bound", 0))).toBe(false);
  });

  it("attributes causes to the statement owning their occurrence", () => {
    for (const cause of drone.causes) {
      expect(statementOfCause(drone, cause)?.statementId).toBe(0);
    }
  });

  it("collects relevant columns per kind", () => {
    expect(relevantColumns(wide)).toEqual({
      input: ["in0", "in1", "in2"],
      output: ["out11"],
      latch: [],
    });
  });

  it("collects subformulas relevant at a position, with ancestors", () => {
    expect([...relevantSubformulasAt(drone, 2)].sort()).toEqual([0, 1, 2, 3, 4]);
    expect([...relevantSubformulasAt(drone, 3)].sort()).toEqual([0, 1, 5, 6, 7, 8]);
    expect(relevantSubformulasAt(drone, 0).size).toBe(0);
  });
});

describe("relevance", () => {
  it("marks every formula node on a cause path", () => {
    const rel = computeRelevance(drone);
    // all nine nodes lie on some occurrence-to-root path here
    expect(rel.nodes.size).toBe(9);
    expect(rel.atoms).toEqual(new Set(["bound", "emergency"]));
  });

  it("filters columns down to cause variables", () => {
    const rel = computeRelevance(wide);
    let state = setFilter(initialState({ getItem: () => null }), true);
    expect(visibleColumns(wide, state, rel)).toEqual(["in0", "in1", "in2", "out11"]);
    state = setHiddenKinds(state, ["input", "latch"]);
    expect(visibleColumns(wide, state, rel)).toEqual(["out11"]);
  });

  it("hides kinds without the filter", () => {
    const rel = computeRelevance(drone);
    const state = setHiddenKinds(initialState({ getItem: () => null }), ["input"]);
    expect(visibleColumns(drone, state, rel)).toEqual(["emergency"]);
  });

  it("detects diverging positions", () => {
    expect(divergesAt(drone, 0)).toBe(true);
    expect(divergesAt(drone, 2)).toBe(false);
    expect(divergesAt(drone, 3)).toBe(true);
  });
});

describe("statement wording", () => {
  it("matches the service's single-line rendering", () => {
    expect(verbalize(drone.statements[0]!)).toBe(
      "invariant (subformula 0) violated: bound agrees across traces (true) " +
        "at step 2; emergency differs across traces at step 3",
    );
  });

  it("uses the plural form for multi-position facts", () => {
    const stmt = wide.statements[0]!;
    const text = verbalize(stmt);
    expect(stmt.temporalOperator).toBe("G");
    expect(text.startsWith("invariant (subformula 1) satisfied: ")).toBe(true);
    expect(text).toContain("steps");
  });
});
