// View state shared by all five views, with its two invariants enforced
// at every transition: filter implies highlight, and the current step
// stays inside the represented positions.

import { Bundle, VarKind, positionCount } from "./bundle";

export type HoverTarget =
  | { kind: "subformula"; id: number }
  | { kind: "trace"; var: string }
  | { kind: "position"; t: number }
  | { kind: "state"; id: number }
  | { kind: "value"; trace: string; atom: string; t: number };

export interface ViewState {
  currentStep: number | null;
  highlightOn: boolean;
  filterOn: boolean;
  hiddenKinds: Set<VarKind>;
  hoverTarget: HoverTarget | null;
}

const PREF_KEY = "hyperscope.highlightDefault";

/** Initial state; the highlight default is a stored preference. */
export function initialState(storage?: Pick<Storage, "getItem">): ViewState {
  let highlight = false;
  try {
    const store = storage ?? (typeof localStorage !== "undefined" ? localStorage : undefined);
    highlight = store?.getItem(PREF_KEY) === "on";
  } catch {
    // storage unavailable (e.g. sandboxed iframe): keep the off default
  }
  return {
    currentStep: null,
    highlightOn: highlight,
    filterOn: false,
    hiddenKinds: new Set(),
    hoverTarget: null,
  };
}

export function rememberHighlightDefault(on: boolean, storage?: Pick<Storage, "setItem">): void {
  try {
    const store = storage ?? (typeof localStorage !== "undefined" ? localStorage : undefined);
    store?.setItem(PREF_KEY, on ? "on" : "off");
  } catch {
    // preference is best-effort
  }
}

function clampStep(bundle: Bundle, t: number): number {
  return Math.min(Math.max(t, 0), positionCount(bundle) - 1);
}

export function selectStep(state: ViewState, bundle: Bundle, t: number): ViewState {
  return { ...state, currentStep: clampStep(bundle, t) };
}

export function step(state: ViewState, bundle: Bundle, direction: "forward" | "back"): ViewState {
  const delta = direction === "forward" ? 1 : -1;
  const from = state.currentStep ?? (direction === "forward" ? -1 : positionCount(bundle));
  return selectStep(state, bundle, from + delta);
}

export function clearStep(state: ViewState): ViewState {
  return { ...state, currentStep: null };
}

export function setHighlight(state: ViewState, on: boolean): ViewState {
  // dropping highlight also drops filter (filterOn implies highlightOn)
  return { ...state, highlightOn: on, filterOn: on && state.filterOn };
}

export function setFilter(state: ViewState, on: boolean): ViewState {
  return { ...state, filterOn: on, highlightOn: on || state.highlightOn };
}

export function setHiddenKinds(state: ViewState, kinds: Iterable<VarKind>): ViewState {
  return { ...state, hiddenKinds: new Set(kinds) };
}

export function toggleKind(state: ViewState, kind: VarKind): ViewState {
  const kinds = new Set(state.hiddenKinds);
  if (kinds.has(kind)) kinds.delete(kind);
  else kinds.add(kind);
  return { ...state, hiddenKinds: kinds };
}

export function setHover(state: ViewState, target: HoverTarget | null): ViewState {
  return { ...state, hoverTarget: target };
}
