// Reader for the DOT text the workbench emits.  The emitter's shape is
// fixed (one node or edge per line, double-quoted labels), so a line
// scanner is enough; this is not a general DOT parser.

export interface DotNode {
  id: string;
  /** State name, e.g. "S0". */
  name: string;
  /** Output atoms true in the state. */
  label: string[];
}

export interface DotEdge {
  from: string;
  to: string;
  /** Guard text, e.g. "i & !s" or "*". */
  guard: string;
}

export interface MachineGraph {
  nodes: DotNode[];
  edges: DotEdge[];
  initial: string | null;
}

const NODE_RE = /^\s*(\w+)\s*\[label="([^"\\]*(?:\\.[^"\\]*)*)"/;
const EDGE_RE = /^\s*(\w+)\s*->\s*(\w+)\s*(?:\[label="([^"\\]*(?:\\.[^"\\]*)*)"\])?/;

function parseStateLabel(raw: string): { name: string; label: string[] } {
  const [name = "", set = ""] = raw.split("\\n");
  const inner = set.replace(/[{}]/g, "").trim();
  return { name, label: inner ? inner.split(",").map((s) => s.trim()) : [] };
}

/** Parse the machine graph; returns null for text this reader does not cover. */
export function parseDot(text: string): MachineGraph | null {
  if (!text.trimStart().startsWith("digraph")) return null;
  const nodes: DotNode[] = [];
  const edges: DotEdge[] = [];
  let initial: string | null = null;
  for (const line of text.split("\n")) {
    const trimmed = line.trim();
    if (!trimmed || trimmed.startsWith("digraph") || trimmed === "}") continue;
    const edge = EDGE_RE.exec(trimmed);
    if (edge) {
      const [, from = "", to = "", guard] = edge;
      if (from === "__init") initial = to;
      else edges.push({ from, to, guard: guard ?? "" });
      continue;
    }
    const node = NODE_RE.exec(trimmed);
    if (node && node[1] !== "__init" && node[1] !== "node") {
      const { name, label } = parseStateLabel(node[2] ?? "");
      nodes.push({ id: node[1] ?? "", name, label });
    }
  }
  return nodes.length ? { nodes, edges, initial } : null;
}
