import { readFileSync } from "node:fs";
import { join } from "node:path";
import { Bundle } from "../src/bundle";

export function loadBundle(name: string): Bundle {
  const path = join(process.cwd(), "tests", "fixtures", name);
  return JSON.parse(readFileSync(path, "utf8")) as Bundle;
}

export function droneBundle(): Bundle {
  return loadBundle("drone_bundle.json");
}

export function wideBundle(): Bundle {
  return loadBundle("wide_bundle.json");
}

/** Minimal JSON transport for WorkbenchClient tests. */
export function jsonResponse(status: number, body: unknown): Response {
  return new Response(JSON.stringify(body), {
    status,
    headers: { "content-type": "application/json" },
  });
}
