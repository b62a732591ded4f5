// Pure view-model derivation from server snapshots. The snapshot is the
// only source of truth; drafts live beside it and never touch it.

import type { ProofStateJson, SessionView, TableauNodeJson, TaskView } from "./types.js";

export type AppState = {
  view: "picker" | "session";
  session: SessionView | null;
  error: string | null;      // inline API error, if any
  retry: boolean;            // network failure banner; the draft is preserved
  busy: boolean;             // one in-flight mutation at a time
};

export function initialState(): AppState {
  return { view: "picker", session: null, error: null, retry: false, busy: false };
}

export type TableauViewModel = {
  nodes: Map<number, TableauNodeJson>;
  children: Map<number, number[]>;
  leaves: number[];
  openLeaves: number[];
  closed: Record<string, [number, number | null]>;
  status: string;
};

export function tableauViewModel(state: ProofStateJson, derived?: Record<string, unknown>): TableauViewModel {
  if (state.calculus !== "tableau") throw new Error("not a tableau state");
  const nodes = new Map<number, TableauNodeJson>();
  const children = new Map<number, number[]>();
  for (const node of state.nodes) {
    nodes.set(node.id, node);
    children.set(node.id, []);
  }
  for (const node of state.nodes) {
    if (node.parent !== null) children.get(node.parent)!.push(node.id);
  }
  const leaves = [...nodes.keys()].filter((id) => children.get(id)!.length === 0).sort((a, b) => a - b);
  const openLeaves = leaves.filter((id) => !(String(id) in state.closed));
  return {
    nodes,
    children,
    leaves,
    openLeaves,
    closed: state.closed,
    status: String(derived?.status ?? "incomplete"),
  };
}

export function branchNodeIds(model: TableauViewModel, leaf: number): number[] {
  const chain: number[] = [];
  let cursor: number | null = leaf;
  while (cursor !== null) {
    chain.push(cursor);
    cursor = model.nodes.get(cursor)!.parent;
  }
  return chain.reverse();
}

// Prefixes reachable from `source` on the branch, via diamond expansions.
export function accessiblePrefixes(model: TableauViewModel, leaf: number, source: string): string[] {
  const out: string[] = [];
  for (const id of branchNodeIds(model, leaf)) {
    const node = model.nodes.get(id)!;
    if (node.rule === "diamond" && node.premise !== null) {
      if (model.nodes.get(node.premise)!.prefix === source) out.push(node.prefix);
    }
  }
  return out;
}

export type HornClauseView = { premises: string[]; conclusion: string | null; text: string };

export function hornViewModel(
  derived: Record<string, unknown> | undefined,
  state: ProofStateJson,
): { clauses: HornClauseView[]; marked: string[]; claim: string | null } {
  if (state.calculus !== "horn") throw new Error("not a horn state");
  const clauses = (derived?.clauses ?? []) as HornClauseView[];
  const marked = (derived?.marked ?? state.markings.map(([v]) => v)) as string[];
  return { clauses, marked, claim: state.claim };
}

export function hornVariables(clauses: HornClauseView[]): string[] {
  const out = new Set<string>();
  for (const clause of clauses) {
    for (const p of clause.premises) out.add(p);
    if (clause.conclusion) out.add(clause.conclusion);
  }
  return [...out].sort();
}

export function taskPrompt(task: TaskView): string {
  const config = task.config;
  return String(config.prompt ?? config.text ?? "");
}

export function formulaInputText(task: TaskView, port: string = "formula"): string {
  const bound = task.inputs[port];
  if (!bound) return "";
  if (bound.kind === "formula") return bound.value.text;
  if (bound.kind === "fo_formula") return bound.value.text;
  return "";
}
