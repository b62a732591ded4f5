// Builders for every payload the editors may emit. Keeping them in one
// module lets the contract tests pin the exact wire shapes.

import type { GraphJson, KripkeJson, ProofStep, SubmitBody, TruthTableJson } from "./types.js";

export function acknowledge(): SubmitBody {
  return { answer: null };
}

export function formulaAnswer(text: string, logic: "PL" | "ML" = "PL"): SubmitBody {
  return { answer: { kind: "formula", value: { logic, text } } };
}

export function formulaListAnswer(texts: string[], logic: "PL" | "ML" = "PL"): SubmitBody {
  return {
    answer: { kind: "formula_list", value: texts.map((text) => ({ logic, text })) },
  };
}

export function foFormulaAnswer(text: string): SubmitBody {
  return { answer: { kind: "fo_formula", value: { text } } };
}

export function choiceAnswer(index: number): SubmitBody {
  return { answer: { kind: "choice", value: index } };
}

export function booleanAnswer(value: boolean): SubmitBody {
  return { answer: { kind: "boolean", value } };
}

export function nodeSetAnswer(nodes: Iterable<string>): SubmitBody {
  return { answer: { kind: "node_set", value: [...nodes].sort() } };
}

export function valuationAnswer(valuation: Record<string, boolean>): SubmitBody {
  return { answer: { kind: "valuation", value: valuation } };
}

export function kripkeAnswer(structure: KripkeJson): SubmitBody {
  return { answer: { kind: "kripke", value: structure } };
}

export function graphAnswer(graph: GraphJson): SubmitBody {
  return { answer: { kind: "graph", value: graph } };
}

export function truthTableAnswer(table: TruthTableJson): SubmitBody {
  return { answer: { kind: "truth_table", value: table } };
}

function step(s: ProofStep): SubmitBody {
  return { step: s };
}

export function tableauApply(
  premise: number,
  rule: string,
  branch: number,
  targetPrefix: string | null = null,
): SubmitBody {
  return step({ step: "tableau_apply", premise, rule, branch, target_prefix: targetPrefix });
}

export function tableauClose(branch: number, nodeA: number, nodeB: number | null): SubmitBody {
  return step({ step: "tableau_close", branch, node_a: nodeA, node_b: nodeB });
}

export function hornMark(variable: string, clauseIndex: number): SubmitBody {
  return step({ step: "horn_mark", variable, clause_index: clauseIndex });
}

export function hornConclude(claim: "satisfiable" | "unsatisfiable"): SubmitBody {
  return step({ step: "horn_conclude", claim });
}

// Clause inputs are comma-separated literal texts, e.g. "q, ~r".
export function parseClauseInput(text: string): string[] {
  return text
    .split(",")
    .map((part) => part.trim())
    .filter((part) => part.length > 0)
    .sort();
}

export function resolvePl(
  parent1: number,
  parent2: number,
  pivot: string,
  resolvent: string[],
): SubmitBody {
  return step({ step: "resolve_pl", parent1, parent2, pivot, resolvent: [...resolvent].sort() });
}

export function resolveFo(
  parent1: number,
  sub1: Record<string, string>,
  parent2: number,
  sub2: Record<string, string>,
  pivot1: string,
  pivot2: string,
  resolvent: string[],
): SubmitBody {
  return step({
    step: "resolve_fo",
    parent1,
    sub1,
    parent2,
    sub2,
    pivot1,
    pivot2,
    resolvent: [...resolvent].sort(),
  });
}

// Substitution inputs are "x -> f(a), y -> b".
export function parseSubstitutionInput(text: string): Record<string, string> {
  const out: Record<string, string> = {};
  for (const part of text.split(",")) {
    const trimmed = part.trim();
    if (!trimmed) continue;
    const match = trimmed.match(/^([A-Za-z][A-Za-z0-9_]*)\s*(?:->|:=|↦)\s*(.+)$/);
    if (!match) throw new Error(`cannot read binding "${trimmed}"`);
    out[match[1]] = match[2].trim();
  }
  return out;
}

export function bisimRemove(
  pair: [string, string],
  kind: string,
  successor: string | null,
): SubmitBody {
  return step({ step: "bisim_remove", pair, kind, successor });
}

export function bisimConclude(relation: Array<[string, string]>): SubmitBody {
  return step({
    step: "bisim_conclude",
    relation: [...relation].sort((a, b) => (a[0] + a[1] < b[0] + b[1] ? -1 : 1)),
  });
}
