// Wire types of the JSON API. The server is authoritative; the client only
// renders snapshots and posts tagged values or proof steps.

export type TaggedValue =
  | { kind: "formula"; value: { logic: "PL" | "ML"; text: string } }
  | { kind: "formula_list"; value: Array<{ logic: "PL" | "ML"; text: string }> }
  | { kind: "fo_formula"; value: { text: string } }
  | { kind: "clause_set"; value: string[][] }
  | { kind: "valuation"; value: Record<string, boolean> }
  | { kind: "kripke"; value: KripkeJson }
  | { kind: "graph"; value: GraphJson }
  | { kind: "node_set"; value: string[] }
  | { kind: "boolean"; value: boolean }
  | { kind: "choice"; value: number }
  | { kind: "truth_table"; value: TruthTableJson };

export type KripkeJson = {
  worlds: string[];
  edges: Array<[string, string]> | string[][];
  labels: Record<string, string[]>;
  designated: string | null;
};

export type GraphJson = {
  nodes: string[];
  edges: Array<[string, string]> | string[][];
  colors: Record<string, string[]>;
};

export type TruthTableJson = {
  atoms: string[];
  columns: string[];
  rows: boolean[][];
};

export type ProofStep =
  | { step: "tableau_apply"; premise: number; rule: string; branch: number; target_prefix: string | null }
  | { step: "tableau_close"; branch: number; node_a: number; node_b: number | null }
  | { step: "horn_mark"; variable: string; clause_index: number }
  | { step: "horn_conclude"; claim: "satisfiable" | "unsatisfiable" }
  | { step: "resolve_pl"; parent1: number; parent2: number; pivot: string; resolvent: string[] }
  | {
      step: "resolve_fo";
      parent1: number;
      sub1: Record<string, string>;
      parent2: number;
      sub2: Record<string, string>;
      pivot1: string;
      pivot2: string;
      resolvent: string[];
    }
  | { step: "bisim_remove"; pair: [string, string]; kind: string; successor: string | null }
  | { step: "bisim_conclude"; relation: Array<[string, string]> };

export type SubmitBody = { answer: TaggedValue | null } | { step: ProofStep };

export type FeedbackItem = {
  generator: string;
  severity: "info" | "hint" | "error" | "success";
  message: string;
  reveal_rank: number;
  payload: unknown;
};

export type TableauNodeJson = {
  id: number;
  prefix: string;
  formula: string;
  rule: string;
  premise: number | null;
  parent: number | null;
};

export type ProofStateJson =
  | {
      calculus: "tableau";
      logic: string;
      nodes: TableauNodeJson[];
      closed: Record<string, [number, number | null]>;
      next_id: number;
    }
  | {
      calculus: "resolution";
      logic: string;
      clauses: Record<string, string[]>;
      roots: number[];
      derivations: Record<string, unknown>;
      next_id: number;
    }
  | { calculus: "horn"; formula: string; markings: Array<[string, number]>; claim: string | null }
  | {
      calculus: "bisimulation";
      k1: KripkeJson;
      k2: KripkeJson;
      relation: Array<[string, string]>;
      log: unknown[];
    };

export type TaskView = {
  id: string;
  kind: string;
  config: Record<string, unknown>;
  inputs: Record<string, TaggedValue>;
  proof_state?: ProofStateJson;
  derived?: Record<string, unknown>;
};

export type SessionView = {
  session_id: string;
  exercise_id: string;
  title: string;
  description: string;
  status: "active" | "finished";
  current_task: TaskView | null;
  feedback: FeedbackItem[];
  feedback_task: string | null;
  has_more_feedback: boolean;
};

export type SubmitResponse = {
  items: FeedbackItem[];
  has_more_feedback: boolean;
  transition: { kind: "stay" | "advance" | "finish"; task: string | null };
  session: SessionView;
};

export type RevealResponse = {
  item: FeedbackItem | null;
  has_more_feedback: boolean;
};

export type ExerciseListing = {
  id: string;
  title: string;
  description: string;
  tasks: number;
};

export type ApiErrorBody = { code: string; message: string; locus: unknown };
