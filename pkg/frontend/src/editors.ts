// One editor per task kind. Editors render from the snapshot, keep their
// scratch in the per-task draft (preserved across re-renders and network
// retries), and emit payloads only through the answer builders.

import * as answers from "./answers.js";
import type { El } from "./dom.js";
import {
  accessiblePrefixes,
  branchNodeIds,
  formulaInputText,
  hornViewModel,
  tableauViewModel,
  taskPrompt,
} from "./state.js";
import type { KripkeJson, SubmitBody, TaskView } from "./types.js";
import { graphPicture, kripkePicture } from "./views.js";

export type EditorContext = {
  doc: Document;
  el: El;
  task: TaskView;
  draft: Record<string, unknown>;
  submit: (body: SubmitBody) => void;
  // re-render without a server round trip (local draft edits to structures)
  submitRender?: () => void;
};

const KEYWORDS = new Set(["true", "false", "exists", "forall"]);

function atomNames(text: string): string[] {
  const names = new Set<string>();
  for (const match of text.matchAll(/[A-Za-z][A-Za-z0-9_]*/g)) {
    if (!KEYWORDS.has(match[0])) names.add(match[0]);
  }
  return [...names].sort();
}

// ---- shared formula input with a symbol palette ------------------------------

const PALETTE: Array<[string, string]> = [
  ["¬", "~"],
  ["∧", "&"],
  ["∨", "|"],
  ["→", "->"],
  ["↔", "<->"],
  ["□", "[]"],
  ["◇", "<>"],
];

function formulaField(
  ctx: EditorContext,
  key: string,
  options: { fo?: boolean } = {},
): { wrap: HTMLElement; input: HTMLInputElement } {
  const { el, draft } = ctx;
  const input = el("input", {
    type: "text",
    class: "formula-input",
    "data-field": key,
    value: String(draft[key] ?? ""),
    oninput: (event) => {
      draft[key] = (event.target as HTMLInputElement).value;
    },
  });
  const palette = el("div", { class: "palette", role: "toolbar" });
  const symbols = options.fo
    ? [...PALETTE.slice(0, 5), ["∃", "exists "], ["∀", "forall "]]
    : PALETTE;
  for (const [label, ascii] of symbols) {
    palette.append(
      el(
        "button",
        {
          type: "button",
          class: "palette-key",
          title: `insert ${ascii.trim()}`,
          onclick: () => {
            const start = input.selectionStart ?? input.value.length;
            const end = input.selectionEnd ?? input.value.length;
            input.value = input.value.slice(0, start) + ascii + input.value.slice(end);
            draft[key] = input.value;
            input.focus();
            const cursor = start + ascii.length;
            input.setSelectionRange(cursor, cursor);
          },
        },
        label as string,
      ),
    );
  }
  const wrap = ctx.el("div", { class: "formula-field" }, palette, input);
  return { wrap, input };
}

function submitButton(ctx: EditorContext, label: string, build: () => SubmitBody | null): HTMLElement {
  return ctx.el(
    "button",
    {
      type: "button",
      class: "submit",
      onclick: () => {
        const body = build();
        if (body !== null) ctx.submit(body);
      },
    },
    label,
  );
}

// ---- construction editors -----------------------------------------------------

function messagingEditor(ctx: EditorContext): HTMLElement {
  return ctx.el(
    "div",
    { class: "editor messaging" },
    ctx.el("p", {}, String(ctx.task.config.text ?? "")),
    submitButton(ctx, "Continue", () => answers.acknowledge()),
  );
}

function constructFormulaEditor(ctx: EditorContext): HTMLElement {
  const { el, task } = ctx;
  const logic = (task.config.logic as "PL" | "ML") ?? "PL";
  const statements = (task.config.statements as string[]) ?? [""];
  const panel = el("div", { class: "editor construct-formula" });
  const fields: HTMLInputElement[] = [];
  statements.forEach((statement, i) => {
    const { wrap, input } = formulaField(ctx, `formula${i}`);
    fields.push(input);
    panel.append(el("div", { class: "statement" }, el("label", {}, statement), wrap));
  });
  panel.append(
    submitButton(ctx, "Submit", () => {
      const texts = fields.map((f) => f.value.trim());
      if (texts.some((t) => !t)) return null;
      return texts.length === 1
        ? answers.formulaAnswer(texts[0], logic)
        : answers.formulaListAnswer(texts, logic);
    }),
  );
  return panel;
}

function transformEditor(ctx: EditorContext): HTMLElement {
  const { el, task } = ctx;
  const logic = (task.config.logic as "PL" | "ML") ?? "PL";
  const parts: string[] = [];
  if (task.inputs.formula) parts.push(formulaInputText(task, "formula"));
  if (task.inputs.premises) {
    parts.push(`${formulaInputText(task, "premises")} and the negation of ${formulaInputText(task, "consequence")}`);
  }
  const { wrap, input } = formulaField(ctx, "formula");
  return el(
    "div",
    { class: "editor transform" },
    el("div", { class: "given" }, "Given: ", el("code", {}, parts.join(" "))),
    task.config.required_form
      ? el("div", { class: "target-form" }, `Required form: ${task.config.required_form}`)
      : null,
    wrap,
    submitButton(ctx, "Submit", () =>
      input.value.trim() ? answers.formulaAnswer(input.value.trim(), logic) : null,
    ),
  );
}

function multipleChoiceEditor(ctx: EditorContext): HTMLElement {
  const { el, task, draft } = ctx;
  const options = (task.config.options as string[]) ?? [];
  const panel = el("div", { class: "editor multiple-choice", role: "radiogroup" });
  options.forEach((option, index) => {
    const id = `${task.id}-option-${index}`;
    panel.append(
      el(
        "div",
        { class: "option" },
        el("input", {
          type: "radio",
          name: `${task.id}-choice`,
          id,
          value: String(index),
          ...(draft.choice === index ? { checked: true } : {}),
          onchange: () => {
            draft.choice = index;
          },
        }),
        el("label", { for: id }, option),
      ),
    );
  });
  panel.append(
    submitButton(ctx, "Submit", () =>
      typeof draft.choice === "number" ? answers.choiceAnswer(draft.choice) : null,
    ),
  );
  return panel;
}

function evaluateEditor(ctx: EditorContext): HTMLElement {
  const { el, task } = ctx;
  const interp = task.inputs.interpretation;
  const picture =
    interp?.kind === "kripke" ? kripkePicture(ctx.doc, interp.value) : null;
  return el(
    "div",
    { class: "editor evaluate" },
    el("div", {}, "Formula: ", el("code", {}, formulaInputText(task))),
    picture,
    submitButton(ctx, "true", () => answers.booleanAnswer(true)),
    submitButton(ctx, "false", () => answers.booleanAnswer(false)),
  );
}

function chooseVariablesEditor(ctx: EditorContext): HTMLElement {
  const { el, task, draft } = ctx;
  const palette = (task.config.palette as string[]) ?? [];
  const chosen = (draft.chosen as string[]) ?? [];
  const panel = el("div", { class: "editor choose-variables" });
  for (const name of palette) {
    const id = `${task.id}-var-${name}`;
    panel.append(
      el(
        "span",
        { class: "var-choice" },
        el("input", {
          type: "checkbox",
          id,
          value: name,
          ...(chosen.includes(name) ? { checked: true } : {}),
          onchange: (event) => {
            const checked = (event.target as HTMLInputElement).checked;
            const current = new Set((draft.chosen as string[]) ?? []);
            if (checked) current.add(name);
            else current.delete(name);
            draft.chosen = [...current];
          },
        }),
        el("label", { for: id }, name),
      ),
    );
  }
  panel.append(
    submitButton(ctx, "Submit", () => answers.nodeSetAnswer((draft.chosen as string[]) ?? [])),
  );
  return panel;
}

function foQueryEditor(ctx: EditorContext): HTMLElement {
  const { el, task } = ctx;
  const graph = task.inputs.graph;
  const { wrap, input } = formulaField(ctx, "query", { fo: true });
  return el(
    "div",
    { class: "editor fo-query" },
    el("p", {}, String(task.config.description ?? "")),
    graph?.kind === "graph" ? graphPicture(ctx.doc, graph.value) : null,
    wrap,
    submitButton(ctx, "Submit", () =>
      input.value.trim() ? answers.foFormulaAnswer(input.value.trim()) : null,
    ),
  );
}

function valuationEditor(ctx: EditorContext): HTMLElement {
  const { el, task, draft } = ctx;
  const atoms = atomNames(formulaInputText(task));
  const panel = el("div", { class: "editor construct-valuation" });
  panel.append(el("div", {}, "Formula: ", el("code", {}, formulaInputText(task))));
  for (const atom of atoms) {
    const id = `${task.id}-atom-${atom}`;
    panel.append(
      el(
        "div",
        { class: "atom-row" },
        el("label", { for: id }, atom),
        el("input", {
          type: "checkbox",
          id,
          ...(draft[`v:${atom}`] ? { checked: true } : {}),
          onchange: (event) => {
            draft[`v:${atom}`] = (event.target as HTMLInputElement).checked;
          },
        }),
      ),
    );
  }
  panel.append(
    submitButton(ctx, "Submit", () =>
      answers.valuationAnswer(Object.fromEntries(atoms.map((a) => [a, Boolean(draft[`v:${a}`])]))),
    ),
  );
  return panel;
}

function kripkeDraft(ctx: EditorContext): KripkeJson {
  const draft = ctx.draft;
  if (!draft.kripke) {
    draft.kripke = { worlds: [], edges: [], labels: {}, designated: null } satisfies KripkeJson;
  }
  return draft.kripke as KripkeJson;
}

function kripkeEditor(ctx: EditorContext): HTMLElement {
  const { el, task } = ctx;
  const structure = kripkeDraft(ctx);
  const atoms = atomNames(formulaInputText(task));
  const panel = el("div", { class: "editor construct-kripke" });
  panel.append(el("div", {}, "Formula: ", el("code", {}, formulaInputText(task))));
  panel.append(kripkePicture(ctx.doc, structure));

  const nameInput = el("input", { type: "text", class: "world-name", placeholder: "world name" });
  panel.append(
    el(
      "div",
      { class: "controls" },
      nameInput,
      el(
        "button",
        {
          type: "button",
          class: "add-world",
          onclick: () => {
            const name = nameInput.value.trim();
            if (name && !structure.worlds.includes(name)) {
              structure.worlds.push(name);
              structure.labels[name] = [];
              if (structure.designated === null) structure.designated = name;
              ctx.submitRender?.();
            }
          },
        },
        "Add world",
      ),
    ),
  );

  if (structure.worlds.length > 0) {
    const from = el("select", { class: "edge-from" });
    const to = el("select", { class: "edge-to" });
    for (const w of structure.worlds) {
      from.append(el("option", { value: w }, w));
      to.append(el("option", { value: w }, w));
    }
    panel.append(
      el(
        "div",
        { class: "controls" },
        from,
        el("span", {}, "→"),
        to,
        el(
          "button",
          {
            type: "button",
            class: "add-edge",
            onclick: () => {
              structure.edges.push([from.value, to.value]);
              ctx.submitRender?.();
            },
          },
          "Add edge",
        ),
      ),
    );
    const designated = el("select", { class: "designated" });
    for (const w of structure.worlds) {
      designated.append(
        el("option", { value: w, ...(structure.designated === w ? { selected: true } : {}) }, w),
      );
    }
    designated.addEventListener("change", () => {
      structure.designated = designated.value;
    });
    panel.append(el("div", { class: "controls" }, el("label", {}, "designated "), designated));
    for (const w of structure.worlds) {
      const row = el("div", { class: "label-row" }, el("span", {}, `${w}: `));
      for (const atom of atoms) {
        const id = `${task.id}-${w}-${atom}`;
        row.append(
          el("input", {
            type: "checkbox",
            id,
            ...(structure.labels[w]?.includes(atom) ? { checked: true } : {}),
            onchange: (event) => {
              const set = new Set(structure.labels[w] ?? []);
              if ((event.target as HTMLInputElement).checked) set.add(atom);
              else set.delete(atom);
              structure.labels[w] = [...set].sort();
            },
          }),
          el("label", { for: id }, atom),
        );
      }
      panel.append(row);
    }
  }
  panel.append(submitButton(ctx, "Submit model", () => answers.kripkeAnswer(structure)));
  return panel;
}

function constructModelEditor(ctx: EditorContext): HTMLElement {
  const bound = ctx.task.inputs.formula;
  if (bound?.kind === "fo_formula") {
    return ctx.el("div", { class: "editor" }, "Graph construction: ", graphEditorStub(ctx));
  }
  const logic = bound?.kind === "formula" ? bound.value.logic : "PL";
  return logic === "PL" ? valuationEditor(ctx) : kripkeEditor(ctx);
}

function graphEditorStub(ctx: EditorContext): HTMLElement {
  // graphs reuse the Kripke structure editor without a designated world
  const panel = kripkeEditor(ctx);
  panel.classList.add("construct-graph");
  return panel;
}

function truthTableEditor(ctx: EditorContext): HTMLElement {
  const { el, task, draft } = ctx;
  const derived = task.derived ?? {};
  const atoms = (derived.atoms as string[]) ?? [];
  const columns = (derived.columns as string[]) ?? [];
  const rowCount = Number(derived.rows ?? 0);
  if (!draft.cells) {
    draft.cells = Array.from({ length: rowCount }, () => columns.map(() => false));
  }
  const cells = draft.cells as boolean[][];
  const table = el("table", { class: "truth-table" });
  const header = el("tr", {});
  for (const atom of atoms) header.append(el("th", {}, atom));
  for (const column of columns) header.append(el("th", {}, column));
  table.append(header);
  for (let row = 0; row < rowCount; row += 1) {
    const tr = el("tr", {});
    for (let i = 0; i < atoms.length; i += 1) {
      tr.append(el("td", {}, String((row >> (atoms.length - 1 - i)) & 1)));
    }
    columns.forEach((_, column) => {
      const cell = el(
        "td",
        {
          class: `cell ${cells[row][column] ? "on" : "off"}`,
          "data-cell": `${row}:${column}`,
          onclick: () => {
            cells[row][column] = !cells[row][column];
            ctx.submitRender?.();
          },
        },
        cells[row][column] ? "1" : "0",
      );
      tr.append(cell);
    });
    table.append(tr);
  }
  return el(
    "div",
    { class: "editor truth-table-editor" },
    el("div", {}, "Formula: ", el("code", {}, formulaInputText(task))),
    table,
    submitButton(ctx, "Submit table", () =>
      answers.truthTableAnswer({ atoms, columns, rows: cells.map((r) => [...r]) }),
    ),
  );
}

function distinguishWorldsEditor(ctx: EditorContext): HTMLElement {
  const { el, task } = ctx;
  const k1 = task.inputs.k1;
  const k2 = task.inputs.k2;
  const { wrap, input } = formulaField(ctx, "formula");
  return el(
    "div",
    { class: "editor distinguish-worlds" },
    el(
      "div",
      { class: "structures" },
      k1?.kind === "kripke" ? kripkePicture(ctx.doc, k1.value) : null,
      k2?.kind === "kripke" ? kripkePicture(ctx.doc, k2.value) : null,
    ),
    el("p", {}, `Find a modal formula distinguishing ${task.config.world1} from ${task.config.world2}.`),
    wrap,
    submitButton(ctx, "Submit", () =>
      input.value.trim() ? answers.formulaAnswer(input.value.trim(), "ML") : null,
    ),
  );
}

// ---- step-task editors -----------------------------------------------------------

function tableauEditor(ctx: EditorContext): HTMLElement {
  const { el, task } = ctx;
  if (!task.proof_state || task.proof_state.calculus !== "tableau") {
    return errorPanel(ctx, "tableau state missing");
  }
  const model = tableauViewModel(task.proof_state, task.derived);
  const panel = el("div", { class: "editor tableau" });

  const renderNode = (id: number): HTMLElement => {
    const node = model.nodes.get(id)!;
    const item = el(
      "li",
      { class: "tableau-node", "data-node": String(id) },
      el("span", { class: "node-id" }, `#${id}`),
      el("span", { class: "prefix" }, node.prefix),
      el("code", {}, node.formula),
      el("span", { class: "rule" }, node.rule),
    );
    const kids = model.children.get(id)!;
    if (kids.length > 0) {
      const list = el("ul", { class: kids.length > 1 ? "split" : "chain" });
      for (const child of kids) list.append(renderNode(child));
      item.append(list);
    } else if (String(id) in model.closed) {
      item.append(el("span", { class: "closed-mark" }, "✕ closed"));
    }
    return item;
  };
  panel.append(el("ul", { class: "tableau-tree" }, renderNode(0)));
  panel.append(el("div", { class: "status" }, `status: ${model.status}`));

  for (const leaf of model.openLeaves) {
    const chain = branchNodeIds(model, leaf);
    const premise = el("select", { class: "premise", "data-branch": String(leaf) });
    for (const id of chain) {
      premise.append(el("option", { value: String(id) }, `#${id} ${model.nodes.get(id)!.formula}`));
    }
    const rule = el("select", { class: "rule-pick" });
    for (const name of ["alpha", "beta", "diamond", "box"]) {
      rule.append(el("option", { value: name }, name));
    }
    const target = el("select", { class: "target-prefix" });
    const refreshTargets = () => {
      target.textContent = "";
      const source = model.nodes.get(Number(premise.value))!.prefix;
      target.append(el("option", { value: "" }, "(fresh)"));
      for (const prefix of accessiblePrefixes(model, leaf, source)) {
        target.append(el("option", { value: prefix }, prefix));
      }
    };
    premise.addEventListener("change", refreshTargets);
    refreshTargets();
    const closeA = el("select", { class: "close-a" });
    const closeB = el("select", { class: "close-b" });
    closeB.append(el("option", { value: "" }, "(falsum)"));
    for (const id of chain) {
      closeA.append(el("option", { value: String(id) }, `#${id}`));
      closeB.append(el("option", { value: String(id) }, `#${id}`));
    }
    panel.append(
      el(
        "div",
        { class: "branch-controls", "data-branch": String(leaf) },
        el("span", { class: "branch-name" }, `branch ${leaf}: `),
        premise,
        rule,
        target,
        el(
          "button",
          {
            type: "button",
            class: "apply-rule",
            onclick: () =>
              ctx.submit(
                answers.tableauApply(
                  Number(premise.value),
                  rule.value,
                  leaf,
                  rule.value === "box" && target.value ? target.value : null,
                ),
              ),
          },
          "Apply",
        ),
        closeA,
        closeB,
        el(
          "button",
          {
            type: "button",
            class: "close-branch",
            onclick: () =>
              ctx.submit(
                answers.tableauClose(
                  leaf,
                  Number(closeA.value),
                  closeB.value === "" ? null : Number(closeB.value),
                ),
              ),
          },
          "Close",
        ),
      ),
    );
  }
  return panel;
}

function hornEditor(ctx: EditorContext): HTMLElement {
  const { el, task } = ctx;
  if (!task.proof_state || task.proof_state.calculus !== "horn") {
    return errorPanel(ctx, "marking state missing");
  }
  const model = hornViewModel(task.derived, task.proof_state);
  const panel = el("div", { class: "editor hornsat" });
  const marked = new Set(model.marked);
  panel.append(
    el("div", { class: "marked" }, `marked: ${model.marked.length ? model.marked.join(", ") : "(none)"}`),
  );
  const list = el("ol", { class: "horn-clauses", start: "0" });
  model.clauses.forEach((clause, index) => {
    const row = el("li", { "data-clause": String(index) }, el("code", {}, clause.text), " ");
    if (clause.conclusion && !marked.has(clause.conclusion)) {
      row.append(
        el(
          "button",
          {
            type: "button",
            class: "mark",
            onclick: () => ctx.submit(answers.hornMark(clause.conclusion!, index)),
          },
          `mark ${clause.conclusion}`,
        ),
      );
    }
    list.append(row);
  });
  panel.append(list);
  panel.append(
    el(
      "div",
      { class: "conclude" },
      el(
        "button",
        { type: "button", class: "conclude-sat", onclick: () => ctx.submit(answers.hornConclude("satisfiable")) },
        "conclude satisfiable",
      ),
      el(
        "button",
        {
          type: "button",
          class: "conclude-unsat",
          onclick: () => ctx.submit(answers.hornConclude("unsatisfiable")),
        },
        "conclude unsatisfiable",
      ),
    ),
  );
  return panel;
}

function resolutionEditor(ctx: EditorContext): HTMLElement {
  const { el, task, draft } = ctx;
  if (!task.proof_state || task.proof_state.calculus !== "resolution") {
    return errorPanel(ctx, "resolution state missing");
  }
  const state = task.proof_state;
  const firstOrder = state.logic === "FO";
  const panel = el("div", { class: "editor resolution" });
  const list = el("ol", { class: "clauses", start: "0" });
  const ids = Object.keys(state.clauses).sort((a, b) => Number(a) - Number(b));
  for (const id of ids) {
    const text = state.clauses[id].join(", ") || "□"; // empty clause box
    list.append(el("li", { value: id, "data-clause": id }, el("code", {}, `{${text}}`)));
  }
  panel.append(list);

  const parent1 = el("select", { class: "parent1" });
  const parent2 = el("select", { class: "parent2" });
  for (const id of ids) {
    parent1.append(el("option", { value: id }, `#${id}`));
    parent2.append(el("option", { value: id }, `#${id}`));
  }
  const pivot = el("input", {
    type: "text",
    class: "pivot",
    placeholder: firstOrder ? "pivot in parent 1, e.g. P(x)" : "pivot atom",
    value: String(draft.pivot ?? ""),
    oninput: (e) => (draft.pivot = (e.target as HTMLInputElement).value),
  });
  const resolvent = el("input", {
    type: "text",
    class: "resolvent",
    placeholder: "resolvent literals, comma separated (empty for the empty clause)",
    value: String(draft.resolvent ?? ""),
    oninput: (e) => (draft.resolvent = (e.target as HTMLInputElement).value),
  });
  const dialog = el("div", { class: "resolve-dialog" }, parent1, parent2, pivot, resolvent);
  if (firstOrder) {
    const pivot2 = el("input", {
      type: "text",
      class: "pivot2",
      placeholder: "pivot in parent 2, e.g. ~P(a)",
      value: String(draft.pivot2 ?? ""),
      oninput: (e) => (draft.pivot2 = (e.target as HTMLInputElement).value),
    });
    const sub1 = el("input", {
      type: "text",
      class: "sub1",
      placeholder: "substitution for parent 1, e.g. x -> a",
      value: String(draft.sub1 ?? ""),
      oninput: (e) => (draft.sub1 = (e.target as HTMLInputElement).value),
    });
    const sub2 = el("input", {
      type: "text",
      class: "sub2",
      placeholder: "substitution for parent 2",
      value: String(draft.sub2 ?? ""),
      oninput: (e) => (draft.sub2 = (e.target as HTMLInputElement).value),
    });
    dialog.append(pivot2, sub1, sub2);
    dialog.append(
      el(
        "button",
        {
          type: "button",
          class: "resolve",
          onclick: () => {
            try {
              ctx.submit(
                answers.resolveFo(
                  Number(parent1.value),
                  answers.parseSubstitutionInput(String(draft.sub1 ?? "")),
                  Number(parent2.value),
                  answers.parseSubstitutionInput(String(draft.sub2 ?? "")),
                  pivot.value.trim(),
                  pivot2.value.trim(),
                  answers.parseClauseInput(resolvent.value),
                ),
              );
            } catch {
              /* malformed substitution input: keep the draft for editing */
            }
          },
        },
        "Resolve",
      ),
    );
  } else {
    dialog.append(
      el(
        "button",
        {
          type: "button",
          class: "resolve",
          onclick: () =>
            ctx.submit(
              answers.resolvePl(
                Number(parent1.value),
                Number(parent2.value),
                pivot.value.trim(),
                answers.parseClauseInput(resolvent.value),
              ),
            ),
        },
        "Resolve",
      ),
    );
  }
  panel.append(dialog);
  return panel;
}

function bisimulationEditor(ctx: EditorContext): HTMLElement {
  const { el, task } = ctx;
  if (!task.proof_state || task.proof_state.calculus !== "bisimulation") {
    return errorPanel(ctx, "bisimulation state missing");
  }
  const state = task.proof_state;
  const panel = el("div", { class: "editor bisimulation" });
  panel.append(
    el(
      "div",
      { class: "structures" },
      kripkePicture(ctx.doc, state.k1),
      kripkePicture(ctx.doc, state.k2),
    ),
  );
  const table = el("table", { class: "pair-table" });
  for (const [w1, w2] of state.relation) {
    const kind = el("select", { class: "justification" });
    for (const name of ["label-mismatch", "forth-fail", "back-fail"]) {
      kind.append(el("option", { value: name }, name));
    }
    const successor = el("input", {
      type: "text",
      class: "successor",
      placeholder: "successor",
    });
    table.append(
      el(
        "tr",
        { "data-pair": `${w1},${w2}` },
        el("td", {}, `(${w1}, ${w2})`),
        el("td", {}, kind),
        el("td", {}, successor),
        el(
          "td",
          {},
          el(
            "button",
            {
              type: "button",
              class: "remove-pair",
              onclick: () =>
                ctx.submit(
                  answers.bisimRemove(
                    [w1, w2],
                    kind.value,
                    kind.value === "label-mismatch" ? null : successor.value.trim() || null,
                  ),
                ),
            },
            "remove",
          ),
        ),
      ),
    );
  }
  panel.append(table);
  panel.append(
    el(
      "button",
      {
        type: "button",
        class: "conclude-bisim",
        onclick: () =>
          ctx.submit(answers.bisimConclude(state.relation.map(([a, b]) => [a, b] as [string, string]))),
      },
      "This is the maximal bisimulation",
    ),
  );
  return panel;
}

// ---- dispatch ----------------------------------------------------------------------

function errorPanel(ctx: EditorContext, message: string): HTMLElement {
  return ctx.el("div", { class: "editor error-panel" }, message);
}

const EDITORS: Record<string, (ctx: EditorContext) => HTMLElement> = {
  messaging: messagingEditor,
  construct_formula: constructFormulaEditor,
  transform: transformEditor,
  multiple_choice: multipleChoiceEditor,
  evaluate: evaluateEditor,
  choose_variables: chooseVariablesEditor,
  fo_query: foQueryEditor,
  construct_model: constructModelEditor,
  truth_table: truthTableEditor,
  distinguish_worlds: distinguishWorldsEditor,
  tableau: tableauEditor,
  hornsat: hornEditor,
  resolution_pl: resolutionEditor,
  resolution_fo: resolutionEditor,
  bisimulation: bisimulationEditor,
};

export function renderEditor(ctx: EditorContext): HTMLElement {
  const editor = EDITORS[ctx.task.kind];
  const header = ctx.el("h3", { class: "prompt" }, taskPrompt(ctx.task));
  const wrap = ctx.el("section", { class: "task", "data-kind": ctx.task.kind }, header);
  if (editor === undefined) {
    wrap.append(errorPanel(ctx, `unknown task kind "${ctx.task.kind}"`));
  } else {
    wrap.append(editor(ctx));
  }
  return wrap;
}
