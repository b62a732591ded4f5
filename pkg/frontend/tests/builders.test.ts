// The editors may only emit payloads the API accepts; every builder output
// is pinned against payloads recorded from a real service run.

import { describe, expect, it } from "vitest";

import * as answers from "../src/answers.js";
import recorded from "../fixtures/recorded.json";

const requests = recorded.requests as Record<string, unknown>;

describe("answer builders match recorded wire payloads", () => {
  it("acknowledgement", () => {
    expect(answers.acknowledge()).toEqual(requests.messaging);
  });

  it("formula list", () => {
    expect(answers.formulaListAnswer(["s", "s -> l", "s & l -> m"], "PL")).toEqual(
      requests.construct_formula,
    );
  });

  it("single formula", () => {
    expect(answers.formulaAnswer("m", "PL")).toEqual(requests.consequence);
    expect(
      answers.formulaAnswer("(1 -> s) & (s -> l) & (s & l -> m) & (m -> 0)", "PL"),
    ).toEqual(requests.transform);
    expect(answers.formulaAnswer("<>(A & <>B) & (<>B | []~A)", "ML")).toEqual(requests.nnf);
  });

  it("choice", () => {
    expect(answers.choiceAnswer(0)).toEqual(requests.multiple_choice);
  });

  it("horn steps", () => {
    expect(answers.hornMark("s", 0)).toEqual(requests.horn1);
    expect(answers.hornMark("l", 1)).toEqual(requests.horn2);
    expect(answers.hornMark("m", 2)).toEqual(requests.horn3);
    expect(answers.hornConclude("unsatisfiable")).toEqual(requests.horn_conclude);
  });

  it("tableau step", () => {
    expect(answers.tableauApply(0, "alpha", 0, null)).toEqual(requests.tableau_alpha);
  });

  it("wrong construction fixture", () => {
    expect(answers.formulaListAnswer(["s", "l -> s", "s & l -> m"], "PL")).toEqual(
      requests.wrong_construction,
    );
  });
});

describe("input parsing helpers", () => {
  it("clause input", () => {
    expect(answers.parseClauseInput(" q ,  ~r ")).toEqual(["q", "~r"]);
    expect(answers.parseClauseInput("")).toEqual([]);
  });

  it("substitution input", () => {
    expect(answers.parseSubstitutionInput("x -> f(a), y -> b")).toEqual({
      x: "f(a)",
      y: "b",
    });
    expect(answers.parseSubstitutionInput("")).toEqual({});
    expect(() => answers.parseSubstitutionInput("nonsense")).toThrow();
  });

  it("node sets are sorted", () => {
    expect(answers.nodeSetAnswer(["2", "1"])).toEqual({
      answer: { kind: "node_set", value: ["1", "2"] },
    });
  });
});
