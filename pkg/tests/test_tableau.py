"""Prefixed tableau: rule application, closure, status, model extraction."""

from random import Random

import pytest

from logicbench.calculi import (
    autoplay,
    branch_leaves,
    new_tableau,
    open_branches,
    tableau_apply,
    tableau_close,
    tableau_extract_model,
    tableau_status,
)
from logicbench.errors import StateError
from logicbench.formulas import parse
from logicbench.reasoning import ml_satisfiable, pl_satisfiable, to_nnf
from logicbench.semantics import check_model

from helpers import random_ml, random_pl


def leaf(t):
    (only,) = branch_leaves(t)
    return only


class TestApply:
    def test_alpha_appends_both_conjuncts(self):
        t = new_tableau([parse("A & <>B", "ML")])
        t2, verdict = tableau_apply(t, 0, "alpha", 0)
        assert verdict.accepted
        created = verdict.details["created"]
        assert [str(t2.nodes[i].formula) for i in created] == [
            str(parse("A", "ML")),
            str(parse("<>B", "ML")),
        ]
        assert all(t2.nodes[i].prefix == "1" for i in created)

    def test_box_targets_accessible_prefix(self):
        t = new_tableau([parse("<>A & []~A", "ML")])
        t, v = tableau_apply(t, 0, "alpha", 0)
        assert v.accepted
        t, v = tableau_apply(t, 1, "diamond", leaf(t))
        assert v.accepted
        new_prefix = t.nodes[v.details["created"][0]].prefix
        assert new_prefix == "1.1"
        t, v = tableau_apply(t, 2, "box", leaf(t), target_prefix=new_prefix)
        assert v.accepted
        assert t.nodes[v.details["created"][0]].prefix == new_prefix

    def test_rule_formula_mismatch(self):
        t = new_tableau([parse("A", "ML")])
        t2, verdict = tableau_apply(t, 0, "alpha", 0)
        assert not verdict.accepted
        assert verdict.reason == "rule_mismatch"
        assert t2 is t  # rejection leaves the state unchanged

    def test_box_without_accessible_prefix(self):
        t = new_tableau([parse("[]A", "ML")])
        _, verdict = tableau_apply(t, 0, "box", 0, target_prefix="1.1")
        assert verdict.reason == "no_accessible_prefix"

    def test_box_requires_target(self):
        t = new_tableau([parse("<>A & []B", "ML")])
        t, _ = tableau_apply(t, 0, "alpha", 0)
        t, _ = tableau_apply(t, 1, "diamond", leaf(t))
        _, verdict = tableau_apply(t, 2, "box", leaf(t))
        assert verdict.reason == "box_target_required"
        assert verdict.details["accessible"] == ["1.1"]

    def test_duplicate_application(self):
        t = new_tableau([parse("A & B", "ML")])
        t, v1 = tableau_apply(t, 0, "alpha", 0)
        assert v1.accepted
        _, v2 = tableau_apply(t, 0, "alpha", leaf(t))
        assert v2.reason == "duplicate_application"

    def test_closed_branch_application(self):
        t = new_tableau([parse("A & ~A", "ML")])
        t, _ = tableau_apply(t, 0, "alpha", 0)
        t, v = tableau_close(t, leaf(t), 1, 2)
        assert v.accepted
        _, verdict = tableau_apply(t, 0, "alpha", branch_leaves(t)[0])
        assert verdict.reason == "branch_closed"

    def test_beta_splits_branch(self):
        t = new_tableau([parse("A | B", "ML")])
        t, v = tableau_apply(t, 0, "beta", 0)
        assert v.accepted
        assert len(open_branches(t)) == 2

    def test_diamond_once_per_node_per_branch(self):
        t = new_tableau([parse("<>A", "ML")])
        t, v1 = tableau_apply(t, 0, "diamond", 0)
        assert v1.accepted
        _, v2 = tableau_apply(t, 0, "diamond", leaf(t))
        assert v2.reason == "duplicate_application"


class TestClose:
    def test_complementary_pair_same_prefix(self):
        t = new_tableau([parse("A & ~A", "ML")])
        t, _ = tableau_apply(t, 0, "alpha", 0)
        t, verdict = tableau_close(t, leaf(t), 1, 2)
        assert verdict.accepted
        assert tableau_status(t).kind == "all_closed"

    def test_prefix_mismatch(self):
        t = new_tableau([parse("~A & <>A", "ML")])
        t, _ = tableau_apply(t, 0, "alpha", 0)
        t, v = tableau_apply(t, 2, "diamond", leaf(t))
        assert v.accepted
        # ~A sits at prefix 1, the diamond's A at 1.1
        _, verdict = tableau_close(t, leaf(t), 1, 3)
        assert verdict.reason == "prefix_mismatch"

    def test_falsum_alone(self):
        t = new_tableau([parse("0", "ML")])
        t, verdict = tableau_close(t, 0, 0)
        assert verdict.accepted

    def test_non_complementary(self):
        t = new_tableau([parse("A & B", "ML")])
        t, _ = tableau_apply(t, 0, "alpha", 0)
        _, verdict = tableau_close(t, leaf(t), 1, 2)
        assert verdict.reason == "not_complementary"


class TestStatus:
    def test_fresh_root_incomplete(self):
        t = new_tableau([parse("A & B", "ML")])
        assert tableau_status(t).kind == "incomplete"

    def test_diamond_top_and_box_bottom_closes(self):
        f = to_nnf(parse("<>1 & []0", "ML"))
        result = autoplay(new_tableau([f]))
        assert result.status.kind == "all_closed"
        assert ml_satisfiable(f).status == "unsatisfiable"

    def test_workflow_formula_saturates_open(self):
        f = parse("<>(A & <>B) & (<>B | []~A)", "ML")
        result = autoplay(new_tableau([f]))
        assert result.status.kind == "open_saturated"
        assert ml_satisfiable(f).satisfiable

    def test_clashing_branch_is_not_saturated(self):
        t = new_tableau([parse("A & ~A", "ML")])
        t, _ = tableau_apply(t, 0, "alpha", 0)
        # complementary pair present but not yet closed: still incomplete
        assert tableau_status(t).kind == "incomplete"


class TestExtractModel:
    def test_pl_literals_to_valuation(self):
        f = to_nnf(parse("x & ~y", "PL"))
        result = autoplay(new_tableau([f], "PL"))
        model = tableau_extract_model(result.tableau, result.status.branch)
        assert model == {"x": True, "y": False}

    def test_pl_unmentioned_atoms_false(self):
        f = to_nnf(parse("x | (y & z)", "PL"))
        result = autoplay(new_tableau([f], "PL"))
        model = tableau_extract_model(result.tableau, result.status.branch)
        assert set(model) == {"x", "y", "z"}
        assert check_model(f, model).satisfies

    def test_ml_prefixes_to_worlds(self):
        f = parse("<>A", "ML")
        result = autoplay(new_tableau([f]))
        model = tableau_extract_model(result.tableau, result.status.branch)
        assert model.designated == "1"
        assert ("1", "1.1") in model.edges
        assert "A" in model.label("1.1")

    def test_unsaturated_branch_rejected(self):
        t = new_tableau([parse("A & B", "ML")])
        with pytest.raises(StateError):
            tableau_extract_model(t, 0)

    def test_extraction_always_satisfies_root(self):
        rng = Random(41)
        seen = 0
        while seen < 150:
            f = to_nnf(random_ml(rng, ["A", "B"], 4, 2))
            result = autoplay(new_tableau([f]))
            if result.status.kind != "open_saturated":
                continue
            seen += 1
            model = tableau_extract_model(result.tableau, result.status.branch)
            assert check_model(f, model).satisfies


class TestSoundnessAndCompleteness:
    def test_pl_autoplay_matches_oracle(self):
        rng = Random(42)
        for _ in range(300):
            f = to_nnf(random_pl(rng, ["a", "b", "c", "d"], 5))
            result = autoplay(new_tableau([f], "PL"))
            assert (result.verdict == "unsatisfiable") == (
                not pl_satisfiable(f).satisfiable
            )

    def test_ml_autoplay_matches_oracle(self):
        rng = Random(43)
        for _ in range(300):
            f = to_nnf(random_ml(rng, ["A", "B"], 5, 2))
            result = autoplay(new_tableau([f]))
            assert (result.verdict == "unsatisfiable") == (
                not ml_satisfiable(f).satisfiable
            )

    def test_nnf_inputs_enforced(self):
        with pytest.raises(StateError):
            new_tableau([parse("~(A & B)", "ML")])
