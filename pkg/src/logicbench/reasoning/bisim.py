"""Maximal bisimulation, distinguishing formulas, FO non-equivalence checks."""

from __future__ import annotations

from ..errors import EvaluationError
from ..formulas import fol
from ..formulas.ast import Formula
from ..formulas.fol import FOFormula
from ..semantics.evaluate import eval_fo, eval_ml
from ..semantics.structures import ColoredGraph, KripkeStructure

BisimRelation = frozenset  # of (world, world) pairs


def pair_violates(
    k1: KripkeStructure,
    k2: KripkeStructure,
    pair: tuple[str, str],
    relation,
) -> str | None:
    """First reason the pair breaks the bisimulation conditions, if any.

    Returns "label-mismatch", "forth-fail:<successor>", "back-fail:<successor>",
    or None when the pair is locally consistent with ``relation``.
    """
    w1, w2 = pair
    if k1.label(w1) != k2.label(w2):
        return "label-mismatch"
    for s1 in sorted(k1.successors(w1)):
        if not any((s1, s2) in relation for s2 in k2.successors(w2)):
            return f"forth-fail:{s1}"
    for s2 in sorted(k2.successors(w2)):
        if not any((s1, s2) in relation for s1 in k1.successors(w1)):
            return f"back-fail:{s2}"
    return None


def max_bisimulation(k1: KripkeStructure, k2: KripkeStructure) -> BisimRelation:
    """Greatest bisimulation, by deleting violating pairs until a fixpoint."""
    relation = {
        (w1, w2)
        for w1 in k1.worlds
        for w2 in k2.worlds
        if k1.label(w1) == k2.label(w2)
    }
    changed = True
    while changed:
        changed = False
        for pair in sorted(relation):
            if pair_violates(k1, k2, pair, relation) is not None:
                relation.discard(pair)
                changed = True
    return frozenset(relation)


def distinguishes(
    f: Formula,
    pointed1: tuple[KripkeStructure, str],
    pointed2: tuple[KripkeStructure, str],
) -> bool:
    """True iff ``f`` takes different truth values at the two pointed worlds."""
    k1, w1 = pointed1
    k2, w2 = pointed2
    return eval_ml(f, k1, w1) != eval_ml(f, k2, w2)


def fo_nonequivalence_witness_check(
    f: FOFormula, g: FOFormula, graph: ColoredGraph
) -> bool:
    """True iff the sentences disagree on ``graph``."""
    for name, sentence in (("first", f), ("second", g)):
        if not fol.is_sentence(sentence):
            raise EvaluationError(
                f"the {name} formula has free variables {sorted(fol.free_variables(sentence))};"
                " a non-equivalence witness check needs sentences"
            )
    return eval_fo(f, graph, {}) != eval_fo(g, graph, {})
