"""Shared test utilities: random instance generators and independent oracles.

The oracles here deliberately take different computational routes from the
library (numpy bit-table evaluation, brute-force structure enumeration,
subset enumeration, substitution-based FO evaluation) so that agreement
tests compare two genuinely independent implementations.
"""

from __future__ import annotations

import itertools
from random import Random

import numpy as np

from logicbench.formulas import ast
from logicbench.formulas.ast import (
    And,
    Atom,
    Bottom,
    Box,
    Diamond,
    Formula,
    Iff,
    Implies,
    Not,
    Or,
    Top,
)
from logicbench.formulas import fol
from logicbench.formulas.clauses import Literal
from logicbench.semantics.structures import ColoredGraph, KripkeStructure

# ---- random generators ---------------------------------------------------------


def random_pl(rng: Random, atom_names, depth: int) -> Formula:
    if depth <= 0 or rng.random() < 0.25:
        r = rng.random()
        if r < 0.86:
            return Atom(rng.choice(atom_names))
        return Top() if r < 0.93 else Bottom()
    kind = rng.randrange(5)
    if kind == 0:
        return Not(random_pl(rng, atom_names, depth - 1))
    left = random_pl(rng, atom_names, depth - 1)
    right = random_pl(rng, atom_names, depth - 1)
    return (And, Or, Implies, Iff)[kind - 1](left, right)


def random_ml(rng: Random, atom_names, depth: int, modal_depth: int) -> Formula:
    if depth <= 0 or rng.random() < 0.2:
        r = rng.random()
        if r < 0.86:
            return Atom(rng.choice(atom_names))
        return Top() if r < 0.93 else Bottom()
    choices = [0, 1, 2, 3, 4]
    if modal_depth > 0:
        choices += [5, 6]
    kind = rng.choice(choices)
    if kind == 0:
        return Not(random_ml(rng, atom_names, depth - 1, modal_depth))
    if kind in (5, 6):
        child = random_ml(rng, atom_names, depth - 1, modal_depth - 1)
        return Box(child) if kind == 5 else Diamond(child)
    left = random_ml(rng, atom_names, depth - 1, modal_depth)
    right = random_ml(rng, atom_names, depth - 1, modal_depth)
    return (And, Or, Implies, Iff)[kind - 1](left, right)


def random_nnf_pl(rng: Random, atom_names, depth: int) -> Formula:
    if depth <= 0 or rng.random() < 0.3:
        r = rng.random()
        if r < 0.8:
            atom = Atom(rng.choice(atom_names))
            return atom if rng.random() < 0.5 else Not(atom)
        return Top() if r < 0.9 else Bottom()
    node = And if rng.random() < 0.5 else Or
    return node(
        random_nnf_pl(rng, atom_names, depth - 1),
        random_nnf_pl(rng, atom_names, depth - 1),
    )


def random_nnf_ml(rng: Random, atom_names, depth: int, modal_depth: int) -> Formula:
    if depth <= 0 or rng.random() < 0.25:
        r = rng.random()
        if r < 0.8:
            atom = Atom(rng.choice(atom_names))
            return atom if rng.random() < 0.5 else Not(atom)
        return Top() if r < 0.9 else Bottom()
    choices = [0, 1]
    if modal_depth > 0:
        choices += [2, 3]
    kind = rng.choice(choices)
    if kind >= 2:
        child = random_nnf_ml(rng, atom_names, depth - 1, modal_depth - 1)
        return Box(child) if kind == 2 else Diamond(child)
    node = And if kind == 0 else Or
    return node(
        random_nnf_ml(rng, atom_names, depth - 1, modal_depth),
        random_nnf_ml(rng, atom_names, depth - 1, modal_depth),
    )


def random_implication_form(rng: Random, variables, max_clauses: int) -> Formula:
    clauses = []
    for _ in range(rng.randint(1, max_clauses)):
        k = rng.randint(0, min(3, len(variables)))
        premises = rng.sample(variables, k)
        premise: Formula = Top()
        if premises:
            premise = Atom(premises[0])
            for p in premises[1:]:
                premise = And(premise, Atom(p))
        conclusion: Formula = (
            Bottom() if rng.random() < 0.25 else Atom(rng.choice(variables))
        )
        clauses.append(Implies(premise, conclusion))
    out = clauses[0]
    for c in clauses[1:]:
        out = And(out, c)
    return out


def random_kripke(rng: Random, max_worlds: int, atom_names) -> KripkeStructure:
    n = rng.randint(1, max_worlds)
    worlds = [f"w{i}" for i in range(n)]
    edges = {
        (a, b) for a in worlds for b in worlds if rng.random() < 0.4
    }
    labels = {
        w: frozenset(a for a in atom_names if rng.random() < 0.5) for w in worlds
    }
    return KripkeStructure(frozenset(worlds), frozenset(edges), labels)


def random_term(rng: Random, depth: int) -> fol.Term:
    r = rng.random()
    if depth <= 0 or r < 0.4:
        if rng.random() < 0.6:
            return fol.Var(rng.choice(("x", "y", "z")))
        return fol.Const(rng.choice(("a", "b")))
    name = rng.choice(("f", "g"))
    arity = 1 if name == "f" else rng.randint(1, 2)
    return fol.Func(name, tuple(random_term(rng, depth - 1) for _ in range(arity)))


def random_literal(rng: Random, depth: int = 2) -> Literal:
    name = rng.choice(("P", "Q"))
    arity = 2 if name == "P" else 1
    return Literal(
        name,
        tuple(random_term(rng, depth) for _ in range(arity)),
        rng.random() < 0.5,
    )


def random_graph(rng: Random, max_nodes: int, colors=("Red", "Blue")) -> ColoredGraph:
    n = rng.randint(1, max_nodes)
    nodes = [str(i) for i in range(1, n + 1)]
    edges = {(a, b) for a in nodes for b in nodes if rng.random() < 0.35}
    coloring = {
        v: frozenset(c for c in colors if rng.random() < 0.4) for v in nodes
    }
    return ColoredGraph(frozenset(nodes), frozenset(edges), coloring)


# ---- numpy truth-table oracle ---------------------------------------------------


def np_columns(names, rows: int):
    n = len(names)
    idx = np.arange(rows)
    return {name: ((idx >> (n - 1 - i)) & 1).astype(bool) for i, name in enumerate(names)}


def np_eval_pl(f: Formula, cols, rows: int):
    if isinstance(f, Atom):
        return cols[f.name]
    if isinstance(f, Top):
        return np.ones(rows, dtype=bool)
    if isinstance(f, Bottom):
        return np.zeros(rows, dtype=bool)
    if isinstance(f, Not):
        return ~np_eval_pl(f.child, cols, rows)
    a = np_eval_pl(f.left, cols, rows)
    b = np_eval_pl(f.right, cols, rows)
    if isinstance(f, And):
        return a & b
    if isinstance(f, Or):
        return a | b
    if isinstance(f, Implies):
        return ~a | b
    return a == b


def tt_satisfiable(f: Formula):
    """Exhaustive truth-table satisfiability plus one witness row."""
    names = tuple(sorted(ast.atoms(f)))
    rows = 1 << len(names)
    cols = np_columns(names, rows)
    vec = np_eval_pl(f, cols, rows)
    hits = np.flatnonzero(vec)
    if hits.size == 0:
        return False, None
    row = int(hits[0])
    n = len(names)
    return True, {name: bool((row >> (n - 1 - i)) & 1) for i, name in enumerate(names)}


# ---- brute-force pointed-Kripke enumeration -------------------------------------


class KripkeEnumeration:
    """All pointed structures with <= max_worlds worlds over a fixed atom
    alphabet, as relation/label tensors for vectorized evaluation."""

    def __init__(self, atom_names=("A", "B"), max_worlds: int = 3):
        self.atom_names = tuple(atom_names)
        self.tensors = []
        for k in range(1, max_worlds + 1):
            rel_bits = k * k
            lab_bits = k * len(self.atom_names)
            n = (1 << rel_bits) * (1 << lab_bits)
            rel_idx = np.arange(1 << rel_bits)
            lab_idx = np.arange(1 << lab_bits)
            rel = np.zeros((1 << rel_bits, k, k), dtype=bool)
            bit = 0
            for i in range(k):
                for j in range(k):
                    rel[:, i, j] = (rel_idx >> bit) & 1
                    bit += 1
            lab = np.zeros((1 << lab_bits, k, len(self.atom_names)), dtype=bool)
            bit = 0
            for i in range(k):
                for a in range(len(self.atom_names)):
                    lab[:, i, a] = (lab_idx >> bit) & 1
                    bit += 1
            # cartesian product of relations and labelings
            R = np.repeat(rel, 1 << lab_bits, axis=0)
            L = np.tile(lab, ((1 << rel_bits), 1, 1))
            assert R.shape[0] == L.shape[0] == n
            self.tensors.append((R, L))

    def _eval(self, f: Formula, R, L):
        if isinstance(f, Atom):
            return L[:, :, self.atom_names.index(f.name)]
        if isinstance(f, Top):
            return np.ones(L.shape[:2], dtype=bool)
        if isinstance(f, Bottom):
            return np.zeros(L.shape[:2], dtype=bool)
        if isinstance(f, Not):
            return ~self._eval(f.child, R, L)
        if isinstance(f, Box):
            child = self._eval(f.child, R, L)
            return ~((R & ~child[:, None, :]).any(axis=2))
        if isinstance(f, Diamond):
            child = self._eval(f.child, R, L)
            return (R & child[:, None, :]).any(axis=2)
        a = self._eval(f.left, R, L)
        b = self._eval(f.right, R, L)
        if isinstance(f, And):
            return a & b
        if isinstance(f, Or):
            return a | b
        if isinstance(f, Implies):
            return ~a | b
        return a == b

    def satisfiable(self, f: Formula) -> bool:
        """True iff some pointed structure with <= max_worlds worlds satisfies
        ``f`` at its designated world (world 0, WLOG up to isomorphism)."""
        for R, L in self.tensors:
            if bool(self._eval(f, R, L)[:, 0].any()):
                return True
        return False


# ---- brute-force maximal bisimulation --------------------------------------------


def brute_max_bisimulation(k1: KripkeStructure, k2: KripkeStructure):
    """Union of every relation subset that is a bisimulation.

    Only subsets of label-consistent pairs are enumerated; any subset
    containing a label-inconsistent pair fails immediately, so the scan is
    equivalent to enumerating all subsets of W1 x W2.
    """
    pairs = [
        (w1, w2)
        for w1 in sorted(k1.worlds)
        for w2 in sorted(k2.worlds)
        if k1.label(w1) == k2.label(w2)
    ]
    succ1 = {w: k1.successors(w) for w in k1.worlds}
    succ2 = {w: k2.successors(w) for w in k2.worlds}

    def is_bisim(relation) -> bool:
        for w1, w2 in relation:
            for s1 in succ1[w1]:
                if not any((s1, s2) in relation for s2 in succ2[w2]):
                    return False
            for s2 in succ2[w2]:
                if not any((s1, s2) in relation for s1 in succ1[w1]):
                    return False
        return True

    best: set = set()
    for mask in range(1 << len(pairs)):
        relation = {pairs[i] for i in range(len(pairs)) if (mask >> i) & 1}
        if relation <= best:
            continue
        if is_bisim(relation):
            best |= relation
    return frozenset(best)


# ---- definable-set closure (finite Hennessy-Milner) ------------------------------


def definable_sets(worlds, successors, labels, atom_names, max_depth):
    """Modal-depth-indexed closure of atom denotations under boolean and
    modal operations over a finite structure.

    Returns a dict denotation(frozenset) -> (modal depth, witness Formula).
    """
    known: dict[frozenset, tuple[int, Formula]] = {}
    universe = frozenset(worlds)

    def add(denotation, depth, formula):
        old = known.get(denotation)
        if old is None or depth < old[0]:
            known[denotation] = (depth, formula)
            return True
        return False

    add(universe, 0, Top())
    add(frozenset(), 0, Bottom())
    for a in atom_names:
        add(frozenset(w for w in worlds if a in labels[w]), 0, Atom(a))
    changed = True
    while changed:
        changed = False
        snapshot = list(known.items())
        for denotation, (depth, formula) in snapshot:
            complement = universe - denotation
            if add(complement, depth, Not(formula)):
                changed = True
            if depth < max_depth:
                box = frozenset(w for w in worlds if successors[w] <= denotation)
                if add(box, depth + 1, Box(formula)):
                    changed = True
        for (d1, (depth1, f1)), (d2, (depth2, f2)) in itertools.product(snapshot, snapshot):
            if add(d1 & d2, max(depth1, depth2), And(f1, f2)):
                changed = True
    return known


# ---- substitution-based FO evaluation ---------------------------------------------


def _subst_var(f: fol.FOFormula, var: str, value: fol.Const) -> fol.FOFormula:
    def in_term(t):
        if isinstance(t, fol.Var):
            return value if t.name == var else t
        if isinstance(t, fol.Func):
            return fol.Func(t.name, tuple(in_term(a) for a in t.args))
        return t

    if isinstance(f, fol.Pred):
        return fol.Pred(f.name, tuple(in_term(a) for a in f.args))
    if isinstance(f, (fol.Exists, fol.Forall)):
        if f.var == var:
            return f
        return type(f)(f.var, _subst_var(f.body, var, value))
    if isinstance(f, fol.Not):
        return fol.Not(_subst_var(f.child, var, value))
    if isinstance(f, (fol.And, fol.Or, fol.Implies, fol.Iff)):
        return type(f)(_subst_var(f.left, var, value), _subst_var(f.right, var, value))
    return f


def eval_fo_by_substitution(f: fol.FOFormula, graph: ColoredGraph) -> bool:
    """Sentence evaluation that expands quantifiers by substituting node
    constants, as an independent cross-check of the environment evaluator."""
    if isinstance(f, fol.Pred):
        def value(t):
            assert isinstance(t, fol.Const)
            return t.name

        args = [value(a) for a in f.args]
        if f.name == fol.EQUALS:
            return args[0] == args[1]
        if f.name == fol.EDGE:
            return (args[0], args[1]) in graph.edges
        return f.name in graph.colors_of(args[0])
    if isinstance(f, fol.Top):
        return True
    if isinstance(f, fol.Bottom):
        return False
    if isinstance(f, fol.Not):
        return not eval_fo_by_substitution(f.child, graph)
    if isinstance(f, fol.And):
        return eval_fo_by_substitution(f.left, graph) and eval_fo_by_substitution(f.right, graph)
    if isinstance(f, fol.Or):
        return eval_fo_by_substitution(f.left, graph) or eval_fo_by_substitution(f.right, graph)
    if isinstance(f, fol.Implies):
        return (not eval_fo_by_substitution(f.left, graph)) or eval_fo_by_substitution(
            f.right, graph
        )
    if isinstance(f, fol.Iff):
        return eval_fo_by_substitution(f.left, graph) == eval_fo_by_substitution(f.right, graph)
    probe = any if isinstance(f, fol.Exists) else all
    return probe(
        eval_fo_by_substitution(_subst_var(f.body, f.var, fol.Const(n)), graph)
        for n in sorted(graph.nodes)
    )


# ---- term matching (MGU factoring) -------------------------------------------------


def match_term(pattern: fol.Term, instance: fol.Term, bindings: dict) -> bool:
    """One-way matching: extend ``bindings`` so pattern[bindings] == instance."""
    if isinstance(pattern, fol.Var):
        bound = bindings.get(pattern.name)
        if bound is None:
            bindings[pattern.name] = instance
            return True
        return bound == instance
    if isinstance(pattern, fol.Const):
        return pattern == instance
    if not isinstance(instance, fol.Func) or pattern.name != instance.name:
        return False
    if len(pattern.args) != len(instance.args):
        return False
    return all(
        match_term(p, i, bindings) for p, i in zip(pattern.args, instance.args)
    )


def small_term_universe():
    a, b = fol.Const("a"), fol.Const("b")
    return [a, b, fol.Func("f", (a,)), fol.Func("f", (b,))]
