"""Formula ASTs, parsing, printing, normal forms, clauses, substitutions."""

from . import fol
from .ast import (
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
    atoms,
    conjoin,
    is_propositional,
    logic_of,
    modal_depth,
    subformulas,
)
from .clauses import (
    Clause,
    ClauseSet,
    Literal,
    Substitution,
    apply_substitution,
    compose,
)
from .normal_forms import (
    ImplicationClause,
    NormalFormKind,
    check_normal_form,
    clauses_to_formula,
    implication_clauses,
    to_clause_set,
)
from .parser import parse, parse_literal, parse_term
from .printer import (
    render,
    render_clause,
    render_literal,
    render_substitution,
    render_term,
    render_with_spans,
)

__all__ = [
    "And", "Atom", "Bottom", "Box", "Diamond", "Formula", "Iff", "Implies",
    "Not", "Or", "Top", "atoms", "conjoin", "is_propositional", "logic_of",
    "modal_depth", "subformulas", "fol",
    "Clause", "ClauseSet", "Literal", "Substitution", "apply_substitution",
    "compose",
    "ImplicationClause", "NormalFormKind", "check_normal_form",
    "clauses_to_formula", "implication_clauses", "to_clause_set",
    "parse", "parse_literal", "parse_term",
    "render", "render_clause", "render_literal", "render_substitution",
    "render_term", "render_with_spans",
]
