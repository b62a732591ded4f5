"""JSON wire shapes for values, structures, proof states, and feedback.

Formulas travel as their rendered text (parse/render are mutually inverse),
structures as explicit node/edge/label objects, proof states as tagged
documents with stable node identifiers.  Decoders raise SchemaError with a
JSON path on malformed input.
"""

from __future__ import annotations

from typing import Any

from .calculi.bisim_run import BisimulationState, RemovalJustification
from .calculi.horn_run import HornMarkingState, new_horn_state
from .calculi.resolution import Derivation, ResolutionGraph, new_resolution_graph
from .calculi.tableau import Tableau, TableauNode, _freeze
from .errors import ParseError, SchemaError
from .exercises.model import TaskValue
from .exercises.steps import (
    BisimConclude,
    BisimRemove,
    HornConclude,
    HornMark,
    ResolveFo,
    ResolvePl,
    TableauApply,
    TableauClose,
)
from .feedback.items import FeedbackItem
from .formulas import ast, fol
from .formulas.clauses import Literal, Substitution
from .formulas.parser import parse, parse_literal, parse_term
from .formulas.printer import (
    render,
    render_literal,
    render_substitution,
    render_term,
)
from .semantics.evaluate import EvalTrace
from .semantics.structures import ColoredGraph, KripkeStructure
from .semantics.tables import TruthTable


def _expect(doc, types, path, what):
    if not isinstance(doc, types):
        raise SchemaError(f"expected {what}", path)
    return doc


def _field(doc: dict, name: str, path: str, required: bool = True, default=None):
    if name not in doc:
        if required:
            raise SchemaError(f"missing field {name!r}", path)
        return default
    return doc[name]


def _parse(text: str, logic: str, path: str):
    try:
        return parse(text, logic)
    except ParseError as e:
        raise SchemaError(f"cannot parse formula {text!r}: {e}", path) from e


# ---- formulas and interpretations -------------------------------------------


def encode_formula(f: ast.Formula) -> dict:
    return {"logic": ast.logic_of(f), "text": render(f)}


def decode_formula(doc, path: str = "formula") -> ast.Formula:
    _expect(doc, dict, path, "a formula object")
    text = _expect(_field(doc, "text", path), str, f"{path}.text", "a string")
    logic = doc.get("logic", "ML")
    if logic not in ("PL", "ML"):
        raise SchemaError(f"unknown logic {logic!r}", f"{path}.logic")
    return _parse(text, "ML" if logic == "ML" else "PL", f"{path}.text")


def encode_fo_formula(f: fol.FOFormula) -> dict:
    return {"text": render(f)}


def decode_fo_formula(doc, path: str = "fo_formula") -> fol.FOFormula:
    _expect(doc, dict, path, "an FO formula object")
    text = _expect(_field(doc, "text", path), str, f"{path}.text", "a string")
    return _parse(text, "FO", f"{path}.text")


def encode_kripke(k: KripkeStructure) -> dict:
    return {
        "worlds": sorted(k.worlds),
        "edges": sorted([a, b] for a, b in k.edges),
        "labels": {w: sorted(k.label(w)) for w in sorted(k.worlds) if k.label(w)},
        "designated": k.designated,
    }


def decode_kripke(doc, path: str = "kripke") -> KripkeStructure:
    _expect(doc, dict, path, "a Kripke structure object")
    worlds = _expect(_field(doc, "worlds", path), list, f"{path}.worlds", "a list")
    edges = _expect(_field(doc, "edges", path, required=False, default=[]), list,
                    f"{path}.edges", "a list")
    labels = _expect(_field(doc, "labels", path, required=False, default={}), dict,
                     f"{path}.labels", "an object")
    try:
        return KripkeStructure(
            frozenset(str(w) for w in worlds),
            frozenset((str(a), str(b)) for a, b in edges),
            {str(w): frozenset(str(x) for x in atoms) for w, atoms in labels.items()},
            doc.get("designated"),
        )
    except (ValueError, TypeError) as e:
        raise SchemaError(str(e), path) from e


def encode_graph(g: ColoredGraph) -> dict:
    return {
        "nodes": sorted(g.nodes),
        "edges": sorted([a, b] for a, b in g.edges),
        "colors": {n: sorted(g.colors_of(n)) for n in sorted(g.nodes) if g.colors_of(n)},
    }


def decode_graph(doc, path: str = "graph") -> ColoredGraph:
    _expect(doc, dict, path, "a graph object")
    nodes = _expect(_field(doc, "nodes", path), list, f"{path}.nodes", "a list")
    edges = _expect(_field(doc, "edges", path, required=False, default=[]), list,
                    f"{path}.edges", "a list")
    colors = _expect(_field(doc, "colors", path, required=False, default={}), dict,
                     f"{path}.colors", "an object")
    try:
        return ColoredGraph(
            frozenset(str(n) for n in nodes),
            frozenset((str(a), str(b)) for a, b in edges),
            {str(n): frozenset(str(c) for c in cs) for n, cs in colors.items()},
        )
    except (ValueError, TypeError) as e:
        raise SchemaError(str(e), path) from e


def encode_valuation(v) -> dict:
    return {name: bool(value) for name, value in sorted(v.items())}


def decode_valuation(doc, path: str = "valuation") -> dict:
    _expect(doc, dict, path, "a valuation object")
    return {str(name): bool(value) for name, value in doc.items()}


def encode_clause(clause) -> list:
    return sorted(render_literal(lit) for lit in clause)


def decode_clause(doc, path: str = "clause") -> frozenset:
    _expect(doc, list, path, "a list of literal strings")
    literals = set()
    for i, text in enumerate(doc):
        try:
            literals.add(parse_literal(str(text)))
        except ParseError as e:
            raise SchemaError(f"bad literal {text!r}: {e}", f"{path}[{i}]") from e
    return frozenset(literals)


def encode_clause_set(clauses) -> list:
    return sorted((encode_clause(c) for c in clauses))


def decode_clause_set(doc, path: str = "clause_set") -> frozenset:
    _expect(doc, list, path, "a list of clauses")
    return frozenset(decode_clause(c, f"{path}[{i}]") for i, c in enumerate(doc))


def encode_substitution(sub: Substitution) -> dict:
    return {name: render_term(term) for name, term in sorted(sub.items())}


def decode_substitution(doc, path: str = "substitution") -> Substitution:
    _expect(doc, dict, path, "an object mapping variables to term strings")
    mapping = {}
    for name, text in doc.items():
        try:
            mapping[str(name)] = parse_term(str(text))
        except ParseError as e:
            raise SchemaError(f"bad term {text!r}: {e}", f"{path}.{name}") from e
    try:
        return Substitution(mapping)
    except ValueError as e:
        raise SchemaError(str(e), path) from e


def encode_truth_table(table: TruthTable) -> dict:
    return {
        "atoms": list(table.atoms),
        "columns": [render(c) for c in table.columns],
        "rows": [[bool(v) for v in row] for row in table.rows],
    }


def decode_truth_table(doc, path: str = "truth_table") -> TruthTable:
    _expect(doc, dict, path, "a truth table object")
    atoms = _expect(_field(doc, "atoms", path), list, f"{path}.atoms", "a list")
    columns = _expect(_field(doc, "columns", path), list, f"{path}.columns", "a list")
    rows = _expect(_field(doc, "rows", path), list, f"{path}.rows", "a list")
    return TruthTable(
        tuple(str(a) for a in atoms),
        tuple(_parse(str(c), "PL", f"{path}.columns[{i}]") for i, c in enumerate(columns)),
        tuple(tuple(bool(v) for v in row) for row in rows),
    )


# ---- task values -------------------------------------------------------------


def encode_task_value(tv: TaskValue) -> dict:
    kind, value = tv.kind, tv.value
    if kind == "formula":
        payload = encode_formula(value)
    elif kind == "formula_list":
        payload = [encode_formula(f) for f in value]
    elif kind == "fo_formula":
        payload = encode_fo_formula(value)
    elif kind == "clause_set":
        payload = encode_clause_set(value)
    elif kind == "valuation":
        payload = encode_valuation(value)
    elif kind == "kripke":
        payload = encode_kripke(value)
    elif kind == "graph":
        payload = encode_graph(value)
    elif kind == "node_set":
        payload = sorted(str(n) for n in value)
    elif kind == "boolean":
        payload = bool(value)
    elif kind == "choice":
        payload = int(value)
    elif kind == "truth_table":
        payload = encode_truth_table(value)
    elif kind == "proof_state":
        payload = encode_proof_state(value)
    else:
        raise SchemaError(f"cannot encode value kind {kind!r}")
    return {"kind": kind, "value": payload}


def decode_task_value(doc, path: str = "value") -> TaskValue:
    _expect(doc, dict, path, "a tagged value object")
    kind = _field(doc, "kind", path)
    value = _field(doc, "value", path)
    vpath = f"{path}.value"
    if kind == "formula":
        return TaskValue(kind, decode_formula(value, vpath))
    if kind == "formula_list":
        _expect(value, list, vpath, "a list of formulas")
        return TaskValue(
            kind, tuple(decode_formula(v, f"{vpath}[{i}]") for i, v in enumerate(value))
        )
    if kind == "fo_formula":
        return TaskValue(kind, decode_fo_formula(value, vpath))
    if kind == "clause_set":
        return TaskValue(kind, decode_clause_set(value, vpath))
    if kind == "valuation":
        return TaskValue(kind, decode_valuation(value, vpath))
    if kind == "kripke":
        return TaskValue(kind, decode_kripke(value, vpath))
    if kind == "graph":
        return TaskValue(kind, decode_graph(value, vpath))
    if kind == "node_set":
        _expect(value, list, vpath, "a list of node names")
        return TaskValue(kind, frozenset(str(n) for n in value))
    if kind == "boolean":
        _expect(value, bool, vpath, "a boolean")
        return TaskValue(kind, value)
    if kind == "choice":
        _expect(value, int, vpath, "an integer")
        return TaskValue(kind, value)
    if kind == "truth_table":
        return TaskValue(kind, decode_truth_table(value, vpath))
    if kind == "proof_state":
        return TaskValue(kind, decode_proof_state(value, vpath))
    raise SchemaError(f"unknown value kind {kind!r}", f"{path}.kind")


# ---- proof states --------------------------------------------------------------


def encode_proof_state(state) -> dict:
    if isinstance(state, Tableau):
        return {
            "calculus": "tableau",
            "logic": state.logic,
            "nodes": [
                {
                    "id": n.id,
                    "prefix": n.prefix,
                    "formula": render(n.formula),
                    "rule": n.rule,
                    "premise": n.premise,
                    "parent": n.parent,
                }
                for n in state.nodes.values()
            ],
            "closed": {
                str(leaf): [a, b] for leaf, (a, b) in sorted(state.closed.items())
            },
            "next_id": state.next_id,
        }
    if isinstance(state, ResolutionGraph):
        derivations = {}
        for nid, d in state.derivations.items():
            derivations[str(nid)] = {
                "parents": [d.parent1, d.parent2],
                "pivot1": render_literal(d.pivot1),
                "pivot2": render_literal(d.pivot2),
                "sub1": encode_substitution(d.sub1) if d.sub1 is not None else None,
                "sub2": encode_substitution(d.sub2) if d.sub2 is not None else None,
            }
        return {
            "calculus": "resolution",
            "logic": state.logic,
            "clauses": {str(i): encode_clause(c) for i, c in sorted(state.clauses.items())},
            "roots": list(state.roots),
            "derivations": derivations,
            "next_id": state.next_id,
        }
    if isinstance(state, HornMarkingState):
        return {
            "calculus": "horn",
            "formula": render(state.formula),
            "markings": [[v, i] for v, i in state.markings],
            "claim": state.claim,
        }
    if isinstance(state, BisimulationState):
        return {
            "calculus": "bisimulation",
            "k1": encode_kripke(state.k1),
            "k2": encode_kripke(state.k2),
            "relation": sorted([a, b] for a, b in state.relation),
            "log": [
                {"pair": [p[0], p[1]], "kind": j.kind, "successor": j.successor}
                for p, j in state.log
            ],
        }
    raise SchemaError(f"cannot encode proof state {type(state).__name__}")


def decode_proof_state(doc, path: str = "proof_state"):
    _expect(doc, dict, path, "a proof state object")
    calculus = _field(doc, "calculus", path)
    if calculus == "tableau":
        logic = doc.get("logic", "ML")
        nodes = {}
        children: dict[int, tuple[int, ...]] = {}
        for i, nd in enumerate(_field(doc, "nodes", path)):
            npath = f"{path}.nodes[{i}]"
            node = TableauNode(
                int(_field(nd, "id", npath)),
                str(_field(nd, "prefix", npath)),
                _parse(_field(nd, "formula", npath), "ML" if logic == "ML" else "PL",
                       f"{npath}.formula"),
                str(_field(nd, "rule", npath)),
                nd.get("premise"),
                nd.get("parent"),
            )
            nodes[node.id] = node
            children.setdefault(node.id, ())
            if node.parent is not None:
                children[node.parent] = children.get(node.parent, ()) + (node.id,)
        closed = {
            int(leaf): (pair[0], pair[1])
            for leaf, pair in _field(doc, "closed", path, required=False, default={}).items()
        }
        return _freeze(nodes, children, closed, logic, int(_field(doc, "next_id", path)))
    if calculus == "resolution":
        logic = doc.get("logic", "PL")
        clauses = {
            int(i): decode_clause(c, f"{path}.clauses.{i}")
            for i, c in _field(doc, "clauses", path).items()
        }
        graph = new_resolution_graph([], logic)
        derivations = {}
        for nid, d in _field(doc, "derivations", path, required=False, default={}).items():
            dpath = f"{path}.derivations.{nid}"
            sub1 = d.get("sub1")
            sub2 = d.get("sub2")
            derivations[int(nid)] = Derivation(
                d["parents"][0],
                d["parents"][1],
                parse_literal(_field(d, "pivot1", dpath)),
                parse_literal(_field(d, "pivot2", dpath)),
                decode_substitution(sub1, f"{dpath}.sub1") if sub1 is not None else None,
                decode_substitution(sub2, f"{dpath}.sub2") if sub2 is not None else None,
            )
        from types import MappingProxyType

        return ResolutionGraph(
            logic,
            MappingProxyType(clauses),
            MappingProxyType(derivations),
            tuple(_field(doc, "roots", path)),
            int(_field(doc, "next_id", path)),
        )
    if calculus == "horn":
        formula = _parse(_field(doc, "formula", path), "PL", f"{path}.formula")
        state = new_horn_state(formula)
        markings = tuple(
            (str(v), int(i)) for v, i in _field(doc, "markings", path, required=False, default=[])
        )
        return HornMarkingState(state.formula, state.clauses, markings, doc.get("claim"))
    if calculus == "bisimulation":
        k1 = decode_kripke(_field(doc, "k1", path), f"{path}.k1")
        k2 = decode_kripke(_field(doc, "k2", path), f"{path}.k2")
        relation = frozenset(
            (str(a), str(b)) for a, b in _field(doc, "relation", path)
        )
        log = tuple(
            (
                (str(e["pair"][0]), str(e["pair"][1])),
                RemovalJustification(e["kind"], e.get("successor")),
            )
            for e in _field(doc, "log", path, required=False, default=[])
        )
        return BisimulationState(k1, k2, relation, log)
    raise SchemaError(f"unknown calculus {calculus!r}", f"{path}.calculus")


# ---- proof steps ----------------------------------------------------------------


def encode_step(step) -> dict:
    if isinstance(step, TableauApply):
        return {
            "step": "tableau_apply",
            "premise": step.premise,
            "rule": step.rule,
            "branch": step.branch,
            "target_prefix": step.target_prefix,
        }
    if isinstance(step, TableauClose):
        return {
            "step": "tableau_close",
            "branch": step.branch,
            "node_a": step.node_a,
            "node_b": step.node_b,
        }
    if isinstance(step, HornMark):
        return {"step": "horn_mark", "variable": step.variable, "clause_index": step.clause_index}
    if isinstance(step, HornConclude):
        return {"step": "horn_conclude", "claim": step.claim}
    if isinstance(step, ResolvePl):
        return {
            "step": "resolve_pl",
            "parent1": step.parent1,
            "parent2": step.parent2,
            "pivot": step.pivot,
            "resolvent": encode_clause(step.resolvent),
        }
    if isinstance(step, ResolveFo):
        return {
            "step": "resolve_fo",
            "parent1": step.parent1,
            "sub1": encode_substitution(step.sub1),
            "parent2": step.parent2,
            "sub2": encode_substitution(step.sub2),
            "pivot1": render_literal(step.pivot1),
            "pivot2": render_literal(step.pivot2),
            "resolvent": encode_clause(step.resolvent),
        }
    if isinstance(step, BisimRemove):
        return {
            "step": "bisim_remove",
            "pair": [step.pair[0], step.pair[1]],
            "kind": step.kind,
            "successor": step.successor,
        }
    if isinstance(step, BisimConclude):
        return {"step": "bisim_conclude", "relation": sorted([a, b] for a, b in step.relation)}
    raise SchemaError(f"cannot encode step {type(step).__name__}")


def decode_step(doc, path: str = "step"):
    _expect(doc, dict, path, "a step object")
    kind = _field(doc, "step", path)
    try:
        if kind == "tableau_apply":
            return TableauApply(
                int(_field(doc, "premise", path)),
                str(_field(doc, "rule", path)),
                int(_field(doc, "branch", path)),
                doc.get("target_prefix"),
            )
        if kind == "tableau_close":
            node_b = doc.get("node_b")
            return TableauClose(
                int(_field(doc, "branch", path)),
                int(_field(doc, "node_a", path)),
                int(node_b) if node_b is not None else None,
            )
        if kind == "horn_mark":
            return HornMark(
                str(_field(doc, "variable", path)), int(_field(doc, "clause_index", path))
            )
        if kind == "horn_conclude":
            return HornConclude(str(_field(doc, "claim", path)))
        if kind == "resolve_pl":
            return ResolvePl(
                int(_field(doc, "parent1", path)),
                int(_field(doc, "parent2", path)),
                str(_field(doc, "pivot", path)),
                decode_clause(_field(doc, "resolvent", path), f"{path}.resolvent"),
            )
        if kind == "resolve_fo":
            return ResolveFo(
                int(_field(doc, "parent1", path)),
                decode_substitution(_field(doc, "sub1", path), f"{path}.sub1"),
                int(_field(doc, "parent2", path)),
                decode_substitution(_field(doc, "sub2", path), f"{path}.sub2"),
                parse_literal(_field(doc, "pivot1", path)),
                parse_literal(_field(doc, "pivot2", path)),
                decode_clause(_field(doc, "resolvent", path), f"{path}.resolvent"),
            )
        if kind == "bisim_remove":
            pair = _field(doc, "pair", path)
            return BisimRemove(
                (str(pair[0]), str(pair[1])),
                str(_field(doc, "kind", path)),
                doc.get("successor"),
            )
        if kind == "bisim_conclude":
            return BisimConclude(
                frozenset((str(a), str(b)) for a, b in _field(doc, "relation", path))
            )
    except (TypeError, ValueError, IndexError, ParseError) as e:
        raise SchemaError(f"bad step: {e}", path) from e
    raise SchemaError(f"unknown step kind {kind!r}", f"{path}.step")


# ---- feedback --------------------------------------------------------------------


class EncodedPayload:
    """Payload restored from disk; already in wire form."""

    __slots__ = ("doc",)

    def __init__(self, doc):
        self.doc = doc

    def __eq__(self, other):
        return isinstance(other, EncodedPayload) and self.doc == other.doc


def encode_payload(value) -> Any:
    if value is None or isinstance(value, (bool, int, str)):
        return value
    if isinstance(value, EncodedPayload):
        return value.doc
    if isinstance(value, KripkeStructure):
        return {"kind": "kripke", "value": encode_kripke(value)}
    if isinstance(value, ColoredGraph):
        return {"kind": "graph", "value": encode_graph(value)}
    if isinstance(value, EvalTrace):
        return {
            "kind": "trace",
            "value": {
                "formula": value.formula,
                "point": value.point,
                "holds": value.value,
                "children": [encode_payload(c)["value"] for c in value.children],
            },
        }
    if isinstance(value, TruthTable):
        return {"kind": "truth_table", "value": encode_truth_table(value)}
    if isinstance(value, ast.Formula):
        return {"kind": "formula", "value": encode_formula(value)}
    if isinstance(value, dict):
        if value and all(isinstance(v, bool) for v in value.values()):
            return {"kind": "valuation", "value": encode_valuation(value)}
        return {k: encode_payload(v) for k, v in value.items()}
    if isinstance(value, (list, tuple, set, frozenset)):
        items = [encode_payload(v) for v in value]
        if isinstance(value, (set, frozenset)):
            items.sort(key=repr)
        return items
    return repr(value)


def encode_feedback_item(item: FeedbackItem) -> dict:
    return {
        "generator": item.generator,
        "severity": item.severity,
        "message": item.message,
        "reveal_rank": item.reveal_rank,
        "payload": encode_payload(item.payload),
    }


def decode_feedback_item(doc, path: str = "item") -> FeedbackItem:
    _expect(doc, dict, path, "a feedback item object")
    payload = doc.get("payload")
    return FeedbackItem(
        str(_field(doc, "generator", path)),
        str(_field(doc, "severity", path)),
        str(_field(doc, "message", path)),
        int(_field(doc, "reveal_rank", path)),
        EncodedPayload(payload) if payload is not None else None,
    )
