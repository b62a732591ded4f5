"""Rule-based feedback strategies and their declarative mini-language.

One strategy is an ordered list of rules.  A rule fires when its condition
holds over the outcomes of earlier rules; a fired rule runs its generator,
whose items are appended at the next reveal ranks.  A rule marked ``stop``
halts evaluation after firing.

Text form, one rule per line (``#`` starts a comment):

    rule <name>: when <condition> run <generator-id> [stop]
    condition := always | incorrect | correct | produced(<gen>) | empty(<gen>)

``produced(g)``/``empty(g)`` may only reference generators of earlier rules.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from ..errors import ParseError
from .generators import GENERATORS, run_generator
from .items import FeedbackContext, FeedbackItem


@dataclass(frozen=True)
class Condition:
    kind: str  # always | incorrect | correct | produced | empty
    generator: str | None = None


@dataclass(frozen=True)
class StrategyRule:
    name: str
    condition: Condition
    generator: str
    stop: bool = False


@dataclass(frozen=True)
class FeedbackStrategy:
    rules: tuple[StrategyRule, ...]

    def __post_init__(self):
        if not self.rules:
            raise ValueError("a feedback strategy needs at least one rule")
        seen: set[str] = set()
        for rule in self.rules:
            if rule.generator not in GENERATORS:
                raise ValueError(f"unknown generator {rule.generator!r} in rule {rule.name}")
            cond = rule.condition
            if cond.kind in ("produced", "empty") and cond.generator not in seen:
                raise ValueError(
                    f"rule {rule.name} references generator {cond.generator!r}"
                    " before any earlier rule runs it"
                )
            seen.add(rule.generator)


def run_strategy(strategy: FeedbackStrategy, ctx: FeedbackContext) -> list[FeedbackItem]:
    """Evaluate the rules in order; deterministic for a fixed context."""
    items: list[FeedbackItem] = []
    produced: dict[str, bool] = {}
    for rule in strategy.rules:
        if not _holds(rule.condition, ctx, produced):
            continue
        drafts = run_generator(rule.generator, ctx)
        produced[rule.generator] = produced.get(rule.generator, False) or bool(drafts)
        for severity, message, payload in drafts:
            items.append(
                FeedbackItem(rule.generator, severity, message, len(items), payload)
            )
        if rule.stop:
            break
    return items


def _holds(cond: Condition, ctx: FeedbackContext, produced: dict[str, bool]) -> bool:
    if cond.kind == "always":
        return True
    if cond.kind == "incorrect":
        return not ctx.is_correct
    if cond.kind == "correct":
        return ctx.is_correct
    if cond.kind == "produced":
        return produced.get(cond.generator, False)
    if cond.kind == "empty":
        return not produced.get(cond.generator, False)
    raise ValueError(f"unknown condition {cond.kind!r}")


_RULE_RE = re.compile(
    r"rule\s+(?P<name>\w+)\s*:\s*when\s+(?P<cond>always|incorrect|correct"
    r"|produced\(\s*(?P<pgen>\w+)\s*\)|empty\(\s*(?P<egen>\w+)\s*\))"
    r"\s+run\s+(?P<gen>\w+)(?P<stop>\s+stop)?\s*$"
)


def parse_strategy(text: str) -> FeedbackStrategy:
    """Parse the line-oriented strategy language; errors carry line numbers."""
    rules: list[StrategyRule] = []
    seen_generators: set[str] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        m = _RULE_RE.match(line)
        if m is None:
            raise ParseError(f"line {lineno}: cannot parse rule {raw.strip()!r}", position=lineno)
        cond_text = m.group("cond")
        if cond_text.startswith("produced"):
            condition = Condition("produced", m.group("pgen"))
        elif cond_text.startswith("empty"):
            condition = Condition("empty", m.group("egen"))
        else:
            condition = Condition(cond_text)
        generator_id = m.group("gen")
        if generator_id not in GENERATORS:
            raise ParseError(
                f"line {lineno}: unknown generator {generator_id!r}", position=lineno
            )
        if condition.generator is not None and condition.generator not in seen_generators:
            raise ParseError(
                f"line {lineno}: condition references {condition.generator!r}, which no"
                " earlier rule runs",
                position=lineno,
            )
        rules.append(StrategyRule(m.group("name"), condition, generator_id, bool(m.group("stop"))))
        seen_generators.add(generator_id)
    if not rules:
        raise ParseError("a strategy needs at least one rule", position=0)
    return FeedbackStrategy(tuple(rules))


def render_strategy(strategy: FeedbackStrategy) -> str:
    lines = []
    for rule in strategy.rules:
        cond = rule.condition
        if cond.kind in ("produced", "empty"):
            cond_text = f"{cond.kind}({cond.generator})"
        else:
            cond_text = cond.kind
        suffix = " stop" if rule.stop else ""
        lines.append(f"rule {rule.name}: when {cond_text} run {rule.generator}{suffix}")
    return "\n".join(lines) + "\n"


# Strategies shipped out of the box.

FORMULA_CONSTRUCTION_STRATEGY = parse_strategy(
    """
    rule r1: when always run correctness
    rule r2: when incorrect run misconception_hint
    rule r3: when incorrect run misconception_explicit
    rule r4: when incorrect run misconception_position
    rule r5: when incorrect run distinguishing_model
    """
)

NODE_SET_STRATEGY = parse_strategy(
    """
    rule r1: when always run correctness
    rule r2: when incorrect run subset_relation
    rule r3: when incorrect run node_diff
    """
)

CORRECTNESS_ONLY_STRATEGY = parse_strategy(
    "rule r1: when always run correctness\n"
)

BUILTIN_STRATEGIES: dict[str, FeedbackStrategy] = {
    "formula_construction": FORMULA_CONSTRUCTION_STRATEGY,
    "node_set": NODE_SET_STRATEGY,
    "correctness_only": CORRECTNESS_ONLY_STRATEGY,
}


def resolve_strategy(spec) -> FeedbackStrategy:
    """Strategy object from a builtin name, DSL text, or strategy value."""
    if isinstance(spec, FeedbackStrategy):
        return spec
    if isinstance(spec, str):
        if spec in BUILTIN_STRATEGIES:
            return BUILTIN_STRATEGIES[spec]
        if "rule" in spec:
            return parse_strategy(spec)
        raise ValueError(f"unknown feedback strategy {spec!r}")
    raise TypeError(f"cannot resolve a strategy from {type(spec).__name__}")
