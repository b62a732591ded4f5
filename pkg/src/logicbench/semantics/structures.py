"""Interpretations: valuations, Kripke structures, colored graphs.

All structures are immutable after construction.  World and node names are
coerced to strings so structures survive JSON round trips unchanged.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Iterable, Mapping

Valuation = Mapping[str, bool]


def _freeze_labelling(names: Iterable[str], raw: Mapping | None) -> Mapping[str, frozenset[str]]:
    raw = raw or {}
    out = {}
    for key, values in raw.items():
        out[str(key)] = frozenset(str(v) for v in values)
    for name in names:
        out.setdefault(name, frozenset())
    return MappingProxyType(out)


@dataclass(frozen=True)
class KripkeStructure:
    worlds: frozenset[str]
    edges: frozenset[tuple[str, str]]
    labels: Mapping[str, frozenset[str]] = field(default_factory=dict)
    designated: str | None = None

    def __post_init__(self):
        worlds = frozenset(str(w) for w in self.worlds)
        edges = frozenset((str(a), str(b)) for a, b in self.edges)
        object.__setattr__(self, "worlds", worlds)
        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "labels", _freeze_labelling(worlds, self.labels))
        if self.designated is not None:
            object.__setattr__(self, "designated", str(self.designated))
        if not worlds:
            raise ValueError("a Kripke structure needs at least one world")
        for a, b in edges:
            if a not in worlds or b not in worlds:
                raise ValueError(f"edge ({a}, {b}) leaves the world set")
        for w in self.labels:
            if w not in worlds:
                raise ValueError(f"label for unknown world {w}")
        if self.designated is not None and self.designated not in worlds:
            raise ValueError(f"designated world {self.designated} not in the world set")

    def successors(self, world: str) -> frozenset[str]:
        return frozenset(b for a, b in self.edges if a == world)

    def label(self, world: str) -> frozenset[str]:
        return self.labels[world]

    def with_designated(self, world: str) -> "KripkeStructure":
        return KripkeStructure(self.worlds, self.edges, dict(self.labels), world)


@dataclass(frozen=True)
class ColoredGraph:
    nodes: frozenset[str]
    edges: frozenset[tuple[str, str]]
    colors: Mapping[str, frozenset[str]] = field(default_factory=dict)

    def __post_init__(self):
        nodes = frozenset(str(n) for n in self.nodes)
        edges = frozenset((str(a), str(b)) for a, b in self.edges)
        object.__setattr__(self, "nodes", nodes)
        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "colors", _freeze_labelling(nodes, self.colors))
        for a, b in edges:
            if a not in nodes or b not in nodes:
                raise ValueError(f"edge ({a}, {b}) leaves the node set")
        for n in self.colors:
            if n not in nodes:
                raise ValueError(f"colors for unknown node {n}")

    def colors_of(self, node: str) -> frozenset[str]:
        return self.colors[node]

    def color_names(self) -> frozenset[str]:
        out: set[str] = set()
        for values in self.colors.values():
            out |= values
        return frozenset(out)
