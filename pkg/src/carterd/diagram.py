"""Labelled simple graphs and their structural classification."""

from __future__ import annotations

import json
from dataclasses import dataclass


class UnrecognizedDiagram(ValueError):
    pass


@dataclass(frozen=True)
class Diagram:
    """Vertices are labels; edges are index pairs ``(a, b, label)`` with ``a < b`` and label >= 3."""

    vertices: tuple[str, ...]
    edges: tuple[tuple[int, int, int], ...]

    def __post_init__(self) -> None:
        norm = set()
        for a, b, lab in self.edges:
            if a == b:
                raise ValueError("loops are not allowed")
            if lab < 3:
                raise ValueError("edge labels must be at least 3")
            norm.add((min(a, b), max(a, b), lab))
        if len({(a, b) for a, b, _ in norm}) != len(norm):
            raise ValueError("multiple edges between the same vertices")
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "edges", tuple(sorted(norm)))

    def neighbours(self) -> list[set[int]]:
        adj: list[set[int]] = [set() for _ in self.vertices]
        for a, b, _ in self.edges:
            adj[a].add(b)
            adj[b].add(a)
        return adj

    def edge_names(self) -> set[frozenset[str]]:
        return {frozenset((self.vertices[a], self.vertices[b])) for a, b, _ in self.edges}

    def to_dot(self, name: str = "G") -> str:
        lines = [f"graph {name} {{"]
        for k, v in enumerate(self.vertices):
            lines.append(f'  v{k} [label="{v}"];')
        for a, b, lab in self.edges:
            attr = f' [label="{lab}"]' if lab > 3 else ""
            lines.append(f"  v{a} -- v{b}{attr};")
        lines.append("}")
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        return json.dumps(
            {
                "schema": "carterd.diagram/1",
                "vertices": list(self.vertices),
                "edges": [list(e) for e in self.edges],
            },
            indent=1,
        )

    @classmethod
    def from_json(cls, text: str) -> Diagram:
        data = json.loads(text)
        return cls(tuple(data["vertices"]), tuple(tuple(e) for e in data["edges"]))


@dataclass(frozen=True)
class Component:
    family: str  # "A", "D" or "Delta" (a proper Carter diagram)
    rank: int
    m: int = 0
    vertices: tuple[int, ...] = ()

    @property
    def label(self) -> str:
        if self.family == "Delta":
            return f"Delta({self.m},{self.rank})"
        return f"{self.family}{self.rank}"


@dataclass(frozen=True)
class Classification:
    components: tuple[Component, ...]

    @property
    def label(self) -> str:
        return "+".join(c.label for c in self.components) or "empty"

    @property
    def proper(self) -> bool:
        """True when some component is a proper Carter diagram (contains a 4-cycle)."""
        return any(c.family == "Delta" for c in self.components)

    @property
    def is_coxeter(self) -> bool:
        return not self.proper

    def __str__(self) -> str:
        return self.label


_FAMILY_ORDER = {"Delta": 0, "D": 1, "A": 2}


def _components(adj: list[set[int]]) -> list[list[int]]:
    seen: set[int] = set()
    comps = []
    for s in range(len(adj)):
        if s in seen:
            continue
        stack, comp = [s], []
        seen.add(s)
        while stack:
            v = stack.pop()
            comp.append(v)
            for u in adj[v]:
                if u not in seen:
                    seen.add(u)
                    stack.append(u)
        comps.append(sorted(comp))
    return comps


def _arm_length(adj: list[set[int]], start: int, prev: int) -> int:
    """Length of the path hanging off ``prev`` through ``start`` (0 when there is none)."""
    length = 0
    cur, back = start, prev
    while True:
        length += 1
        rest = adj[cur] - {back}
        if not rest:
            return length
        if len(rest) > 1:
            raise UnrecognizedDiagram("branching inside an arm")
        back, cur = cur, next(iter(rest))


def _classify_component(comp: list[int], adj: list[set[int]]) -> Component:
    k = len(comp)
    n_edges = sum(len(adj[v]) for v in comp) // 2
    degs = {v: len(adj[v]) for v in comp}
    if n_edges == k - 1:
        high = [v for v in comp if degs[v] > 2]
        if not high:
            return Component("A", k, vertices=tuple(comp))
        if len(high) == 1 and degs[high[0]] == 3:
            arms = sorted(_arm_length(adj, u, high[0]) for u in adj[high[0]])
            if arms[0] == 1 and arms[1] == 1 and k >= 4:
                return Component("D", k, vertices=tuple(comp))
        raise UnrecognizedDiagram(f"tree component with branch data {sorted(degs.values())}")
    if n_edges == k:
        # one cycle; it has to be a square with tails on two opposite corners
        core = set(comp)
        leaves = [v for v in core if len(adj[v] & core) <= 1]
        while leaves:
            v = leaves.pop()
            core.discard(v)
            for u in adj[v] & core:
                if len(adj[u] & core) <= 1:
                    leaves.append(u)
        if len(core) != 4:
            raise UnrecognizedDiagram(f"cycle of length {len(core)}")
        tails = {}
        for v in core:
            outside = adj[v] - core
            if len(outside) > 1:
                raise UnrecognizedDiagram("more than one tail at a cycle vertex")
            tails[v] = _arm_length(adj, next(iter(outside)), v) if outside else 0
        attached = [v for v in core if tails[v]]
        if len(attached) == 2 and attached[1] in adj[attached[0]]:
            raise UnrecognizedDiagram("tails on adjacent cycle vertices")
        if len(attached) > 2:
            raise UnrecognizedDiagram("tails on more than two cycle vertices")
        ordered = sorted(tails.values(), reverse=True)
        return Component("Delta", k, m=ordered[1] + 2, vertices=tuple(comp))
    raise UnrecognizedDiagram(f"component with {k} vertices and {n_edges} edges")


def classify_diagram(d: Diagram) -> Classification:
    """Name each connected component: path ``A_k``, fork ``D_k`` or proper Carter ``Delta(m,k)``."""
    if any(lab != 3 for _, _, lab in d.edges):
        raise UnrecognizedDiagram("edge labels other than 3 do not occur in type D")
    adj = d.neighbours()
    comps = [_classify_component(c, adj) for c in _components(adj)]
    comps.sort(key=lambda c: (_FAMILY_ORDER[c.family], -c.rank, c.m, c.vertices))
    return Classification(tuple(comps))
