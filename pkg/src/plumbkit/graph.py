"""Plumbing graphs: validation, construction and the JSON graph format.

A graph file is a JSON document::

    {"vertices": [{"id": 0, "euler": -2}, {"id": 1, "euler": -2}],
     "edges": [[0, 1]]}

Vertex ``i`` of the list must carry ``id == i``; cycles are always reported in
that order. An optional ``genus`` field is accepted only when it is 0.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

from .errors import DisconnectedGraph, DuplicateEdge, MalformedGraph, SelfLoop


@dataclass(frozen=True)
class PlumbingGraph:
    """Weighted graph of rational exceptional curves.

    ``eulers[j]`` is the self-intersection ``e_j`` of ``E_j``; ``edges`` holds
    sorted pairs ``(i, j)`` with ``i < j``.
    """

    eulers: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        eulers = tuple(self.eulers)
        if not eulers:
            raise MalformedGraph("graph has no vertices")
        for e in eulers:
            if isinstance(e, bool) or not isinstance(e, int):
                raise MalformedGraph(f"euler number must be an integer, got {e!r}")
        s = len(eulers)
        seen = set()
        edges = []
        for pos, edge in enumerate(self.edges):
            try:
                i, j = edge
            except (TypeError, ValueError):
                raise MalformedGraph(f"edge #{pos} is not a pair: {edge!r}") from None
            for v in (i, j):
                if isinstance(v, bool) or not isinstance(v, int) or not 0 <= v < s:
                    raise MalformedGraph(f"edge #{pos} {list(edge)} names unknown vertex {v!r}")
            if i == j:
                raise SelfLoop(f"edge #{pos} is a self-loop at vertex {i}")
            key = (min(i, j), max(i, j))
            if key in seen:
                raise DuplicateEdge(f"edge #{pos} {list(edge)} repeats an earlier edge")
            seen.add(key)
            edges.append(key)
        object.__setattr__(self, "eulers", eulers)
        object.__setattr__(self, "edges", tuple(edges))
        if len(self._component(0)) != s:
            missing = sorted(set(range(s)) - self._component(0))
            raise DisconnectedGraph(f"graph is disconnected; vertices {missing} unreachable from 0")

    @property
    def size(self) -> int:
        return len(self.eulers)

    def neighbors(self, j: int) -> list[int]:
        out = []
        for a, b in self.edges:
            if a == j:
                out.append(b)
            elif b == j:
                out.append(a)
        return sorted(out)

    def is_tree(self) -> bool:
        return len(self.edges) == self.size - 1

    def _component(self, start: int) -> set[int]:
        adj: dict[int, list[int]] = {v: [] for v in range(len(self.eulers))}
        for a, b in self.edges:
            adj[a].append(b)
            adj[b].append(a)
        seen = {start}
        stack = [start]
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return seen

    def to_dict(self) -> dict:
        return {
            "vertices": [{"id": j, "euler": e} for j, e in enumerate(self.eulers)],
            "edges": [list(e) for e in self.edges],
        }

    def to_json(self, indent: int | None = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent)

    @classmethod
    def from_dict(cls, doc) -> "PlumbingGraph":
        if not isinstance(doc, dict):
            raise MalformedGraph("graph document must be an object with 'vertices' and 'edges'")
        unknown = set(doc) - {"vertices", "edges", "name", "comment"}
        if unknown:
            raise MalformedGraph(f"unknown top-level keys: {sorted(unknown)}")
        verts = doc.get("vertices")
        if not isinstance(verts, list):
            raise MalformedGraph("'vertices' must be a list")
        eulers = []
        for pos, v in enumerate(verts):
            if not isinstance(v, dict) or "euler" not in v or "id" not in v:
                raise MalformedGraph(f"vertex #{pos} must be an object with 'id' and 'euler'")
            if v["id"] != pos or isinstance(v["id"], bool):
                raise MalformedGraph(f"vertex #{pos} has id {v['id']!r}; ids must be 0..s-1 in order")
            if v.get("genus", 0) != 0:
                raise MalformedGraph(f"vertex #{pos} has genus {v['genus']!r}; only genus 0 is supported")
            eulers.append(v["euler"])
        edges = doc.get("edges", [])
        if not isinstance(edges, list):
            raise MalformedGraph("'edges' must be a list")
        return cls(tuple(eulers), tuple(tuple(e) if isinstance(e, list) else e for e in edges))


def parse_graph(text: str) -> PlumbingGraph:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedGraph(f"line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    return PlumbingGraph.from_dict(doc)


def load_graph(path) -> PlumbingGraph:
    return parse_graph(Path(path).read_text())


def chain(eulers: Sequence[int]) -> PlumbingGraph:
    """Linear graph ``E_0 - E_1 - ... - E_{s-1}``."""
    return PlumbingGraph(tuple(eulers), tuple((i, i + 1) for i in range(len(eulers) - 1)))


def from_edges(eulers: Sequence[int], edges: Iterable[tuple[int, int]]) -> PlumbingGraph:
    return PlumbingGraph(tuple(eulers), tuple(edges))
