"""Simple undirected graphs over bitset adjacency rows, and the
non-commuting graph construction.

Vertices are 0..V-1 with string labels; row v is an int whose bit u says
"u adjacent to v". Graphs are immutable, so every operation is a pure
function and safe to share.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .groups import FiniteGroup

# Induced-pattern search is exhaustive over vertex subsets, so the pattern
# order stays small. Only paths and 5-cycles are ever needed here.
MAX_PATTERN_ORDER = 8


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    labels: tuple[str, ...]
    adj: tuple[int, ...]

    def __post_init__(self):
        v = len(self.labels)
        if len(self.adj) != v:
            raise ValueError(f"{len(self.adj)} adjacency rows for {v} labels")
        if len(set(self.labels)) != v:
            raise ValueError("vertex labels must be unique")
        for u, row in enumerate(self.adj):
            if row < 0 or row >> v:
                raise ValueError(f"adjacency row {u} has bits outside the vertex range")
            if (row >> u) & 1:
                raise ValueError(f"loop at vertex {u} ({self.labels[u]!r})")
        for u in range(v):
            for w in _bits(self.adj[u]):
                if not (self.adj[w] >> u) & 1:
                    raise ValueError(f"asymmetric adjacency between {u} and {w}")

    @classmethod
    def from_edges(cls, labels: Sequence[str], edges: Iterable[tuple[int, int]]) -> "Graph":
        v = len(labels)
        rows = [0] * v
        for a, b in edges:
            if not (0 <= a < v and 0 <= b < v):
                raise IndexError(f"edge ({a}, {b}) out of range for {v} vertices")
            if a == b:
                raise ValueError(f"loop edge at vertex {a}")
            rows[a] |= 1 << b
            rows[b] |= 1 << a
        return cls(labels=tuple(labels), adj=tuple(rows))

    @property
    def vertex_count(self) -> int:
        return len(self.labels)

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.vertex_count:
            raise IndexError(f"vertex {v} out of range for {self.vertex_count} vertices")

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return self.adj[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return bool((self.adj[u] >> v) & 1)

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def edges(self) -> tuple[tuple[int, int], ...]:
        """Edges as sorted pairs, lexicographic."""
        out = []
        for u, row in enumerate(self.adj):
            for v in _bits(row >> (u + 1)):
                out.append((u, u + 1 + v))
        return tuple(out)

    def induced_subgraph(self, vertices: Iterable[int]) -> "Graph":
        """Subgraph on the given vertices (kept in ascending order)."""
        chosen = sorted(set(vertices))
        for v in chosen:
            self._check_vertex(v)
        pos = {v: i for i, v in enumerate(chosen)}
        rows = []
        for v in chosen:
            row = 0
            for u in _bits(self.adj[v]):
                if u in pos:
                    row |= 1 << pos[u]
            rows.append(row)
        return Graph(labels=tuple(self.labels[v] for v in chosen), adj=tuple(rows))


def non_commuting_graph(g: FiniteGroup) -> Graph:
    """Graph on the non-central elements of g, joined when they do not
    commute. Vertices follow element-index order."""
    if g.is_abelian():
        raise ValueError("abelian group: the non-commuting graph has no vertices")
    vertices = g.non_central()
    pos = {x: i for i, x in enumerate(vertices)}
    t = g.table
    rows = [0] * len(vertices)
    for i, x in enumerate(vertices):
        for j in range(i + 1, len(vertices)):
            y = vertices[j]
            if t[x][y] != t[y][x]:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return Graph(labels=tuple(g.labels[x] for x in vertices), adj=tuple(rows))


@dataclass(frozen=True)
class PartitionWitness:
    """Certificate that a graph is complete multipartite: the classes are
    independent sets and every cross-class pair is an edge."""

    classes: tuple[frozenset[int], ...]

    def sizes(self) -> tuple[int, ...]:
        return tuple(sorted(len(c) for c in self.classes))


def is_complete_multipartite(graph: Graph) -> PartitionWitness | None:
    """Group vertices by identical neighbourhoods, then check the
    certificate. Returns None when the graph is not complete multipartite."""
    v = graph.vertex_count
    groups: dict[int, list[int]] = {}
    order: list[int] = []
    for u in range(v):
        row = graph.adj[u]
        if row not in groups:
            groups[row] = []
            order.append(row)
        groups[row].append(u)
    classes = [frozenset(groups[row]) for row in order]
    # identical open neighbourhoods already force non-adjacency inside a
    # class; cross-class pairs must all be edges
    masks = [sum(1 << u for u in c) for c in classes]
    for i, ci in enumerate(classes):
        for j in range(i + 1, len(classes)):
            mj = masks[j]
            for u in ci:
                if graph.adj[u] & mj != mj:
                    return None
    return PartitionWitness(classes=tuple(classes))


def _parse_pattern(pattern: str) -> tuple[str, int]:
    kind, _, tail = pattern.partition("_")
    if kind not in ("cycle", "path") or not tail.isdigit():
        raise ValueError(f"unknown pattern {pattern!r}; expected 'path_k' or 'cycle_k'")
    k = int(tail)
    if k > MAX_PATTERN_ORDER:
        raise ValueError(f"pattern order {k} exceeds the cap of {MAX_PATTERN_ORDER}")
    if kind == "cycle" and k < 3:
        raise ValueError("cycles need at least 3 vertices")
    if kind == "path" and k < 1:
        raise ValueError("paths need at least 1 vertex")
    return kind, k


def _connected_within(graph: Graph, mask: int) -> bool:
    start = mask & -mask
    seen = start
    frontier = start
    while frontier:
        reach = 0
        for u in _bits(frontier):
            reach |= graph.adj[u]
        frontier = reach & mask & ~seen
        seen |= frontier
    return seen == mask


def find_induced(graph: Graph, pattern: str) -> tuple[int, ...] | None:
    """First vertex subset (lexicographic) whose induced subgraph is the
    requested path or cycle, or None after exhausting all subsets."""
    kind, k = _parse_pattern(pattern)
    v = graph.vertex_count
    if kind == "cycle":
        want_degrees = [2] * k
    elif k == 1:
        want_degrees = [0]
    else:
        want_degrees = sorted([1, 1] + [2] * (k - 2))
    for combo in combinations(range(v), k):
        mask = 0
        for u in combo:
            mask |= 1 << u
        degrees = sorted((graph.adj[u] & mask).bit_count() for u in combo)
        if degrees != want_degrees:
            continue
        if _connected_within(graph, mask):
            return combo
    return None


def is_k_regular(graph: Graph) -> int | None:
    """The common vertex degree, or None if degrees differ (or no vertices)."""
    if graph.vertex_count == 0:
        return None
    degrees = {row.bit_count() for row in graph.adj}
    if len(degrees) == 1:
        return degrees.pop()
    return None


def to_dot(graph: Graph) -> str:
    """Deterministic DOT text: vertices in index order, edges lexicographic."""
    lines = ["graph G {"]
    for v, label in enumerate(graph.labels):
        lines.append(f'  {v} [label="{label}"];')
    for u, v in graph.edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines)


def to_json(graph: Graph) -> str:
    obj = {
        "vertices": [{"id": v, "label": label} for v, label in enumerate(graph.labels)],
        "edges": [[u, v] for u, v in graph.edges()],
    }
    return json.dumps(obj)


def export_graph(graph: Graph, fmt: str) -> str:
    if fmt == "dot":
        return to_dot(graph)
    if fmt == "json":
        return to_json(graph)
    raise ValueError(f"unknown export format {fmt!r}; expected 'dot' or 'json'")
