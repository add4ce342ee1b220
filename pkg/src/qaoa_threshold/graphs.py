"""Small undirected simple graphs for oracle checks."""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from pathlib import Path

from .errors import DomainError, EdgeListError


@dataclass(frozen=True)
class Graph:
    vertex_count: int
    adjacency: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.adjacency) != self.vertex_count:
            raise DomainError("adjacency length does not match vertex_count")
        for v, nbrs in enumerate(self.adjacency):
            if len(set(nbrs)) != len(nbrs):
                raise DomainError(f"parallel edge at vertex {v}")
            for w in nbrs:
                if w == v:
                    raise DomainError(f"self-loop at vertex {v}")
                if not 0 <= w < self.vertex_count or v not in self.adjacency[w]:
                    raise DomainError(f"asymmetric adjacency {v} -> {w}")

    @classmethod
    def from_edges(cls, vertex_count: int, edges) -> Graph:
        adj = [[] for _ in range(vertex_count)]
        for u, v in edges:
            adj[u].append(v)
            adj[v].append(u)
        return cls(vertex_count, tuple(tuple(sorted(a)) for a in adj))

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u, nbrs in enumerate(self.adjacency) for v in nbrs if u < v]

    @property
    def edge_count(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adjacency]

    def regular_degree(self) -> int | None:
        """The common degree if the graph is regular and non-empty, else None."""
        degs = set(self.degrees())
        return degs.pop() if len(degs) == 1 else None


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise DomainError(f"a cycle needs at least 3 vertices, got {n}")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def heawood_graph() -> Graph:
    """The 14-vertex cubic graph of girth 6, from LCF notation [5, -5]^7."""
    n = 14
    edges = {tuple(sorted((i, (i + 1) % n))) for i in range(n)}
    for i in range(n):
        j = (i + 5) % n if i % 2 == 0 else (i - 5) % n
        edges.add(tuple(sorted((i, j))))
    return Graph.from_edges(n, sorted(edges))


def lightcone_tree(D: int, radius: int = 2) -> Graph:
    """Tree around the edge (0, 1): interior vertices have degree D, leaves degree 1.

    Experimental; whether QAOA on this truncated tree reproduces the infinite-girth
    edge expectation is checked empirically, not assumed.
    """
    if D < 2 or radius < 1:
        raise DomainError("need D >= 2 and radius >= 1")
    edges = [(0, 1)]
    frontier = [0, 1]
    count = 2
    for _ in range(radius):
        nxt = []
        for v in frontier:
            for _ in range(D - 1):
                edges.append((v, count))
                nxt.append(count)
                count += 1
        frontier = nxt
    return Graph.from_edges(count, edges)


def girth(g: Graph) -> float:
    """Length of a shortest cycle, ``math.inf`` for forests."""
    best = math.inf
    for root in range(g.vertex_count):
        dist = {root: 0}
        parent = {root: -1}
        queue = deque([root])
        while queue:
            u = queue.popleft()
            if 2 * dist[u] + 1 >= best:
                break
            for w in g.adjacency[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    best = min(best, dist[u] + dist[w] + 1)
    return best


def load_edge_list(path) -> Graph:
    """Read whitespace-separated ``u v`` pairs (0-indexed); ``#`` starts a comment line."""
    edges = []
    seen = set()
    max_vertex = -1
    text = Path(path).read_text(encoding="utf-8")
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise EdgeListError(f"expected two vertex ids, got {line!r}", lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise EdgeListError(f"non-integer vertex id in {line!r}", lineno) from None
        if u < 0 or v < 0:
            raise EdgeListError("negative vertex id", lineno)
        if u == v:
            raise EdgeListError(f"self-loop on vertex {u}", lineno)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise EdgeListError(f"duplicate edge {key}", lineno)
        seen.add(key)
        edges.append(key)
        max_vertex = max(max_vertex, u, v)
    return Graph.from_edges(max_vertex + 1, edges)
