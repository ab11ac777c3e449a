"""Immutable simple graphs over integer bitmask adjacency rows, plus generators.

Vertex ``v`` of a graph on ``n`` vertices is the integer ``v`` in ``range(n)``;
row ``adj[v]`` has bit ``u`` set iff ``uv`` is an edge.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence

INF = math.inf  # distance between vertices in different components

# Practical ceiling; every instance used by the package is far below it.
MAX_ORDER = 512


class GraphError(ValueError):
    """Raised when a generator or graph operation receives invalid input."""


class CeilingError(GraphError):
    """Instance is well formed but above a supported size limit."""


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]
    labels: tuple[str, ...] | None = None

    def __post_init__(self):
        if self.n < 0:
            raise GraphError("negative order")
        if self.n > MAX_ORDER:
            raise CeilingError(f"order {self.n} above ceiling {MAX_ORDER}")
        if len(self.adj) != self.n:
            raise GraphError("adjacency row count differs from n")
        full = (1 << self.n) - 1
        for u, row in enumerate(self.adj):
            if row & ~full:
                raise GraphError(f"row {u} has bits outside [0, n)")
            if row >> u & 1:
                raise GraphError(f"loop at vertex {u}")
            for v in bits(row):
                if not self.adj[v] >> u & 1:
                    raise GraphError(f"asymmetric adjacency at ({u}, {v})")
        if self.labels is not None:
            if len(self.labels) != self.n:
                raise GraphError("label count differs from n")
            if len(set(self.labels)) != self.n:
                raise GraphError("labels must be unique")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]], labels: Sequence[str] | None = None) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows), tuple(labels) if labels is not None else None)

    @property
    def m(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self.adj[v]))

    def edges(self) -> list[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u] >> (u + 1) << (u + 1))]

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else str(v)

    def vertex_of_label(self, text: str) -> int:
        if self.labels is not None and text in self.labels:
            return self.labels.index(text)
        raise GraphError(f"unknown vertex label {text!r}")

    def induced(self, vertices: Sequence[int]) -> "Graph":
        """Subgraph induced by ``vertices``, renumbered in the given order."""
        index = {v: i for i, v in enumerate(vertices)}
        rows = []
        for v in vertices:
            rows.append(mask_of(index[u] for u in bits(self.adj[v]) if u in index))
        labels = tuple(self.label(v) for v in vertices) if self.labels is not None else None
        return Graph(len(vertices), tuple(rows), labels)

    def remove_vertex(self, v: int) -> "Graph":
        return self.induced([u for u in range(self.n) if u != v])

    def _repr_pretty_(self, p, cycle):  # pragma: no cover - IPython nicety
        p.text(f"Graph(n={self.n}, m={self.m})")

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


def _default_labels(n: int) -> tuple[str, ...]:
    return tuple(str(i) for i in range(n))


# ---------------------------------------------------------------- generators

def complete(n: int) -> Graph:
    if n < 1:
        raise GraphError("complete(n) needs n >= 1")
    full = (1 << n) - 1
    return Graph(n, tuple(full ^ (1 << v) for v in range(n)), _default_labels(n))


def empty(n: int) -> Graph:
    return Graph(n, (0,) * n, _default_labels(n))


def complete_bipartite(m: int, n: int) -> Graph:
    """K_{m,n} with parts ``0..m-1`` and ``m..m+n-1``."""
    if m < 1 or n < 1:
        raise GraphError("complete_bipartite needs both parts non-empty")
    left = (1 << m) - 1
    right = ((1 << n) - 1) << m
    rows = tuple(right if v < m else left for v in range(m + n))
    return Graph(m + n, rows, _default_labels(m + n))


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle(n) needs n >= 3")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)], _default_labels(n))


def path(n: int) -> Graph:
    if n < 1:
        raise GraphError("path(n) needs n >= 1")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)], _default_labels(n))


def petersen() -> Graph:
    # outer 5-cycle 0..4, spokes i -- i+5, inner pentagram 5..9
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(i, i + 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, edges, _default_labels(10))


def turan_graph(n: int, r: int) -> Graph:
    """Balanced complete r-partite graph; vertex ``v`` lies in part ``v mod r``."""
    if r < 1:
        raise GraphError("turan_graph needs r >= 1")
    if n < 0:
        raise GraphError("turan_graph needs n >= 0")
    edges = [(u, v) for u, v in combinations(range(n), 2) if u % r != v % r]
    return Graph.from_edges(n, edges, _default_labels(n))


def _check_factors(g: Graph, h: Graph):
    if g.n == 0 or h.n == 0:
        raise GraphError("product factors must be non-empty")


def _pair_labels(g: Graph, h: Graph) -> tuple[str, ...]:
    return tuple(f"({g.label(a)},{h.label(b)})" for a in range(g.n) for b in range(h.n))


def cartesian_product(g: Graph, h: Graph) -> Graph:
    """G □ H; vertex ``(a, b)`` has index ``a * n(H) + b``."""
    _check_factors(g, h)
    k = h.n
    rows = []
    for a in range(g.n):
        for b in range(h.n):
            row = 0
            for b2 in bits(h.adj[b]):
                row |= 1 << (a * k + b2)
            for a2 in bits(g.adj[a]):
                row |= 1 << (a2 * k + b)
            rows.append(row)
    return Graph(g.n * k, tuple(rows), _pair_labels(g, h))


def direct_product(g: Graph, h: Graph) -> Graph:
    """G × H; same vertex indexing as :func:`cartesian_product`."""
    _check_factors(g, h)
    k = h.n
    rows = []
    for a in range(g.n):
        for b in range(h.n):
            row = 0
            for a2 in bits(g.adj[a]):
                row |= h.adj[b] << (a2 * k)
            rows.append(row)
    return Graph(g.n * k, tuple(rows), _pair_labels(g, h))


@dataclass(frozen=True)
class EdgeLabeling:
    """Bijection between line-graph vertices and base-graph edges."""

    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if len(set(self.edges)) != len(self.edges):
            raise GraphError("edge labeling is not injective")

    def vertex_of(self, u: int, v: int) -> int:
        return self.edges.index((min(u, v), max(u, v)))

    def vertices_of(self, edge_set: Iterable[tuple[int, int]]) -> list[int]:
        return sorted(self.vertex_of(u, v) for u, v in edge_set)

    def edges_of(self, vertices: Iterable[int]) -> list[tuple[int, int]]:
        return [self.edges[x] for x in vertices]


def line_graph(g: Graph) -> tuple[Graph, EdgeLabeling]:
    """L(G) with one vertex per edge of G, in lexicographic edge order."""
    edges = g.edges()
    if not edges:
        raise GraphError("line graph of an edgeless graph")
    at = [0] * g.n  # at[v]: mask of line-vertices incident with v
    for i, (u, v) in enumerate(edges):
        at[u] |= 1 << i
        at[v] |= 1 << i
    rows = tuple((at[u] | at[v]) & ~(1 << i) for i, (u, v) in enumerate(edges))
    labels = tuple(f"{g.label(u)}-{g.label(v)}" for u, v in edges)
    return Graph(len(edges), rows, labels), EdgeLabeling(tuple(edges))


def disjoint_union(g: Graph, h: Graph) -> Graph:
    rows = list(g.adj) + [row << g.n for row in h.adj]
    return Graph(g.n + h.n, tuple(rows), _combined_labels(g, h))


def join(g: Graph, h: Graph) -> Graph:
    left = g.full_mask
    right = h.full_mask << g.n
    rows = [row | right for row in g.adj] + [(row << g.n) | left for row in h.adj]
    return Graph(g.n + h.n, tuple(rows), _combined_labels(g, h))


def _combined_labels(g: Graph, h: Graph) -> tuple[str, ...]:
    # Component labels clash easily (two K(1)'s are both "0"), so renumber.
    return _default_labels(g.n + h.n)


def duplicate_vertex(g: Graph, v: int, mode: str = "false_twin") -> Graph:
    """Append a twin of ``v``: ``mode`` is ``"false_twin"`` or ``"true_twin"``."""
    if not 0 <= v < g.n:
        raise GraphError(f"invalid vertex {v}")
    if mode not in ("false_twin", "true_twin"):
        raise GraphError(f"unknown duplication mode {mode!r}")
    new = g.n
    nbrs = g.adj[v] | ((1 << v) if mode == "true_twin" else 0)
    rows = [row | ((1 << new) if nbrs >> u & 1 else 0) for u, row in enumerate(g.adj)]
    rows.append(nbrs)
    labels = None
    if g.labels is not None:
        base = g.labels[v]
        k = 1
        while f"{base}'{k}" in g.labels:
            k += 1
        labels = g.labels + (f"{base}'{k}",)
    return Graph(g.n + 1, tuple(rows), labels)


def _assert_family_post(g: Graph, what: str):
    if g.m != 2 * g.n - 5 or diameter(g) != 2 or has_universal_vertex(g):
        raise AssertionError(f"{what}: m=2n-5 / diameter 2 / no universal vertex violated")


def c5_family(i: int, j: int) -> Graph:
    """C5 with vertex 0 false-twinned ``i`` times and vertex 2 ``j`` times."""
    if i < 0 or j < 0:
        raise GraphError("c5_family needs i, j >= 0")
    g = cycle(5)
    for _ in range(i):
        g = duplicate_vertex(g, 0)
    for _ in range(j):
        g = duplicate_vertex(g, 2)
    _assert_family_post(g, f"c5_family({i},{j})")
    return g


# G7 layout: triangle 0,1,2; pendant p_k = 3+k on vertex k; hub 6 joined to 3,4,5.
G7_TRIANGLE = (0, 1, 2)
G7_DEGREE_TWO = (3, 4, 5)
G7_HUB = 6


def g7_family(i: int, j: int, k: int) -> Graph:
    """G7 with its degree-2 vertices 3, 4, 5 false-twinned i, j, k times."""
    if min(i, j, k) < 0:
        raise GraphError("g7_family needs i, j, k >= 0")
    edges = [(0, 1), (1, 2), (0, 2), (0, 3), (1, 4), (2, 5), (3, 6), (4, 6), (5, 6)]
    g = Graph.from_edges(7, edges, ("a0", "a1", "a2", "p0", "p1", "p2", "w"))
    for v, times in zip(G7_DEGREE_TWO, (i, j, k)):
        for _ in range(times):
            g = duplicate_vertex(g, v)
    _assert_family_post(g, f"g7_family({i},{j},{k})")
    return g


# ------------------------------------------------------------------- metrics

class DistanceMatrix:
    """All-pairs hop distances; ``INF`` marks pairs in different components."""

    __slots__ = ("_rows",)

    def __init__(self, rows: Sequence[Sequence[float]]):
        self._rows = tuple(tuple(r) for r in rows)

    def __getitem__(self, uv: tuple[int, int]):
        u, v = uv
        return self._rows[u][v]

    def row(self, u: int) -> tuple:
        return self._rows[u]

    def __len__(self):
        return len(self._rows)

    def __eq__(self, other):
        return isinstance(other, DistanceMatrix) and self._rows == other._rows

    def __hash__(self):
        return hash(self._rows)


def bfs_layers(g: Graph, source: int) -> list[int]:
    """Masks of vertices at distance 0, 1, 2, ... from ``source``."""
    seen = 1 << source
    frontier = seen
    layers = [frontier]
    while True:
        nxt = 0
        for w in bits(frontier):
            nxt |= g.adj[w]
        nxt &= ~seen
        if not nxt:
            return layers
        seen |= nxt
        layers.append(nxt)
        frontier = nxt


def distance_matrix(g: Graph) -> DistanceMatrix:
    rows = []
    for s in range(g.n):
        row = [INF] * g.n
        for d, layer in enumerate(bfs_layers(g, s)):
            for v in bits(layer):
                row[v] = d
        rows.append(row)
    return DistanceMatrix(rows)


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    reach = 0
    for layer in bfs_layers(g, 0):
        reach |= layer
    return reach == g.full_mask


def diameter(g: Graph, dist: DistanceMatrix | None = None):
    if g.n == 0:
        return 0
    dist = dist or distance_matrix(g)
    return max(max(dist.row(u)) for u in range(g.n))


def girth(g: Graph):
    """Length of a shortest cycle, ``INF`` for forests."""
    best = INF
    for s in range(g.n):
        dist = {s: 0}
        parent = {s: -1}
        queue = [s]
        for x in queue:
            for y in bits(g.adj[x]):
                if y not in dist:
                    dist[y] = dist[x] + 1
                    parent[y] = x
                    queue.append(y)
                elif parent[x] != y:
                    best = min(best, dist[x] + dist[y] + 1)
    return best


def has_universal_vertex(g: Graph) -> bool:
    return any(g.degree(v) == g.n - 1 for v in range(g.n)) if g.n > 1 else g.n == 1


def degree_sequence(g: Graph) -> list[int]:
    return sorted(g.degrees(), reverse=True)


def distance_distribution(g: Graph) -> dict:
    """Histogram of distances over unordered vertex pairs."""
    dist = distance_matrix(g)
    hist: dict = {}
    for u, v in combinations(range(g.n), 2):
        hist[dist[u, v]] = hist.get(dist[u, v], 0) + 1
    return hist
