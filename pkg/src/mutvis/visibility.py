"""X-visibility and the four mutual-visibility verifiers.

Two vertices are X-visible when some shortest path between them has no
interior vertex in X. Which vertex pairs must be X-visible depends on the
variant:

========  ===========================================
Mutual    pairs inside X
Outer     pairs inside X, pairs between X and V - X
Dual      pairs inside X, pairs inside V - X
Total     all pairs
========  ===========================================
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Iterator

from .graphs import INF, DistanceMatrix, Graph, GraphError, bits, distance_matrix, mask_of


class Variant(enum.Enum):
    MUTUAL = "mutual"
    OUTER = "outer"
    DUAL = "dual"
    TOTAL = "total"

    @classmethod
    def parse(cls, text: str) -> "Variant":
        key = text.strip().lower()
        aliases = {"mu": "mutual", "m": "mutual", "o": "outer", "d": "dual", "t": "total"}
        try:
            return cls(aliases.get(key, key))
        except ValueError:
            raise ValueError(f"unknown variant {text!r}") from None


ALL_VARIANTS = (Variant.MUTUAL, Variant.OUTER, Variant.DUAL, Variant.TOTAL)

IN_IN = "X-X"
IN_OUT = "X-complement"
OUT_OUT = "complement-complement"

REQUIRED = {
    Variant.MUTUAL: frozenset({IN_IN}),
    Variant.OUTER: frozenset({IN_IN, IN_OUT}),
    Variant.DUAL: frozenset({IN_IN, OUT_OUT}),
    Variant.TOTAL: frozenset({IN_IN, IN_OUT, OUT_OUT}),
}

# Supersets of X keep every X-X pair of X required, so failures there persist.
HEREDITARY = frozenset({Variant.MUTUAL, Variant.OUTER, Variant.TOTAL})


class VisibilityError(GraphError):
    pass


@dataclass(frozen=True)
class VertexSet:
    """A subset of ``range(n)`` stored as a bitmask."""

    n: int
    mask: int = 0

    def __post_init__(self):
        if self.mask < 0 or self.mask >> self.n:
            raise VisibilityError(f"vertex set has members outside [0, {self.n})")

    @classmethod
    def of(cls, n: int, vertices: Iterable[int]) -> "VertexSet":
        vertices = list(vertices)
        for v in vertices:
            if not 0 <= v < n:
                raise VisibilityError(f"vertex {v} outside [0, {n})")
        return cls(n, mask_of(vertices))

    def __iter__(self) -> Iterator[int]:
        return bits(self.mask)

    def __len__(self):
        return self.mask.bit_count()

    def __contains__(self, v):
        return bool(self.mask >> v & 1)

    def complement(self) -> "VertexSet":
        return VertexSet(self.n, ((1 << self.n) - 1) & ~self.mask)

    def without(self, v: int) -> "VertexSet":
        return VertexSet(self.n, self.mask & ~(1 << v))

    def to_list(self) -> list[int]:
        return list(self)

    def __repr__(self):
        return f"VertexSet({self.to_list()})"


def as_mask(x, n: int) -> int:
    if isinstance(x, VertexSet):
        if x.n != n:
            raise VisibilityError(f"vertex set over n={x.n} used with a graph of order {n}")
        return x.mask
    if isinstance(x, int):
        if x < 0 or x >> n:
            raise VisibilityError("vertex mask out of range")
        return x
    return VertexSet.of(n, x).mask


def pair_class(x_mask: int, u: int, v: int) -> str:
    inside = (x_mask >> u & 1) + (x_mask >> v & 1)
    return (OUT_OUT, IN_OUT, IN_IN)[inside]


@dataclass(frozen=True)
class VisibilityReport:
    valid: bool
    failing_pair: tuple[int, int] | None = None
    pair_class: str | None = None

    def __post_init__(self):
        if not self.valid and self.failing_pair is None:
            raise ValueError("an invalid report needs a failing pair")

    def __bool__(self):
        return self.valid

    def to_json(self) -> dict:
        return {
            "valid": self.valid,
            "failing_pair": list(self.failing_pair) if self.failing_pair else None,
            "pair_class": self.pair_class,
        }


class VisibilityContext:
    """Per-graph precomputation shared by verifiers and the solver.

    ``far[u]`` lists ``(v, common)`` for every ``v > u`` at distance at least
    two; ``common`` is the common-neighbourhood mask for distance-2 pairs and
    ``None`` for longer geodesics, which fall back to a restricted BFS.
    """

    def __init__(self, g: Graph, dist: DistanceMatrix | None = None, method: str = "auto"):
        if method not in ("auto", "bfs"):
            raise ValueError(f"unknown visibility method {method!r}")
        self.g = g
        self.n = g.n
        self.adj = g.adj
        self.dist = dist if dist is not None else distance_matrix(g)
        self.method = method
        self.connected = all(self.dist[0, v] != INF for v in range(g.n)) if g.n else True
        self.diameter = max((max(self.dist.row(u)) for u in range(g.n)), default=0)
        far = []
        for u in range(g.n):
            row = []
            for v in range(u + 1, g.n):
                d = self.dist[u, v]
                if d >= 2:
                    common = g.adj[u] & g.adj[v] if (d == 2 and method == "auto") else None
                    row.append((v, common))
            far.append(row)
        self.far = far
        # both directions, for variants that need every pair touching a vertex
        around = [[] for _ in range(g.n)]
        for u in range(g.n):
            for v, common in far[u]:
                around[u].append((v, common))
                around[v].append((u, common))
        self.around = around
        self._interval: dict = {}

    # -- single pair -------------------------------------------------------
    def interval(self, u: int, v: int) -> int:
        """Mask of vertices lying on some shortest u,v-path (endpoints excluded)."""
        key = (u, v) if u < v else (v, u)
        got = self._interval.get(key)
        if got is None:
            d = self.dist[u, v]
            ru, rv = self.dist.row(u), self.dist.row(v)
            got = mask_of(w for w in range(self.n) if w not in key and ru[w] + rv[w] == d)
            self._interval[key] = got
        return got

    def visible_bfs(self, u: int, v: int, blocked: int) -> bool:
        """Shortest-path search restricted to ``(V - blocked) + {u, v}``."""
        d = self.dist[u, v]
        if d == INF:
            raise VisibilityError(f"vertices {u} and {v} are in different components")
        if d <= 1:
            return True
        allowed = self.interval(u, v) & ~blocked
        frontier = 1 << u
        for _ in range(d - 1):
            nxt = 0
            for w in bits(frontier):
                nxt |= self.adj[w]
            frontier = nxt & allowed
            if not frontier:
                return False
        for w in bits(frontier):
            if self.adj[w] >> v & 1:
                return True
        return False

    def visible_common(self, u: int, v: int, blocked: int) -> bool:
        """Distance-2 shortcut: some common neighbour lies outside ``blocked``."""
        return bool(self.adj[u] & self.adj[v] & ~blocked)

    def visible(self, u: int, v: int, blocked: int) -> bool:
        d = self.dist[u, v]
        if d == 2 and self.method == "auto":
            return self.visible_common(u, v, blocked)
        return self.visible_bfs(u, v, blocked)

    def pair_ok(self, u: int, v: int, common, blocked: int) -> bool:
        if common is not None:
            return bool(common & ~blocked)
        return self.visible_bfs(u, v, blocked)

    # -- whole sets --------------------------------------------------------
    def first_failure(self, x: int, variant: Variant):
        """Lexicographically smallest required pair that is not X-visible."""
        required = REQUIRED[variant]
        for u in range(self.n):
            u_in = x >> u & 1
            if not u_in and variant is Variant.MUTUAL:
                continue
            for v, common in self.far[u]:
                cls = (OUT_OUT, IN_OUT, IN_IN)[u_in + (x >> v & 1)]
                if cls in required and not self.pair_ok(u, v, common, x):
                    return (u, v), cls
        return None

    def is_valid(self, x: int, variant: Variant) -> bool:
        """Same answer as :meth:`first_failure` is None, with cheaper scans."""
        pair_ok = self.pair_ok
        if variant is Variant.MUTUAL:
            for u in bits(x):
                for v, common in self.far[u]:
                    if x >> v & 1 and not pair_ok(u, v, common, x):
                        return False
            return True
        if variant is Variant.OUTER:
            for u in bits(x):
                for v, common in self.around[u]:
                    if not pair_ok(u, v, common, x):
                        return False
            return True
        if variant is Variant.TOTAL:
            for u in range(self.n):
                for v, common in self.far[u]:
                    if not pair_ok(u, v, common, x):
                        return False
            return True
        for u in range(self.n):
            u_in = x >> u & 1
            for v, common in self.far[u]:
                if (x >> v & 1) == u_in and not pair_ok(u, v, common, x):
                    return False
        return True


@lru_cache(maxsize=64)
def context_for(g: Graph, method: str = "auto") -> VisibilityContext:
    return VisibilityContext(g, method=method)


def _context(g: Graph, dist: DistanceMatrix | None, method: str = "auto") -> VisibilityContext:
    if dist is None:
        return context_for(g, method)
    return VisibilityContext(g, dist, method)


def x_visible(g: Graph, dist: DistanceMatrix | None, x, u: int, v: int, method: str = "auto") -> bool:
    if u == v:
        raise VisibilityError("x_visible needs two distinct vertices")
    ctx = _context(g, dist, method)
    return ctx.visible(u, v, as_mask(x, g.n))


def required_pairs(variant: Variant, x, n: int) -> Iterator[tuple[int, int]]:
    """Unordered pairs that must be X-visible, in lexicographic order."""
    x = as_mask(x, n)
    required = REQUIRED[variant]
    for u, v in combinations(range(n), 2):
        if pair_class(x, u, v) in required:
            yield (u, v)


def verify(g: Graph, dist: DistanceMatrix | None, x, variant: Variant, method: str = "auto") -> VisibilityReport:
    ctx = _context(g, dist, method)
    if not ctx.connected:
        raise VisibilityError("visibility sets are only defined on connected graphs")
    found = ctx.first_failure(as_mask(x, g.n), variant)
    if found is None:
        return VisibilityReport(True)
    pair, cls = found
    return VisibilityReport(False, pair, cls)


def is_valid(g: Graph, x, variant: Variant) -> bool:
    return verify(g, None, x, variant).valid


def is_independent(g: Graph, x) -> bool:
    x = as_mask(x, g.n)
    return all(not (g.adj[v] & x) for v in bits(x))


def _normalise_edges(n: int, edges) -> set[tuple[int, int]]:
    out = set()
    for u, v in edges:
        if u == v or not (0 <= u < n and 0 <= v < n):
            raise VisibilityError(f"({u}, {v}) is not an edge of K_{n}")
        out.add((min(u, v), max(u, v)))
    return out


def verify_line_complete(n: int, f, variant: Variant) -> VisibilityReport:
    """Verify S_F in L(K_n) working on the edges of K_n only.

    Line-graph vertex ``i`` is the ``i``-th edge of K_n in lexicographic order,
    as produced by ``line_graph(complete(n))``. Two disjoint edges ``uv`` and
    ``u'v'`` are S_F-visible exactly when one of the four edges joining them
    lies outside F; incident edges are adjacent in L(K_n).
    """
    if n < 3:
        raise VisibilityError("verify_line_complete needs n >= 3")
    f = _normalise_edges(n, f)
    edges = list(combinations(range(n), 2))
    in_f = [e in f for e in edges]
    required = REQUIRED[variant]
    for i, j in combinations(range(len(edges)), 2):
        (a, b), (c, d) = edges[i], edges[j]
        if len({a, b, c, d}) < 4:
            continue
        cls = (OUT_OUT, IN_OUT, IN_IN)[in_f[i] + in_f[j]]
        if cls not in required:
            continue
        cross = ((min(p, q), max(p, q)) for p in (a, b) for q in (c, d))
        if all(e in f for e in cross):
            return VisibilityReport(False, (i, j), cls)
    return VisibilityReport(True)
