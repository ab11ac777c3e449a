"""Brute-force Turán-type and Zarankiewicz oracles.

These engines share no code with the visibility search; they work on plain
edge sets and 0/1 matrices.

Forbidden patterns live on four vertices. ``C4``, ``K4`` and ``K4MINUS`` are
forbidden as subgraphs. ``K4C4`` forbids ``K4`` as a subgraph and ``C4`` as an
*induced* subgraph, i.e. no 4-set whose edges are exactly a 4-cycle.
Forbidding C4 as a plain subgraph would already exclude K4 and collapse the
pair back to ex(n; C4).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .graphs import CeilingError, Graph, GraphError, bits


class ExtremalError(GraphError):
    pass


class ExtremalCeilingError(ExtremalError, CeilingError):
    pass


class ForbiddenPattern(enum.Enum):
    C4 = "c4"
    K4 = "k4"
    K4MINUS = "k4minus"
    K4C4 = "k4c4"

    @classmethod
    def parse(cls, text: str) -> "ForbiddenPattern":
        try:
            return cls(text.strip().lower().replace("-", "").replace("_", ""))
        except ValueError:
            raise ExtremalError(f"unknown forbidden pattern {text!r}") from None


MAX_N_SINGLE = 8
MAX_N_PAIR = 10

# The six vertex pairs of a 4-set {0,1,2,3}; a 6-bit config marks present edges.
_QUAD_PAIRS = tuple(combinations(range(4), 2))
_PERFECT_MATCHINGS = (
    ((0, 1), (2, 3)),
    ((0, 2), (1, 3)),
    ((0, 3), (1, 2)),
)


def _quad_table(pattern: ForbiddenPattern) -> tuple[bool, ...]:
    index = {p: i for i, p in enumerate(_QUAD_PAIRS)}
    table = []
    for config in range(64):
        edges = {p for p in _QUAD_PAIRS if config >> index[p] & 1}
        count = len(edges)
        degs = [sum(1 for p in edges if v in p) for v in range(4)]
        # 4-set carries a 4-cycle iff removing some perfect matching leaves edges covering C4
        has_c4 = any(all(p in edges for p in _QUAD_PAIRS if p not in pm) for pm in _PERFECT_MATCHINGS)
        if pattern is ForbiddenPattern.K4:
            bad = count == 6
        elif pattern is ForbiddenPattern.K4MINUS:
            bad = count >= 5
        elif pattern is ForbiddenPattern.C4:
            bad = has_c4
        else:
            bad = count == 6 or (count == 4 and degs == [2, 2, 2, 2])
        table.append(bad)
    return tuple(table)


QUAD_TABLES = {p: _quad_table(p) for p in ForbiddenPattern}


def _quad_config(adj, quad) -> int:
    config = 0
    for i, (a, b) in enumerate(_QUAD_PAIRS):
        if adj[quad[a]] >> quad[b] & 1:
            config |= 1 << i
    return config


def contains_pattern(g: Graph, pattern: ForbiddenPattern) -> bool:
    """Exact containment test, using neighbourhood intersections."""
    adj = g.adj
    if pattern is ForbiddenPattern.C4:
        return any((adj[u] & adj[v]).bit_count() >= 2 for u, v in combinations(range(g.n), 2))
    if pattern is ForbiddenPattern.K4MINUS:
        return any((adj[u] & adj[v]).bit_count() >= 2 for u, v in g.edges())
    has_k4 = False
    for u, v in g.edges():
        common = adj[u] & adj[v]
        if any(adj[w] & common for w in bits(common)):
            has_k4 = True
            break
    if pattern is ForbiddenPattern.K4 or has_k4:
        return has_k4
    for u, v in combinations(range(g.n), 2):
        if adj[u] >> v & 1:
            continue
        common = list(bits(adj[u] & adj[v]))
        if any(not adj[a] >> b & 1 for a, b in combinations(common, 2)):
            return True
    return False


def contains_pattern_bruteforce(g: Graph, pattern: ForbiddenPattern) -> bool:
    """Scan every 4-set against the configuration table."""
    table = QUAD_TABLES[pattern]
    return any(table[_quad_config(g.adj, q)] for q in combinations(range(g.n), 4))


def turan_edge_count(n: int, r: int) -> int:
    if r < 1:
        raise ExtremalError("turan_edge_count needs r >= 1")
    if n < 0:
        raise ExtremalError("turan_edge_count needs n >= 0")
    q, rem = divmod(n, r)
    sizes = [q + 1] * rem + [q] * (r - rem)
    return (n * n - sum(s * s for s in sizes)) // 2


@dataclass(frozen=True)
class ExtremalResult:
    max_edges: int
    witness: Graph
    certified: bool = True

    def to_json(self) -> dict:
        from .io import to_graph6

        return {"max_edges": self.max_edges, "witness_graph6": to_graph6(self.witness), "certified": self.certified}


def _ceiling(pattern: ForbiddenPattern) -> int:
    return MAX_N_PAIR if pattern is ForbiddenPattern.K4C4 else MAX_N_SINGLE


def ex_forbidden(n: int, pattern: ForbiddenPattern | str, ceiling: int | None = None) -> ExtremalResult:
    """Maximum edges of an n-vertex graph avoiding ``pattern``."""
    if isinstance(pattern, str):
        pattern = ForbiddenPattern.parse(pattern)
    limit = _ceiling(pattern) if ceiling is None else ceiling
    if n < 1:
        raise ExtremalError(f"ex_forbidden needs n >= 1, got {n}")
    if n > limit:
        raise ExtremalCeilingError(f"ex_forbidden supports 1 <= n <= {limit} for {pattern.value}, got {n}")
    edges, rows = _ex_search(n, pattern)
    return ExtremalResult(edges, Graph(n, rows))


@lru_cache(maxsize=None)
def _ex_search(n: int, pattern: ForbiddenPattern) -> tuple[int, tuple[int, ...]]:
    if n <= 3:
        # every pattern needs four vertices
        return n * (n - 1) // 2, tuple(((1 << n) - 1) ^ (1 << v) for v in range(n))
    prev_edges, prev_rows = _ex_search(n - 1, pattern)
    return _EdgeSearch(n, pattern, prev_edges, prev_rows).run()


class _EdgeSearch:
    """Edge-by-edge branch and bound over K_n's edges in colex order.

    Edge ``(a, d)`` with ``a < d`` is decided after all edges inside
    ``{0..d-1}`` and all ``(a', d)`` with ``a' < a``; the 4-sets
    ``{x, y, a, d}`` with ``x < y < a`` become fully decided at that moment and
    are checked against the pattern table, which works for induced patterns
    as well as monotone ones.

    Symmetry: vertex 0 is taken to have maximum degree ``k`` with neighbours
    ``1..k``; every other degree is capped at ``k``. Any graph with at least
    ``target`` edges also has minimum degree at least ``target - ex(n-1)``.
    """

    def __init__(self, n: int, pattern: ForbiddenPattern, prev_edges: int, prev_rows):
        self.n = n
        self.table = QUAD_TABLES[pattern]
        self.prev_edges = prev_edges
        self.best = prev_edges  # add an isolated vertex to the (n-1)-extremal graph
        self.best_rows = tuple(prev_rows) + (0,)
        self.order = [(a, d) for d in range(1, n) for a in range(d)]
        greedy_edges, greedy_rows = self._greedy()
        if greedy_edges > self.best:
            self.best, self.best_rows = greedy_edges, greedy_rows

    def _quads_ok(self, adj, a: int, d: int) -> bool:
        table = self.table
        for x, y in combinations(range(a), 2):
            if table[_quad_config(adj, (x, y, a, d))]:
                return False
        return True

    def _greedy(self):
        adj = [0] * self.n
        count = 0
        for a, d in self.order:
            adj[a] |= 1 << d
            adj[d] |= 1 << a
            if self._quads_ok(adj, a, d):
                count += 1
            else:
                adj[a] &= ~(1 << d)
                adj[d] &= ~(1 << a)
                # a missing edge can complete an induced pattern too
                if not self._quads_ok(adj, a, d):
                    return -1, ()
        return count, tuple(adj)

    def run(self):
        n = self.n
        for k in range(n - 1, 0, -1):
            if n * k // 2 <= self.best:
                break
            self.k = k
            self.min_deg = self.best + 1 - self.prev_edges
            if self.min_deg > k:
                continue
            adj = [0] * n
            deg = [0] * n
            for v in range(1, k + 1):
                adj[0] |= 1 << v
                adj[v] |= 1
                deg[v] = 1
            deg[0] = k
            # remaining undecided edges at each vertex (edges at 0 are fixed)
            undecided = [0] + [n - 2] * (n - 1)
            # edges (0, d) are fixed; first free edge is (1, 2)
            start = self.order.index((1, 2)) if n > 2 else len(self.order)
            self._dfs(start, adj, deg, undecided, k)
        return self.best, self.best_rows

    def _dfs(self, i: int, adj, deg, undecided, edges: int):
        order = self.order
        if i == len(order):
            if edges > self.best:
                self.best = edges
                self.best_rows = tuple(adj)
                self.min_deg = self.best + 1 - self.prev_edges
            return
        # degree-capped upper bound on what the remaining edges can add
        room = 0
        for v in range(self.n):
            room += min(self.k - deg[v], undecided[v])
        if edges + room // 2 <= self.best:
            return
        a, d = order[i]
        if a == 0:  # fixed by the symmetry choice
            self._dfs(i + 1, adj, deg, undecided, edges)
            return
        undecided[a] -= 1
        undecided[d] -= 1
        if deg[a] < self.k and deg[d] < self.k:
            adj[a] |= 1 << d
            adj[d] |= 1 << a
            deg[a] += 1
            deg[d] += 1
            if self._quads_ok(adj, a, d):
                self._dfs(i + 1, adj, deg, undecided, edges + 1)
            adj[a] &= ~(1 << d)
            adj[d] &= ~(1 << a)
            deg[a] -= 1
            deg[d] -= 1
        if deg[a] + undecided[a] >= self.min_deg and deg[d] + undecided[d] >= self.min_deg:
            if self._quads_ok(adj, a, d):
                self._dfs(i + 1, adj, deg, undecided, edges)
        undecided[a] += 1
        undecided[d] += 1


def ex_bruteforce(n: int, pattern: ForbiddenPattern) -> int:
    """Scan all 2^C(n,2) labelled graphs; only for tiny n."""
    if n > 6:
        raise ExtremalError("ex_bruteforce is limited to n <= 6")
    pairs = list(combinations(range(n), 2))
    best = 0
    for mask in range(1 << len(pairs)):
        count = mask.bit_count()
        if count <= best:
            continue
        g = Graph.from_edges(n, [p for i, p in enumerate(pairs) if mask >> i & 1])
        if not contains_pattern_bruteforce(g, pattern):
            best = count
    return best


# ------------------------------------------------------------- Zarankiewicz

@dataclass(frozen=True)
class ZarankiewiczResult:
    max_ones: int
    rows: tuple[str, ...]  # witness matrix, one 0/1 string per row
    certified: bool = True

    def to_json(self) -> dict:
        return {"max_ones": self.max_ones, "matrix": list(self.rows), "certified": self.certified}


def zarankiewicz(m: int, n: int) -> ZarankiewiczResult:
    """z(m, n; 2, 2) by row-by-row branch and bound.

    Rows are column masks; two rows may share at most one column. Row
    permutations are factored out by requiring non-increasing row masks.
    """
    if min(m, n) < 2:
        raise ExtremalError(f"zarankiewicz needs m, n >= 2, got ({m}, {n})")
    if max(m, n) > 6:
        raise ExtremalCeilingError(f"zarankiewicz supports 2 <= m, n <= 6, got ({m}, {n})")
    masks = list(range((1 << n) - 1, -1, -1))
    # most ones any row mask <= prev can carry
    max_pop = [0] * (1 << n)
    for r in range(1 << n):
        max_pop[r] = max(r.bit_count(), max_pop[r - 1] if r else 0)
    best = [-1, ()]

    def rec(rows, ones, prev):
        left = m - len(rows)
        if left == 0:
            if ones > best[0]:
                best[0], best[1] = ones, tuple(rows)
            return
        if ones + left * max_pop[prev] <= best[0]:
            return
        for r in masks:
            if r > prev:
                continue
            if ones + left * max_pop[r] <= best[0]:
                return
            if all((r & s).bit_count() <= 1 for s in rows):
                rows.append(r)
                rec(rows, ones + r.bit_count(), r)
                rows.pop()

    rec([], 0, (1 << n) - 1)
    text = tuple(format(r, f"0{n}b")[::-1] for r in best[1])
    return ZarankiewiczResult(best[0], text)


def zarankiewicz_bruteforce(m: int, n: int) -> int:
    """All 2^(mn) matrices; only for tiny sizes."""
    if m * n > 16:
        raise ExtremalError("zarankiewicz_bruteforce is limited to m*n <= 16")
    best = 0
    for mat in range(1 << (m * n)):
        rows = [(mat >> (i * n)) & ((1 << n) - 1) for i in range(m)]
        if all((a & b).bit_count() <= 1 for a, b in combinations(rows, 2)):
            best = max(best, mat.bit_count())
    return best
