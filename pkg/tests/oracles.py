"""Definition-level reference checks, written independently of the library."""

from collections import deque
from itertools import combinations


def neighbours(g):
    return [[v for v in range(g.n) if g.adj[u] >> v & 1] for u in range(g.n)]


def bfs_dist(nbrs, source, allowed):
    dist = {source: 0}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in nbrs[u]:
            if w in allowed and w not in dist:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def visible(g, x: set, u: int, v: int) -> bool:
    """Some shortest u,v-path has no interior vertex in x."""
    nbrs = neighbours(g)
    full = bfs_dist(nbrs, u, set(range(g.n)))
    allowed = (set(range(g.n)) - x) | {u, v}
    restricted = bfs_dist(nbrs, u, allowed)
    return restricted.get(v) == full[v]


def needed(variant: str, x: set, u: int, v: int) -> bool:
    inside = (u in x) + (v in x)
    return {
        "mutual": inside == 2,
        "outer": inside >= 1,
        "dual": inside != 1,
        "total": True,
    }[variant]


def valid(g, x, variant: str) -> bool:
    x = set(x)
    return all(visible(g, x, u, v) for u, v in combinations(range(g.n), 2) if needed(variant, x, u, v))


def max_size(g, variant: str) -> int:
    for k in range(g.n, -1, -1):
        if any(valid(g, c, variant) for c in combinations(range(g.n), k)):
            return k
    raise AssertionError("the empty set is always valid on a connected graph")
