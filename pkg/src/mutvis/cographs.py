"""Cograph recognition and the big-mu classification.

A big-mu graph has the shape ``(K1 u Kt) + H``. A connected cograph that is
big-mu and has no universal vertex has ``mu = mu_d = n - 1`` and
``mu_t = mu_o = n - 2``; every other connected cograph has all four numbers
equal, and that common value comes from the exact solver.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations

from .graphs import Graph, GraphError, bits, has_universal_vertex, is_connected
from .solver import max_visibility
from .visibility import Variant


@dataclass(frozen=True)
class BigMuDecomposition:
    v: int
    t: int
    clique: tuple[int, ...]
    h_vertices: tuple[int, ...]

    def to_json(self) -> dict:
        return {"v": self.v, "t": self.t, "clique": list(self.clique), "H": list(self.h_vertices)}


def find_induced_p4(g: Graph):
    """Return an induced path ``(a, b, c, d)`` or None."""
    adj = g.adj
    for b, c in g.edges():
        for x, y in ((b, c), (c, b)):
            ends_a = adj[x] & ~adj[y] & ~(1 << y)
            ends_d = adj[y] & ~adj[x] & ~(1 << x)
            for a in bits(ends_a):
                d_choices = ends_d & ~adj[a] & ~(1 << a)
                if d_choices:
                    d = (d_choices & -d_choices).bit_length() - 1
                    return (a, x, y, d)
    return None


def is_cograph(g: Graph) -> bool:
    return find_induced_p4(g) is None


def is_cograph_quadruples(g: Graph) -> bool:
    """Reference check: scan all 4-sets for an induced P4 (3 edges, degrees 1,1,2,2)."""
    for quad in combinations(range(g.n), 4):
        degs = sorted((g.adj[v] & sum(1 << u for u in quad)).bit_count() for v in quad)
        if degs == [1, 1, 2, 2]:
            return False
    return True


def is_enabling(g: Graph, v: int) -> bool:
    """``v`` is adjacent to every u with deg_{G-v}(u) < n - 2."""
    n = g.n
    for u in range(n):
        if u == v:
            continue
        deg_without_v = g.degree(u) - (g.adj[u] >> v & 1)
        if deg_without_v < n - 2 and not g.adj[v] >> u & 1:
            return False
    return True


def find_enabling_vertex(g: Graph) -> int | None:
    return next((v for v in range(g.n) if is_enabling(g, v)), None)


def big_mu_decompose(g: Graph) -> BigMuDecomposition | None:
    v = find_enabling_vertex(g)
    if v is None:
        return None
    h = g.adj[v]
    rest = g.full_mask & ~h & ~(1 << v)
    for u in bits(rest):
        if (g.adj[u] | (1 << u)) & rest != rest:
            raise AssertionError("K_t part is not a clique")
        if g.adj[u] & h != h:
            raise AssertionError("K_t part is not fully joined to H")
    return BigMuDecomposition(v, rest.bit_count(), tuple(bits(rest)), tuple(bits(h)))


def has_big_mu_gap(g: Graph) -> bool:
    """Big-mu with no universal vertex: the regime where mu exceeds mu_t."""
    return big_mu_decompose(g) is not None and not has_universal_vertex(g)


def cograph_visibility_numbers(g: Graph) -> dict[Variant, int]:
    if not is_cograph(g):
        raise GraphError("cograph_visibility_numbers needs a cograph")
    if not is_connected(g):
        raise GraphError("cograph_visibility_numbers needs a connected graph")
    n = g.n
    if has_big_mu_gap(g):
        return {Variant.TOTAL: n - 2, Variant.OUTER: n - 2, Variant.DUAL: n - 1, Variant.MUTUAL: n - 1}
    value = max_visibility(g, Variant.MUTUAL).value
    return {v: value for v in (Variant.TOTAL, Variant.OUTER, Variant.DUAL, Variant.MUTUAL)}


def random_cotree_cograph(n: int, rng: random.Random) -> Graph:
    """Connected cograph from a uniformly random binary cotree with ``n`` leaves.

    Tree shapes come from Remy's algorithm; internal nodes are join or union
    with equal odds. Draws whose root is a union (disconnected) are redrawn.
    """
    if n < 1:
        raise GraphError("need at least one leaf")
    while True:
        g = _random_cotree(n, rng)
        if is_connected(g):
            return g


def _random_cotree(n: int, rng: random.Random) -> Graph:
    from .graphs import complete, disjoint_union, join

    # children[i] is None for leaves, else (left, right)
    children: list = [None]
    parent = [-1]
    root = 0
    while len(children) < 2 * n - 1:
        pick = rng.randrange(len(children))
        leaf = len(children)
        inner = leaf + 1
        children.append(None)
        parent.append(inner)
        pair = (pick, leaf) if rng.random() < 0.5 else (leaf, pick)
        children.append(pair)
        parent.append(parent[pick])
        if parent[pick] == -1:
            root = inner
        else:
            a, b = children[parent[pick]]
            children[parent[pick]] = (inner, b) if a == pick else (a, inner)
        parent[pick] = inner

    def build(node):
        if children[node] is None:
            return complete(1)
        a, b = children[node]
        ga, gb = build(a), build(b)
        return join(ga, gb) if rng.random() < 0.5 else disjoint_union(ga, gb)

    return build(root)
