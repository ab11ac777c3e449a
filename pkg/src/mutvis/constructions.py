"""Closed-form witnesses for extremal visibility sets.

Every builder checks its own output with the matching verifier and raises
``ConstructionError`` rather than return an invalid set.
"""

from __future__ import annotations

from itertools import combinations

from . import graphs
from .extremal import turan_edge_count
from .genlang import C5Fam, G7Fam, GraphExpr, evaluate, parse_spec
from .graphs import Graph, GraphError, bits, mask_of
from .solver import max_visibility
from .visibility import ALL_VARIANTS, Variant, VertexSet, verify, verify_line_complete


class ConstructionError(GraphError):
    pass


def _checked(g: Graph, x: VertexSet, variant: Variant, what: str) -> VertexSet:
    report = verify(g, None, x, variant)
    if not report.valid:
        raise ConstructionError(f"{what}: {variant.value} check failed at pair {report.failing_pair}")
    return x


def _checked_edges(n: int, f: list[tuple[int, int]], variant: Variant, what: str) -> list[tuple[int, int]]:
    report = verify_line_complete(n, f, variant)
    if not report.valid:
        raise ConstructionError(f"{what}: {variant.value} check failed at pair {report.failing_pair}")
    return f


# ------------------------------------------------------- products of cliques

def clique_product_host(n: int, m: int, kind: str = "cartesian") -> Graph:
    """K_n x K_m with vertex ``(i, j)`` at index ``i * m + j``."""
    product = {"cartesian": graphs.cartesian_product, "direct": graphs.direct_product}[kind]
    return product(graphs.complete(n), graphs.complete(m))


def _require(cond: bool, message: str):
    if not cond:
        raise ConstructionError(message)


def dual_set_cartesian_cliques(n: int, m: int) -> VertexSet:
    """First row plus first column of the n x m grid: n + m - 1 vertices."""
    _require(n >= 3 and m >= 3, "dual_set_cartesian_cliques needs n, m >= 3")
    g = clique_product_host(n, m)
    x = VertexSet.of(g.n, [i * m for i in range(n)] + list(range(1, m)))
    return _checked(g, x, Variant.DUAL, f"dual set of K{n}xK{m}")


def outer_set_cartesian_cliques(n: int, m: int) -> VertexSet:
    """First row and column without their corner: n + m - 2 vertices."""
    _require(n >= 3 and m >= 3, "outer_set_cartesian_cliques needs n, m >= 3")
    g = clique_product_host(n, m)
    x = VertexSet.of(g.n, [i * m for i in range(1, n)] + list(range(1, m)))
    return _checked(g, x, Variant.OUTER, f"outer set of K{n}xK{m}")


def total_set_direct_cliques(n: int, m: int) -> VertexSet:
    """Everything except the first four diagonal vertices: nm - 4 vertices."""
    _require(n >= 5 and m >= 5, "total_set_direct_cliques needs n, m >= 5")
    g = clique_product_host(n, m, "direct")
    diagonal = mask_of(k * m + k for k in range(4))
    x = VertexSet(g.n, g.full_mask & ~diagonal)
    return _checked(g, x, Variant.TOTAL, f"total set of K{n}xK{m} (direct)")


# ------------------------------------------------- line graph of K_n, as F

def line_vertices(n: int, f) -> VertexSet:
    """Map an edge set of K_n to vertex indices of ``line_graph(complete(n))``."""
    index = {e: i for i, e in enumerate(combinations(range(n), 2))}
    return VertexSet.of(n * (n - 1) // 2, sorted(index[(min(e), max(e))] for e in f))


def mu_set_line_complete(n: int) -> list[tuple[int, int]]:
    """Edges of the balanced complete tripartite graph, vertex v in part v mod 3."""
    _require(n >= 3, "mu_set_line_complete needs n >= 3")
    f = [(u, v) for u, v in combinations(range(n), 2) if u % 3 != v % 3]
    _require(len(f) == turan_edge_count(n, 3), "tripartition edge count mismatch")
    return _checked_edges(n, f, Variant.MUTUAL, f"mutual set of L(K{n})")


def total_set_line_complete(n: int) -> list[tuple[int, int]]:
    """Star at vertex 0 plus the matching {1,2}, {3,4}, ... on the rest."""
    _require(n >= 3, "total_set_line_complete needs n >= 3")
    star = [(0, v) for v in range(1, n)]
    matching = [(v, v + 1) for v in range(1, n - 1, 2)]
    f = star + matching
    _require(len(f) == n - 1 + (n - 1) // 2, "star plus matching has the wrong size")
    return _checked_edges(n, f, Variant.TOTAL, f"total set of L(K{n})")


LK10_TOTAL_EDGES = (
    (0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (8, 9), (0, 9),
    (0, 4), (1, 9), (2, 6), (3, 8), (5, 7), (7, 9),
)


def total_witness_LK10() -> list[tuple[int, int]]:
    """A 16-edge total set of L(K10), beating the star-plus-matching 13."""
    return _checked_edges(10, list(LK10_TOTAL_EDGES), Variant.TOTAL, "L(K10) witness")


# ------------------------------------------------------------------ cographs

def _as_graph(expr) -> Graph:
    if isinstance(expr, Graph):
        return expr
    if isinstance(expr, str):
        expr = parse_spec(expr)
    return evaluate(expr)


def cograph_witnesses(expr: GraphExpr | Graph | str) -> dict[Variant, VertexSet]:
    """Witnesses whose sizes match :func:`cograph_visibility_numbers`.

    In the gap regime the dual and mutual sets drop the K1 vertex and the
    total and outer sets also drop one vertex of H. Otherwise a maximum total
    set from the solver serves every variant.
    """
    from .cographs import big_mu_decompose, has_big_mu_gap, is_cograph

    g = _as_graph(expr)
    if not is_cograph(g):
        raise ConstructionError("cograph_witnesses needs a cograph")
    if not graphs.is_connected(g):
        raise ConstructionError("cograph_witnesses needs a connected graph")
    if has_big_mu_gap(g):
        dec = big_mu_decompose(g)
        big = VertexSet(g.n, g.full_mask & ~(1 << dec.v))
        small = big.without(dec.h_vertices[0])
        out = {Variant.MUTUAL: big, Variant.DUAL: big, Variant.OUTER: small, Variant.TOTAL: small}
    else:
        shared = max_visibility(g, Variant.TOTAL).witness
        out = {v: shared for v in ALL_VARIANTS}
    return {v: _checked(g, x, v, f"cograph {v.value} witness") for v, x in out.items()}


# ------------------------------------------------------------- family G

def c5_family_formulas(i: int, j: int) -> dict[Variant, int]:
    s = i + j
    return {Variant.TOTAL: s, Variant.OUTER: s + 2, Variant.DUAL: s + 2, Variant.MUTUAL: s + 3}


def g7_family_formulas(i: int, j: int, k: int) -> dict[Variant, int]:
    s = i + j + k
    dual = 3 if s == 0 else s + 2
    return {Variant.TOTAL: s, Variant.OUTER: s + 3, Variant.DUAL: dual, Variant.MUTUAL: s + 4}


def _family_parts(kind) -> tuple[Graph, Graph, dict[Variant, int]]:
    if isinstance(kind, str):
        kind = parse_spec(kind)
    if isinstance(kind, C5Fam):
        return graphs.cycle(5), graphs.c5_family(kind.i, kind.j), c5_family_formulas(kind.i, kind.j)
    if isinstance(kind, G7Fam):
        return (
            graphs.g7_family(0, 0, 0),
            graphs.g7_family(kind.i, kind.j, kind.k),
            g7_family_formulas(kind.i, kind.j, kind.k),
        )
    raise ConstructionError("family_witnesses takes c5(i,j) or g7(i,j,k)")


def family_witnesses(kind: C5Fam | G7Fam | str) -> dict[Variant, VertexSet]:
    """Base-graph set plus every duplicated vertex, sized to the closed formula.

    For each variant the base part is the first subset of the base graph (in
    colex order, preferring subsets that are valid in the base graph itself)
    of size ``formula - duplicates`` that verifies once all duplicates join it.
    """
    base, g, formulas = _family_parts(kind)
    dups = g.full_mask & ~base.full_mask
    n_dups = dups.bit_count()
    out = {}
    for variant in ALL_VARIANTS:
        size = formulas[variant] - n_dups
        if size < 0:
            raise ConstructionError(f"{variant.value} formula is below the duplicate count")
        subsets = [mask_of(c) for c in combinations(range(base.n), size)]
        subsets.sort(key=lambda s: (not verify(base, None, s, variant).valid, _colex_key(s)))
        for w in subsets:
            x = VertexSet(g.n, w | dups)
            if verify(g, None, x, variant).valid:
                out[variant] = x
                break
        else:
            raise ConstructionError(f"no {variant.value} witness of size {formulas[variant]}")
    return out


def _colex_key(mask: int) -> tuple[int, ...]:
    return tuple(sorted(bits(mask), reverse=True))
