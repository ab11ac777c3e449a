import pytest

from mutvis import constructions as C
from mutvis import graphs as G
from mutvis.extremal import turan_edge_count
from mutvis.genlang import build
from mutvis.solver import max_visibility, visibility_numbers
from mutvis.visibility import ALL_VARIANTS, Variant, verify, verify_line_complete

M, O, D, T = Variant.MUTUAL, Variant.OUTER, Variant.DUAL, Variant.TOTAL
GRID = [(n, m) for n in range(3, 8) for m in range(3, 8)]


@pytest.mark.parametrize("n,m", GRID)
def test_cartesian_builders(n, m):
    host = C.clique_product_host(n, m)
    dual = C.dual_set_cartesian_cliques(n, m)
    outer = C.outer_set_cartesian_cliques(n, m)
    assert len(dual) == n + m - 1 and verify(host, None, dual, D).valid
    assert len(outer) == n + m - 2 and verify(host, None, outer, O).valid


def test_cartesian_builder_labels():
    host = C.clique_product_host(3, 3)
    labels = {host.label(v) for v in C.dual_set_cartesian_cliques(3, 3)}
    assert labels == {"(0,0)", "(1,0)", "(2,0)", "(0,1)", "(0,2)"}
    assert "(0,0)" not in {host.label(v) for v in C.outer_set_cartesian_cliques(3, 3)}


@pytest.mark.parametrize("n,m", [(n, m) for n in range(5, 8) for m in range(5, 8)])
def test_direct_builder(n, m):
    x = C.total_set_direct_cliques(n, m)
    assert len(x) == n * m - 4
    assert verify(C.clique_product_host(n, m, "direct"), None, x, T).valid


def test_builder_preconditions():
    for call in (
        lambda: C.dual_set_cartesian_cliques(2, 5),
        lambda: C.outer_set_cartesian_cliques(3, 2),
        lambda: C.total_set_direct_cliques(4, 5),
        lambda: C.mu_set_line_complete(2),
        lambda: C.total_set_line_complete(2),
    ):
        with pytest.raises(C.ConstructionError):
            call()


@pytest.mark.parametrize("n", range(3, 11))
def test_line_builders(n):
    f = C.mu_set_line_complete(n)
    assert len(f) == turan_edge_count(n, 3) and verify_line_complete(n, f, M).valid
    t = C.total_set_line_complete(n)
    assert len(t) == n - 1 + (n - 1) // 2 and verify_line_complete(n, t, T).valid


def test_line_builder_examples():
    assert len(C.mu_set_line_complete(5)) == 8
    assert len(C.mu_set_line_complete(6)) == 12
    assert len(C.mu_set_line_complete(3)) == 3
    assert [len(C.total_set_line_complete(n)) for n in (5, 7, 10)] == [6, 9, 13]


def test_line_builders_on_the_line_graph():
    for n in (4, 5, 6):
        host, _ = G.line_graph(G.complete(n))
        assert verify(host, None, C.line_vertices(n, C.mu_set_line_complete(n)), M).valid
        assert verify(host, None, C.line_vertices(n, C.total_set_line_complete(n)), T).valid


def test_lk10_witness():
    f = C.total_witness_LK10()
    assert len(f) == 16 and len(set(f)) == 16 and (0, 4) in f
    assert verify_line_complete(10, f, T).valid
    host, _ = G.line_graph(G.complete(10))
    assert verify(host, None, C.line_vertices(10, f), T).valid


def test_cograph_witnesses():
    c4 = C.cograph_witnesses("(K(1) u K(1)) + (K(1) u K(1))")
    assert len(c4[D]) == 3 and len(c4[M]) == 3
    assert len(c4[T]) == 2 and len(c4[O]) == 2
    uni = C.cograph_witnesses(build("K(1) + (K(1) u K(2))"))
    assert len({len(x) for x in uni.values()}) == 1
    with pytest.raises(C.ConstructionError):
        C.cograph_witnesses("C(5)")


def test_cograph_witness_sizes_are_optimal():
    import random

    from mutvis.cographs import random_cotree_cograph

    rng = random.Random(2)
    for _ in range(40):
        g = random_cotree_cograph(rng.randint(2, 9), rng)
        sets = C.cograph_witnesses(g)
        nums = visibility_numbers(g)
        assert {v: len(x) for v, x in sets.items()} == nums


def test_family_examples():
    def sizes(kind):
        w = C.family_witnesses(kind)
        return tuple(len(w[v]) for v in (T, O, D, M))

    assert sizes("c5(0,0)") == (0, 2, 2, 3)
    assert sizes("c5(2,3)") == (5, 7, 7, 8)
    assert sizes("g7(1,1,2)") == (4, 7, 6, 8)
    assert sizes("g7(0,0,0)") == (0, 3, 3, 4)


def test_family_witness_contains_all_duplicates():
    g = G.g7_family(1, 2, 0)
    w = C.family_witnesses("g7(1,2,0)")
    for variant in ALL_VARIANTS:
        assert set(range(7, g.n)) <= set(w[variant])
    with pytest.raises(C.ConstructionError):
        C.family_witnesses("K(3)")


FAMILY_GRID = [("c5", (i, j)) for i in range(4) for j in range(4)] + [
    ("g7", (i, j, k)) for i in range(4) for j in range(4) for k in range(4)
]


@pytest.mark.parametrize("name,params", FAMILY_GRID)
def test_family_witness_sizes_match_formulas(name, params):
    kind = f"{name}({','.join(map(str, params))})"
    formulas = C.c5_family_formulas(*params) if name == "c5" else C.g7_family_formulas(*params)
    witnesses = C.family_witnesses(kind)
    graph = build(kind)
    for variant in ALL_VARIANTS:
        assert len(witnesses[variant]) == formulas[variant]
        assert verify(graph, None, witnesses[variant], variant).valid
    if sum(params) <= 4:
        for variant in ALL_VARIANTS:
            assert max_visibility(graph, variant).value == formulas[variant]
