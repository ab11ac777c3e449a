import random
from itertools import combinations

import networkx as nx
import pytest

from corpus import corpus
import oracles
from mutvis import graphs as G
from mutvis.graphs import Graph
from mutvis.solver import (
    SolveOptions, SolverCeilingError, SolverError, _subsets_colex, all_max_witnesses, certified_orbits,
    find_automorphism, greedy_lower_bound, max_visibility, orbit_proxy_classes, visibility_numbers,
)
from mutvis.visibility import ALL_VARIANTS, HEREDITARY, Variant, is_independent, is_valid, verify

M, O, D, T = Variant.MUTUAL, Variant.OUTER, Variant.DUAL, Variant.TOTAL


def numbers(g, **kw):
    return tuple(visibility_numbers(g, **kw)[v] for v in (M, O, D, T))


def test_options_validation():
    assert SolveOptions(strategy="bnb").strategy == "branch_and_bound"
    assert SolveOptions(variant="dual").variant is D
    for bad in ({"strategy": "x"}, {"time_budget": 0}, {"threads": 0}, {"symmetry": "all"}):
        with pytest.raises(ValueError):
            SolveOptions(**bad)


def test_colex_enumeration():
    got = list(_subsets_colex(5, 3))
    ref = sorted((sum(1 << v for v in c) for c in combinations(range(5), 3)))
    assert got == ref
    assert list(_subsets_colex(3, 0)) == [0] and list(_subsets_colex(2, 3)) == []


@pytest.mark.parametrize(
    "expr,expected",
    [
        ("petersen", (6, 4, 0, 0)),
        ("cart(K(3),K(3))", (6, 4, 5, 3)),
        ("g7(0,0,0)", (4, 3, 3, 0)),
        ("C(5)", (3, 2, 2, 0)),
        ("K(4)", (4, 4, 4, 4)),
    ],
)
def test_known_values(expr, expected):
    from mutvis.genlang import build

    assert numbers(build(expr)) == expected


def test_direct_product_k5():
    g = G.direct_product(G.complete(5), G.complete(5))
    assert max_visibility(g, T).value == 21
    assert max_visibility(g, M).value == 21


def test_result_json_and_witness():
    res = max_visibility(G.petersen(), SolveOptions(variant=O, strategy="descending"))
    data = res.to_json()
    assert set(data) == {"variant", "value", "witness", "exact", "nodes"}
    assert res.to_json(["v%d" % i for i in range(10)])["witness_labels"][0].startswith("v")
    assert data["value"] == 4 and data["exact"] and len(data["witness"]) == 4


def test_descending_witness_is_colex_smallest():
    for g in corpus(40, seed=21, max_n=8):
        for variant in ALL_VARIANTS:
            res = max_visibility(g, SolveOptions(variant=variant, strategy="descending"))
            first = next(x for x in _subsets_colex(g.n, res.value) if is_valid(g, x, variant))
            assert res.witness.mask == first


def test_rejects_disconnected_and_large():
    with pytest.raises(SolverError):
        max_visibility(G.empty(3), M)
    with pytest.raises(SolverCeilingError):
        max_visibility(G.cycle(40), M)
    assert max_visibility(G.cycle(40), SolveOptions(variant=M, ceiling=40)).value == 3


def test_budget_exhaustion_gives_lower_bound():
    g = G.cartesian_product(G.complete(6), G.complete(6))
    res = max_visibility(g, SolveOptions(variant=M, strategy="bnb", time_budget=0.05))
    assert not res.exact
    assert verify(g, None, res.witness, M).valid and res.value == len(res.witness)


def test_strategies_agree_with_reference():
    for g in corpus(80, seed=22, max_n=7):
        for variant in ALL_VARIANTS:
            ref = oracles.max_size(g, variant.value)
            for strategy in ("descending", "bnb", "auto"):
                assert max_visibility(g, SolveOptions(variant=variant, strategy=strategy)).value == ref


@pytest.mark.parametrize("seed", range(4))
def test_strategy_equivalence_up_to_twelve(seed):
    rng = random.Random(seed)
    graphs = [g for g in corpus(60, seed=100 + seed, max_n=12) if g.n >= 9][:6]
    graphs.append(G.c5_family(rng.randint(0, 3), rng.randint(0, 3)))
    for g in graphs:
        for variant in ALL_VARIANTS:
            a = max_visibility(g, SolveOptions(variant=variant, strategy="descending"))
            b = max_visibility(g, SolveOptions(variant=variant, strategy="bnb"))
            c = max_visibility(g, SolveOptions(variant=variant, strategy="bnb", symmetry="vertex_orbits"))
            assert a.value == b.value == c.value, (g.edges(), variant)


def test_monotone_failure_soundness():
    """A failing pair that stays required keeps failing on every superset."""
    for g in corpus(30, seed=23, max_n=8):
        full = g.full_mask
        for x in range(1 << g.n):
            for variant in HEREDITARY:
                report = verify(g, None, x, variant)
                if report.valid:
                    continue
                extra = full & ~x
                # the failing pair has an endpoint in x, so it stays required in every superset
                sub = extra
                while True:
                    y = x | sub
                    assert not verify(g, None, y, variant).valid
                    if sub == 0:
                        break
                    sub = (sub - 1) & extra


def test_greedy_lower_bound():
    assert len(greedy_lower_bound(G.complete(5), T)) == 5
    assert len(greedy_lower_bound(G.cycle(5), M)) >= 2
    p = G.petersen()
    for variant in ALL_VARIANTS:
        x = greedy_lower_bound(p, variant)
        assert verify(p, None, x, variant).valid
        assert len(x) <= max_visibility(p, variant).value


def test_all_max_witnesses():
    p = G.petersen()
    sets = all_max_witnesses(p, O, cap=500)
    assert sets and all(len(x) == 4 and is_independent(p, x) for x in sets)
    c5 = all_max_witnesses(G.cycle(5), M)
    assert c5 and all(len(x) == 3 for x in c5)
    k4 = all_max_witnesses(G.complete(4), T)
    assert [x.to_list() for x in k4] == [[0, 1, 2, 3]]
    assert len(all_max_witnesses(p, O, cap=3)) == 3


def test_orbits_are_certified():
    frucht = nx.frucht_graph()
    g = Graph.from_edges(12, frucht.edges())
    assert len(orbit_proxy_classes(g)) < 12  # 3-regular, so colour refinement cannot split it
    assert certified_orbits(g) == [[v] for v in range(12)]
    assert len(certified_orbits(G.petersen())) == 1
    p = G.petersen()
    image = find_automorphism(p, 0, 7)
    assert image[0] == 7
    assert all(p.has_edge(image[u], image[v]) for u, v in p.edges())


def test_symmetry_option_on_asymmetric_graph():
    frucht = nx.frucht_graph()
    g = Graph.from_edges(12, frucht.edges())
    for variant in ALL_VARIANTS:
        plain = max_visibility(g, SolveOptions(variant=variant, strategy="bnb"))
        sym = max_visibility(g, SolveOptions(variant=variant, strategy="bnb", symmetry="vertex_orbits"))
        assert plain.value == sym.value


def test_threads_hint_does_not_change_results():
    g = G.cartesian_product(G.complete(3), G.complete(4))
    one = max_visibility(g, SolveOptions(variant=D, threads=1))
    four = max_visibility(g, SolveOptions(variant=D, threads=4))
    assert one.value == four.value and one.witness == four.witness
