"""Look for dual sets X whose subset X - {x} is no longer dual.

Dual sets are not assumed closed under subsets anywhere in the solver; this
script reports how often closure fails on random connected graphs. The
outcome is informational.
"""

from __future__ import annotations

import argparse
import json
import random
from dataclasses import asdict, dataclass

from mutvis.graphs import Graph, is_connected
from mutvis.io import to_graph6
from mutvis.visibility import Variant, context_for


@dataclass
class SearchConfig:
    graphs: int = 300
    max_n: int = 8
    seed: int = 0
    edge_prob: float = 0.5


def random_connected(rng: random.Random, n: int, p: float) -> Graph:
    while True:
        edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
        g = Graph.from_edges(n, edges)
        if is_connected(g):
            return g


def search(cfg: SearchConfig) -> dict:
    rng = random.Random(cfg.seed)
    graphs_with_failure = 0
    dual_sets = 0
    broken = 0
    example = None
    for _ in range(cfg.graphs):
        g = random_connected(rng, rng.randint(3, cfg.max_n), cfg.edge_prob)
        ctx = context_for(g)
        hit = False
        for x in range(1 << g.n):
            if not ctx.is_valid(x, Variant.DUAL):
                continue
            dual_sets += 1
            for v in range(g.n):
                if x >> v & 1 and not ctx.is_valid(x & ~(1 << v), Variant.DUAL):
                    broken += 1
                    hit = True
                    if example is None:
                        example = {"graph6": to_graph6(g), "X": [u for u in range(g.n) if x >> u & 1], "removed": v}
                    break
        graphs_with_failure += hit
    return {
        "config": asdict(cfg),
        "dual_sets": dual_sets,
        "dual_sets_with_a_non_dual_subset": broken,
        "graphs_with_failure": graphs_with_failure,
        "example": example,
    }


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--graphs", type=int, default=SearchConfig.graphs)
    p.add_argument("--max-n", type=int, default=SearchConfig.max_n)
    p.add_argument("--seed", type=int, default=SearchConfig.seed)
    a = p.parse_args(argv)
    print(json.dumps(search(SearchConfig(a.graphs, a.max_n, a.seed)), indent=2, sort_keys=True))


if __name__ == "__main__":
    main()
