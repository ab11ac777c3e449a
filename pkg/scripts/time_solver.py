"""Time the exact solver on the larger instances, per variant and strategy."""

from __future__ import annotations

import argparse
import time
from dataclasses import dataclass, field

from mutvis.genlang import build
from mutvis.solver import SolveOptions, max_visibility
from mutvis.visibility import ALL_VARIANTS


@dataclass
class TimingConfig:
    graphs: list[str] = field(default_factory=lambda: [
        "petersen", "cart(K(4),K(4))", "cart(K(5),K(5))", "dir(K(5),K(5))", "line(K(6))", "line(K(7))",
    ])
    strategies: list[str] = field(default_factory=lambda: ["auto", "bnb"])
    budget: float | None = 120.0


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--graph", action="append", help="DSL expression; repeatable")
    p.add_argument("--strategy", action="append", choices=("auto", "descending", "bnb"))
    p.add_argument("--budget", type=float, default=TimingConfig.budget)
    a = p.parse_args(argv)
    cfg = TimingConfig(budget=a.budget)
    if a.graph:
        cfg.graphs = a.graph
    if a.strategy:
        cfg.strategies = a.strategy
    print(f"{'graph':18s} {'variant':8s} {'strategy':10s} {'value':>5s} {'nodes':>9s} {'seconds':>8s}")
    for expr in cfg.graphs:
        g = build(expr)
        for variant in ALL_VARIANTS:
            for strategy in cfg.strategies:
                opts = SolveOptions(variant=variant, strategy=strategy, time_budget=cfg.budget)
                start = time.perf_counter()
                res = max_visibility(g, opts)
                took = time.perf_counter() - start
                flag = "" if res.exact else " (budget hit)"
                print(f"{expr:18s} {variant.value:8s} {strategy:10s} {res.value:5d} {res.nodes_explored:9d} {took:8.2f}{flag}")


if __name__ == "__main__":
    main()
