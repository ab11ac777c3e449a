"""Run every formula-vs-solver report and write one CSV per suite.

    python scripts/reproduce_tables.py --out results/
"""

from __future__ import annotations

import argparse
import sys
import time
from dataclasses import dataclass, field
from pathlib import Path

from mutvis import cli


@dataclass
class TablesConfig:
    out: Path = Path("results")
    suites: list[str] = field(default_factory=lambda: sorted(cli.REPORTS))
    seed: int = 0
    cograph_samples: int = 200
    strategy: str = "auto"


def run(cfg: TablesConfig) -> int:
    cfg.out.mkdir(parents=True, exist_ok=True)
    worst = 0
    for suite in cfg.suites:
        argv = [
            "report", suite, "--format", "csv", "--seed", str(cfg.seed),
            "--count", str(cfg.cograph_samples), "--strategy", cfg.strategy,
        ]
        path = cfg.out / f"{suite}.csv"
        start = time.perf_counter()
        with open(path, "w", encoding="utf-8") as fh:
            saved, sys.stdout = sys.stdout, fh
            try:
                code = cli.main(argv)
            finally:
                sys.stdout = saved
        rows = sum(1 for _ in open(path, encoding="utf-8")) - 1
        status = "ok" if code == 0 else f"exit {code}"
        print(f"{suite:14s} {rows:4d} rows  {time.perf_counter() - start:7.1f}s  {status}  -> {path}")
        worst = max(worst, code)
    return worst


def main(argv=None) -> int:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--out", type=Path, default=TablesConfig.out)
    p.add_argument("--suite", action="append", choices=sorted(cli.REPORTS), help="repeatable; default all")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--cograph-samples", type=int, default=200)
    p.add_argument("--strategy", default="auto", choices=("auto", "descending", "bnb"))
    a = p.parse_args(argv)
    cfg = TablesConfig(out=a.out, seed=a.seed, cograph_samples=a.cograph_samples, strategy=a.strategy)
    if a.suite:
        cfg.suites = a.suite
    return run(cfg)


if __name__ == "__main__":
    sys.exit(main())
