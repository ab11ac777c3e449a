"""Command-line driver.

Exit codes: 0 ok, 2 input error, 3 budget or size ceiling hit, 4 a report
row whose formula and computed columns disagree.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import random
import re
import sys

from . import constructions as cons
from . import graphs
from .cographs import big_mu_decompose, cograph_visibility_numbers, is_cograph, random_cotree_cograph
from .extremal import ex_forbidden, turan_edge_count, zarankiewicz
from .genlang import ParseError, build
from .graphs import CeilingError, Graph, GraphError
from .io import read_graph, to_graph6
from .solver import SolveOptions, max_visibility
from .visibility import ALL_VARIANTS, Variant, VertexSet, verify

EXIT_OK, EXIT_INPUT, EXIT_CEILING, EXIT_DISAGREE = 0, 2, 3, 4


class BudgetExhausted(Exception):
    pass


# ------------------------------------------------------------------ helpers

def load_graph(spec: str) -> Graph:
    """``--graph`` takes a DSL expression or a path to a .g6/.el file."""
    if spec.endswith((".g6", ".el")) and os.path.exists(spec):
        return read_graph(spec)
    return build(spec)


def parse_variants(text: str) -> list[Variant]:
    if text == "all":
        return list(ALL_VARIANTS)
    return [Variant.parse(text)]


def solve_options(args, variant: Variant) -> SolveOptions:
    return SolveOptions(
        variant=variant,
        strategy=args.strategy,
        threads=args.threads,
        time_budget=args.budget,
    )


_TOKEN = re.compile(r"\([^)]*\)|[^\s,]+")


def parse_vertex_set(g: Graph, text: str) -> VertexSet:
    """Indices or labels, separated by commas or spaces; ``@path`` reads a file."""
    if text.startswith("@"):
        with open(text[1:], encoding="utf-8") as fh:
            text = fh.read()
    vertices = []
    for token in _TOKEN.findall(text):
        if g.labels is not None and token in g.labels:
            vertices.append(g.vertex_of_label(token))
        elif token.isdigit():
            vertices.append(int(token))
        else:
            raise GraphError(f"cannot resolve vertex {token!r}")
    return VertexSet.of(g.n, vertices)


def emit(data, fmt: str = "json", out=None):
    out = out or sys.stdout
    if fmt == "json":
        out.write(json.dumps(data, sort_keys=True, indent=2) + "\n")
        return
    rows = data if isinstance(data, list) else [data]
    buf = io.StringIO()
    fields = list(rows[0]) if rows else []
    writer = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({k: " ".join(map(str, v)) if isinstance(v, list) else v for k, v in row.items()})
    out.write(buf.getvalue())


def _labels(g: Graph):
    return [g.label(v) for v in range(g.n)]


# ----------------------------------------------------------------- commands

def cmd_compute(args) -> int:
    g = load_graph(args.graph)
    results = []
    exhausted = False
    for variant in parse_variants(args.variant):
        res = max_visibility(g, solve_options(args, variant))
        exhausted |= not res.exact
        results.append(res.to_json(_labels(g)))
    emit(results[0] if len(results) == 1 else results, args.format)
    return EXIT_CEILING if exhausted else EXIT_OK


def cmd_verify(args) -> int:
    g = load_graph(args.graph)
    x = parse_vertex_set(g, " ".join(args.set))
    out = []
    for variant in parse_variants(args.variant):
        row = verify(g, None, x, variant).to_json()
        row["variant"] = variant.value
        out.append(row)
    emit(out[0] if len(out) == 1 else out, args.format)
    return EXIT_OK


def _witness_json(g: Graph, variant: Variant, x: VertexSet, **extra) -> dict:
    row = {
        "variant": variant.value,
        "value": len(x),
        "witness": x.to_list(),
        "witness_labels": [g.label(v) for v in x],
        "exact": True,
        "nodes": 0,
        "source": "construction",
        "host_graph6": to_graph6(g),
    }
    row.update(extra)
    return row


def _need(args, *names):
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        raise GraphError(f"{args.family} needs --{' --'.join(missing)}")


def cmd_construct(args) -> int:
    fam = args.family
    if fam in ("dual-cart", "outer-cart", "total-direct"):
        _need(args, "n", "m")
        if fam == "total-direct":
            g = cons.clique_product_host(args.n, args.m, "direct")
            out = _witness_json(g, Variant.TOTAL, cons.total_set_direct_cliques(args.n, args.m))
        else:
            g = cons.clique_product_host(args.n, args.m)
            build_set = cons.dual_set_cartesian_cliques if fam == "dual-cart" else cons.outer_set_cartesian_cliques
            variant = Variant.DUAL if fam == "dual-cart" else Variant.OUTER
            out = _witness_json(g, variant, build_set(args.n, args.m))
    elif fam in ("mu-lkn", "total-lkn", "lk10-witness"):
        if fam == "lk10-witness":
            n, f, variant = 10, cons.total_witness_LK10(), Variant.TOTAL
        else:
            _need(args, "n")
            n = args.n
            if fam == "mu-lkn":
                f, variant = cons.mu_set_line_complete(n), Variant.MUTUAL
            else:
                f, variant = cons.total_set_line_complete(n), Variant.TOTAL
        g, _ = graphs.line_graph(graphs.complete(n))
        out = _witness_json(g, variant, cons.line_vertices(n, f), edges=[list(e) for e in f])
    elif fam in ("cograph", "family"):
        if args.graph is None:
            raise GraphError(f"{fam} needs --graph")
        if fam == "cograph":
            g = load_graph(args.graph)
            sets = cons.cograph_witnesses(g)
        else:
            g = build(args.graph)
            sets = cons.family_witnesses(args.graph)
        out = [_witness_json(g, v, sets[v]) for v in ALL_VARIANTS]
    else:  # argparse choices make this unreachable
        raise GraphError(f"unknown family {fam!r}")
    emit(out, args.format)
    return EXIT_OK


def cmd_oracle(args) -> int:
    if args.kind == "ex":
        if args.n is None or args.forbid is None:
            raise GraphError("oracle ex needs --n and --forbid")
        out = ex_forbidden(args.n, args.forbid).to_json()
        out.update(n=args.n, forbid=args.forbid, value=out["max_edges"])
    else:
        if args.n is None or args.m is None:
            raise GraphError("oracle zarankiewicz needs --m and --n")
        out = zarankiewicz(args.m, args.n).to_json()
        out.update(m=args.m, n=args.n, value=out["max_ones"])
    emit(out, args.format)
    return EXIT_OK


def cmd_cograph(args) -> int:
    g = load_graph(args.graph)
    cograph = is_cograph(g)
    connected = graphs.is_connected(g)
    dec = big_mu_decompose(g) if connected else None
    numbers = None
    if cograph and connected:
        numbers = {v.value: k for v, k in cograph_visibility_numbers(g).items()}
    out = {
        "is_cograph": cograph,
        "connected": connected,
        "big_mu": dec.to_json() if dec else None,
        "numbers": numbers,
    }
    emit(out, args.format)
    return EXIT_OK


# ------------------------------------------------------------------ reports

def _solve_all(g: Graph, args) -> dict[Variant, int]:
    out = {}
    for v in ALL_VARIANTS:
        res = max_visibility(g, solve_options(args, v))
        if not res.exact:
            raise BudgetExhausted(f"budget exhausted on a {g.n}-vertex instance")
        out[v] = res.value
    return out


def _row(head: dict, formula: dict[Variant, int], solved: dict[Variant, int]) -> dict:
    row = dict(head)
    for v in ALL_VARIANTS:
        if v in formula:
            row[f"{v.value}_formula"] = formula[v]
        row[f"{v.value}_solver"] = solved[v]
    row["agree"] = all(formula[v] == solved[v] for v in formula)
    return row


def report_hamming(args):
    rows = []
    for n in range(3, 6):
        for m in range(n, 6):
            g = cons.clique_product_host(n, m)
            formula = {
                Variant.MUTUAL: zarankiewicz(n, m).max_ones,
                Variant.OUTER: n + m - 2,
                Variant.DUAL: n + m - 1,
                Variant.TOTAL: max(n, m),
            }
            rows.append(_row({"n": n, "m": m}, formula, _solve_all(g, args)))
    return rows


def report_direct(args):
    rows = []
    for n, m in ((5, 5), (5, 6)):
        g = cons.clique_product_host(n, m, "direct")
        formula = {v: n * m - 4 for v in ALL_VARIANTS}
        rows.append(_row({"n": n, "m": m}, formula, _solve_all(g, args)))
    return rows


def report_line_complete(args):
    rows = []
    for n in range(3, 7):
        g, _ = graphs.line_graph(graphs.complete(n))
        formula = {
            Variant.MUTUAL: turan_edge_count(n, 3),
            Variant.OUTER: ex_forbidden(n, "k4minus").max_edges,
            Variant.DUAL: ex_forbidden(n, "k4c4").max_edges,
            Variant.TOTAL: ex_forbidden(n, "c4").max_edges,
        }
        head = {"n": n, "total_construction": n - 1 + (n - 1) // 2}
        rows.append(_row(head, formula, _solve_all(g, args)))
    return rows


def report_cographs(args):
    rng = random.Random(args.seed)
    rows = []
    for index in range(args.count):
        g = random_cotree_cograph(rng.randint(1, args.max_n), rng)
        formula = cograph_visibility_numbers(g)
        head = {"sample": index, "graph6": to_graph6(g), "n": g.n}
        rows.append(_row(head, formula, _solve_all(g, args)))
    return rows


def report_family_g(args):
    rows = []
    for i in range(4):
        for j in range(4 - i):
            g = graphs.c5_family(i, j)
            head = {"family": f"c5({i},{j})", "n": g.n}
            rows.append(_row(head, cons.c5_family_formulas(i, j), _solve_all(g, args)))
    for i in range(4):
        for j in range(4 - i):
            for k in range(4 - i - j):
                g = graphs.g7_family(i, j, k)
                head = {"family": f"g7({i},{j},{k})", "n": g.n}
                rows.append(_row(head, cons.g7_family_formulas(i, j, k), _solve_all(g, args)))
    return rows


REPORTS = {
    "hamming": report_hamming,
    "direct": report_direct,
    "line-complete": report_line_complete,
    "cographs": report_cographs,
    "family-g": report_family_g,
}


def cmd_report(args) -> int:
    rows = REPORTS[args.suite](args)
    emit(rows, args.format)
    bad = [r for r in rows if not r["agree"]]
    if bad:
        print(f"{len(bad)} row(s) disagree", file=sys.stderr)
        return EXIT_DISAGREE
    return EXIT_OK


# ------------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--graph", help="DSL expression or path to a .g6/.el file")
    common.add_argument("--variant", default="all", help="mu|outer|dual|total|all")
    common.add_argument("--strategy", default="auto", choices=("auto", "descending", "bnb"))
    common.add_argument("--threads", type=int, default=1)
    common.add_argument("--budget", type=float, default=None, help="time budget per solve, seconds")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--format", default="json", choices=("json", "csv"))

    parser = argparse.ArgumentParser(prog="mutvis", description="Mutual-visibility numbers of graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", parents=[common], help="exact visibility numbers")
    p.set_defaults(func=cmd_compute, need_graph=True)

    p = sub.add_parser("verify", parents=[common], help="check a vertex set")
    p.add_argument("set", nargs="*", help="vertex indices or labels, or @file")
    p.set_defaults(func=cmd_verify, need_graph=True)

    p = sub.add_parser("construct", parents=[common], help="closed-form witnesses")
    p.add_argument(
        "family",
        choices=("dual-cart", "outer-cart", "total-direct", "mu-lkn", "total-lkn", "lk10-witness", "cograph", "family"),
    )
    p.add_argument("--n", type=int)
    p.add_argument("--m", type=int)
    p.set_defaults(func=cmd_construct, need_graph=False)

    p = sub.add_parser("oracle", parents=[common], help="extremal-number oracles")
    p.add_argument("kind", choices=("ex", "zarankiewicz"))
    p.add_argument("--n", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--forbid", choices=("c4", "k4", "k4minus", "k4c4"))
    p.set_defaults(func=cmd_oracle, need_graph=False)

    p = sub.add_parser("report", parents=[common], help="formula vs computed tables")
    p.add_argument("suite", choices=sorted(REPORTS))
    p.add_argument("--count", type=int, default=50, help="samples for the cographs suite")
    p.add_argument("--max-n", type=int, default=11, help="largest order for the cographs suite")
    p.set_defaults(func=cmd_report, need_graph=False)

    p = sub.add_parser("cograph", parents=[common], help="cograph analysis")
    p.add_argument("action", choices=("analyze",))
    p.set_defaults(func=cmd_cograph, need_graph=True)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.need_graph and args.graph is None:
        parser.error(f"{args.command} needs --graph")
    try:
        return args.func(args)
    except (CeilingError, BudgetExhausted) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CEILING
    except (ParseError, GraphError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
