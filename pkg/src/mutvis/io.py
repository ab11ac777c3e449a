"""Edge-list and graph6 reading/writing."""

from __future__ import annotations

from pathlib import Path

from .graphs import Graph, GraphError


def to_graph6(g: Graph) -> str:
    n = g.n
    if n < 63:
        head = [n]
    elif n < 258048:
        head = [63, (n >> 12) & 63, (n >> 6) & 63, n & 63]
    else:
        head = [63, 63] + [(n >> s) & 63 for s in (30, 24, 18, 12, 6, 0)]
    bitstream = [g.adj[i] >> j & 1 for j in range(1, n) for i in range(j)]
    bitstream += [0] * (-len(bitstream) % 6)
    body = [
        int("".join(map(str, bitstream[k:k + 6])), 2) for k in range(0, len(bitstream), 6)
    ]
    return "".join(chr(x + 63) for x in head + body)


def from_graph6(text: str) -> Graph:
    text = text.strip()
    if text.startswith(">>graph6<<"):
        text = text[len(">>graph6<<"):]
    data = [ord(c) - 63 for c in text]
    if not data or any(x < 0 or x > 63 for x in data):
        raise GraphError("invalid graph6 string")
    if data[0] < 63:
        n, rest = data[0], data[1:]
    elif len(data) > 1 and data[1] == 63:
        if len(data) < 8:
            raise GraphError("truncated graph6 header")
        n = 0
        for x in data[2:8]:
            n = (n << 6) | x
        rest = data[8:]
    else:
        if len(data) < 4:
            raise GraphError("truncated graph6 header")
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        rest = data[4:]
    need = n * (n - 1) // 2
    if len(rest) != -(-need // 6):
        raise GraphError(f"graph6 body length {len(rest)} does not match n={n}")
    stream = [(x >> (5 - k)) & 1 for x in rest for k in range(6)]
    edges = []
    pos = 0
    for j in range(1, n):
        for i in range(j):
            if stream[pos]:
                edges.append((i, j))
            pos += 1
    return Graph.from_edges(n, edges)


def to_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"] + [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def from_edge_list(text: str) -> Graph:
    rows = [line.split() for line in text.splitlines() if line.strip() and not line.lstrip().startswith("#")]
    if not rows:
        raise GraphError("empty edge list")
    try:
        n, m = int(rows[0][0]), int(rows[0][1])
        edges = [(int(a), int(b)) for a, b in rows[1:]]
    except (ValueError, IndexError) as exc:
        raise GraphError(f"malformed edge list: {exc}") from None
    if len(edges) != m:
        raise GraphError(f"edge list header says {m} edges, found {len(edges)}")
    g = Graph.from_edges(n, edges)
    if g.m != m:
        raise GraphError("edge list contains duplicate edges")
    return g


def read_graph(path: str | Path) -> Graph:
    """Load a graph from ``.g6`` (graph6) or ``.el`` (edge list)."""
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise GraphError(f"cannot read {path}: {exc.strerror}") from None
    if path.suffix == ".g6":
        first = next((line for line in text.splitlines() if line.strip()), "")
        return from_graph6(first)
    if path.suffix == ".el":
        return from_edge_list(text)
    raise GraphError(f"unknown graph file extension {path.suffix!r} (expected .el or .g6)")


def write_graph(g: Graph, path: str | Path):
    path = Path(path)
    if path.suffix == ".g6":
        path.write_text(to_graph6(g) + "\n")
    elif path.suffix == ".el":
        path.write_text(to_edge_list(g))
    else:
        raise GraphError(f"unknown graph file extension {path.suffix!r}")
