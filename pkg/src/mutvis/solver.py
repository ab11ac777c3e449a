"""Exact maximisation of the four visibility numbers.

Strategies
----------
descending
    Try sizes ``n, n-1, ...`` and enumerate the k-subsets of each size in
    colex order (increasing bitmask value); the first valid subset is the
    answer. Sound for every variant.
branch_and_bound
    Mutual, outer and total sets are closed under taking subsets, so the
    search grows X one vertex at a time and drops every candidate whose
    addition already breaks validity. Dual sets are not closed under subsets,
    so for Dual the search assigns every vertex to X or to its complement and
    only prunes on pairs whose requirement and non-visibility are already
    forced by the decided vertices.
auto
    Descending for the top sizes while the subset count stays small, then
    branch_and_bound capped by the sizes already ruled out.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from math import comb

from .graphs import CeilingError, Graph, GraphError, bits
from .visibility import (
    ALL_VARIANTS,
    HEREDITARY,
    IN_IN,
    IN_OUT,
    OUT_OUT,
    REQUIRED,
    Variant,
    VertexSet,
    context_for,
    verify,
)

DEFAULT_CEILING = 36
STRATEGIES = ("auto", "descending", "branch_and_bound")
# subsets the auto strategy may spend on the descending phase
AUTO_DESCENDING_LIMIT = 20000


class SolverError(GraphError):
    pass


class SolverCeilingError(SolverError, CeilingError):
    pass


class _OutOfTime(Exception):
    pass


@dataclass
class SolveOptions:
    variant: Variant = Variant.MUTUAL
    strategy: str = "auto"
    threads: int = 1
    time_budget: float | None = None
    symmetry: str = "none"
    ceiling: int = DEFAULT_CEILING

    def __post_init__(self):
        if isinstance(self.variant, str):
            self.variant = Variant.parse(self.variant)
        if self.strategy == "bnb":
            self.strategy = "branch_and_bound"
        if self.strategy not in STRATEGIES:
            raise ValueError(f"unknown strategy {self.strategy!r}")
        if self.symmetry not in ("none", "vertex_orbits"):
            raise ValueError(f"unknown symmetry option {self.symmetry!r}")
        if self.time_budget is not None and self.time_budget <= 0:
            raise ValueError("time_budget must be positive")
        if self.threads < 1:
            raise ValueError("threads must be >= 1")


@dataclass
class SolveResult:
    variant: Variant
    value: int
    witness: VertexSet
    exact: bool = True
    nodes_explored: int = 0
    strategy: str = ""
    upper_bound: int | None = field(default=None, repr=False)

    def to_json(self, labels=None) -> dict:
        out = {
            "variant": self.variant.value,
            "value": self.value,
            "witness": self.witness.to_list(),
            "exact": self.exact,
            "nodes": self.nodes_explored,
        }
        if labels is not None:
            out["witness_labels"] = [labels[v] for v in self.witness]
        return out


def _subsets_colex(n: int, k: int):
    """k-subsets of range(n) as bitmasks in increasing numeric (colex) order."""
    if k == 0:
        yield 0
        return
    if k > n:
        return
    x = (1 << k) - 1
    limit = 1 << n
    while x < limit:
        yield x
        low = x & -x
        ripple = x + low
        x = ripple | (((x ^ ripple) >> 2) // low)


class _Search:
    def __init__(self, g: Graph, opts: SolveOptions):
        self.g = g
        self.n = g.n
        self.opts = opts
        self.variant = opts.variant
        self.ctx = context_for(g)
        self.nodes = 0
        self.best = -1
        self.best_mask = 0
        self.upper = g.n
        self.deadline = None if opts.time_budget is None else time.monotonic() + opts.time_budget
        self._through = None
        self.order = list(range(g.n))

    def tick(self):
        self.nodes += 1
        if self.deadline is not None and not self.nodes & 255 and time.monotonic() > self.deadline:
            raise _OutOfTime

    def offer(self, mask: int):
        size = mask.bit_count()
        if size > self.best:
            self.best = size
            self.best_mask = mask

    # -- descending --------------------------------------------------------
    def descending(self, stop_after: int | None = None) -> bool:
        """Return True when the maximum was found; False if ``stop_after`` ran out."""
        spent = 0
        valid = self.ctx.is_valid
        for k in range(self.upper, -1, -1):
            if k <= self.best:
                return True
            if stop_after is not None and spent + comb(self.n, k) > stop_after:
                return False
            for mask in _subsets_colex(self.n, k):
                self.tick()
                spent += 1
                if valid(mask, self.variant):
                    self.offer(mask)
                    return True
            self.upper = k - 1
        return True

    # -- shared helpers ------------------------------------------------------
    @property
    def through(self):
        """through[w]: far pairs (u, v, common) whose geodesic interval contains w."""
        if self._through is None:
            ctx = self.ctx
            through = [[] for _ in range(self.n)]
            for u in range(self.n):
                for v, common in ctx.far[u]:
                    inner = common if common is not None else ctx.interval(u, v)
                    for w in bits(inner):
                        through[w].append((u, v, common))
            self._through = through
        return self._through

    def root_classes(self):
        if self.opts.symmetry == "none":
            return None
        return certified_orbits(self.g)

    # -- one-sided branch and bound (hereditary variants) ---------------------
    def extend_ok(self, x: int, d: int) -> bool:
        """Is ``x + d`` valid, given that ``x`` is valid?"""
        ctx = self.ctx
        pair_ok = ctx.pair_ok
        new = x | (1 << d)
        variant = self.variant
        for v, common in ctx.around[d]:
            if (variant is not Variant.MUTUAL or new >> v & 1) and not pair_ok(d, v, common, new):
                return False
        for u, v, common in self.through[d]:
            if variant is Variant.MUTUAL and not (new >> u & 1 and new >> v & 1):
                continue
            if variant is Variant.OUTER and not (new >> u & 1 or new >> v & 1):
                continue
            if not pair_ok(u, v, common, new):
                return False
        return True

    def grow(self, x: int, size: int, cands: list[int]):
        self.tick()
        if size > self.best:
            self.offer(x)
            if self.best >= self.upper:
                return True
        for idx, c in enumerate(cands):
            if size + len(cands) - idx <= self.best:
                return False
            nx = x | (1 << c)
            rest = [d for d in cands[idx + 1:] if self.extend_ok(nx, d)]
            if self.grow(nx, size + 1, rest):
                return True
        return False

    def branch_and_bound_hereditary(self):
        empty_ok = self.ctx.is_valid(0, self.variant)
        if not empty_ok:  # pragma: no cover - the empty set is always valid
            raise SolverError("empty set invalid")
        self.offer(0)
        classes = self.root_classes()
        if classes is None:
            cands = [c for c in range(self.n) if self.extend_ok(0, c)]
            self.grow(0, 0, cands)
            return
        for rep in sorted(min(cl) for cl in classes):
            if not self.extend_ok(0, rep):
                continue
            x = 1 << rep
            cands = [c for c in range(self.n) if c != rep and self.extend_ok(x, c)]
            if self.grow(x, 1, cands):
                return

    # -- two-sided assignment search (any variant, used for Dual) -------------
    def _dead_after_in(self, x: int, o: int, w: int) -> bool:
        """Does putting ``w`` into X break a pair whose fate is already sealed?"""
        ctx = self.ctx
        pair_ok = ctx.pair_ok
        required = REQUIRED[self.variant]
        new = x | (1 << w)
        decided = new | o
        for v, common in ctx.around[w]:
            if not decided >> v & 1:
                continue
            cls = IN_IN if new >> v & 1 else IN_OUT
            if cls in required and not pair_ok(w, v, common, new):
                return True
        for u, v, common in self.through[w]:
            if not (decided >> u & 1 and decided >> v & 1):
                continue
            cls = (OUT_OUT, IN_OUT, IN_IN)[(new >> u & 1) + (new >> v & 1)]
            if cls in required and not pair_ok(u, v, common, new):
                return True
        return False

    def _dead_after_out(self, x: int, o: int, w: int) -> bool:
        ctx = self.ctx
        required = REQUIRED[self.variant]
        for v, common in ctx.around[w]:
            if x >> v & 1:
                cls = IN_OUT
            elif o >> v & 1:
                cls = OUT_OUT
            else:
                continue
            if cls in required and not ctx.pair_ok(w, v, common, x):
                return True
        return False

    def assign(self, i: int, x: int, o: int, size: int):
        self.tick()
        order = self.order
        n = self.n
        if i == n:
            if size > self.best:
                self.offer(x)
            return self.best >= self.upper
        if size + (n - i) <= self.best:
            return False
        # Undecided vertices that cannot join X without sealing a failure.
        possible = 0
        for c in order[i:]:
            if not self._dead_after_in(x, o, c):
                possible += 1
        if size + possible <= self.best:
            return False
        bit = 1 << order[i]
        if not self._dead_after_in(x, o, order[i]):
            if self.assign(i + 1, x | bit, o, size + 1):
                return True
        if not self._dead_after_out(x, o, order[i]):
            if self.assign(i + 1, x, o | bit, size):
                return True
        return False

    def branch_and_bound_assign(self):
        if self.ctx.is_valid(0, self.variant):
            self.offer(0)
        classes = self.root_classes()
        if classes is None:
            self.order = list(range(self.n))
            self.assign(0, 0, 0, 0)
            return
        # Up to symmetry, every non-empty optimum contains some class representative.
        for rep in sorted(min(cl) for cl in classes):
            self.order = [rep] + [v for v in range(self.n) if v != rep]
            if not self._dead_after_in(0, 0, rep) and self.assign(1, 1 << rep, 0, 1):
                return

    def branch_and_bound(self):
        if self.variant in HEREDITARY:
            self.branch_and_bound_hereditary()
        else:
            self.branch_and_bound_assign()


def orbit_proxy_classes(g: Graph) -> list[list[int]]:
    """Vertex classes by degree refined twice by sorted neighbour colours.

    A coarse stand-in for automorphism orbits: equal for vertex-transitive
    graphs, possibly coarser in general.
    """
    colour = g.degrees()
    for _ in range(2):
        sig = [(colour[v], tuple(sorted(colour[u] for u in bits(g.adj[v])))) for v in range(g.n)]
        palette = {s: i for i, s in enumerate(sorted(set(sig)))}
        colour = [palette[s] for s in sig]
    classes: dict = {}
    for v in range(g.n):
        classes.setdefault(colour[v], []).append(v)
    return sorted(classes.values())


# search steps allowed per automorphism query before giving up on it
AUTOMORPHISM_STEP_LIMIT = 20000


def find_automorphism(g: Graph, a: int, b: int, colour=None, limit: int = AUTOMORPHISM_STEP_LIMIT):
    """An automorphism of ``g`` sending ``a`` to ``b`` as a list, or None.

    None also covers the case where the backtracking gave up after ``limit``
    steps, so callers may only rely on a returned map.
    """
    n = g.n
    if colour is None:
        colour = _refined_colours(g)
    if colour[a] != colour[b]:
        return None
    # BFS order from a keeps each new vertex attached to mapped ones
    order, seen = [a], 1 << a
    for v in order:
        for w in bits(g.adj[v] & ~seen):
            seen |= 1 << w
            order.append(w)
    order += [v for v in range(n) if not seen >> v & 1]
    image = [-1] * n
    used = 0
    steps = 0

    def place(i):
        nonlocal used, steps
        if i == n:
            return True
        steps += 1
        if steps > limit:
            raise _OutOfTime
        v = order[i]
        choices = (1 << b) if i == 0 else g.full_mask & ~used
        for w in bits(choices):
            if colour[w] != colour[v]:
                continue
            if any((g.adj[v] >> u & 1) != (g.adj[w] >> image[u] & 1) for u in order[:i]):
                continue
            image[v] = w
            used |= 1 << w
            if place(i + 1):
                return True
            used &= ~(1 << w)
            image[v] = -1
        return False

    try:
        return list(image) if place(0) else None
    except _OutOfTime:
        return None


def _refined_colours(g: Graph) -> list[int]:
    colour = g.degrees()
    for _ in range(2):
        sig = [(colour[v], tuple(sorted(colour[u] for u in bits(g.adj[v])))) for v in range(g.n)]
        palette = {s: i for i, s in enumerate(sorted(set(sig)))}
        colour = [palette[s] for s in sig]
    return colour


def orbit_proxy_classes(g: Graph) -> list[list[int]]:
    """Vertex classes by degree refined twice by sorted neighbour colours.

    A coarse stand-in for automorphism orbits: every orbit lies inside one
    class, but a class may join several orbits.
    """
    colour = _refined_colours(g)
    classes: dict = {}
    for v in range(g.n):
        classes.setdefault(colour[v], []).append(v)
    return sorted(classes.values())


def certified_orbits(g: Graph) -> list[list[int]]:
    """Split the proxy classes so that each class sits inside one orbit.

    Every member is tied to its class minimum by an explicit automorphism;
    members that cannot be tied start classes of their own. Root pruning
    over these classes is therefore sound.
    """
    colour = _refined_colours(g)
    out = []
    for cls in orbit_proxy_classes(g):
        rest = list(cls)
        while rest:
            rep = rest[0]
            orbit = [rep] + [v for v in rest[1:] if find_automorphism(g, rep, v, colour) is not None]
            out.append(orbit)
            rest = [v for v in rest if v not in orbit]
    return sorted(out)


def _check_solvable(g: Graph, opts: SolveOptions):
    if g.n > opts.ceiling:
        raise SolverCeilingError(f"order {g.n} above the exact-search ceiling {opts.ceiling}")
    if not context_for(g).connected:
        raise SolverError("visibility numbers are only defined for connected graphs")


def max_visibility(g: Graph, opts: SolveOptions | Variant | str = Variant.MUTUAL) -> SolveResult:
    if not isinstance(opts, SolveOptions):
        opts = SolveOptions(variant=opts)
    _check_solvable(g, opts)
    search = _Search(g, opts)
    exact = True
    used = opts.strategy
    try:
        if opts.strategy == "descending":
            search.descending()
        elif opts.strategy == "branch_and_bound":
            search.branch_and_bound()
        else:
            if not search.descending(stop_after=AUTO_DESCENDING_LIMIT):
                search.branch_and_bound()
    except _OutOfTime:
        exact = False
        if search.best < 0:
            search.offer(0)
    witness = VertexSet(g.n, search.best_mask)
    report = verify(g, None, witness, opts.variant)
    if not report.valid:
        raise AssertionError(f"solver produced an invalid witness: {report}")
    return SolveResult(
        variant=opts.variant,
        value=search.best,
        witness=witness,
        exact=exact,
        nodes_explored=search.nodes,
        strategy=used,
        upper_bound=search.upper,
    )


def visibility_numbers(g: Graph, **kw) -> dict[Variant, int]:
    """All four numbers, keyed by variant."""
    return {v: max_visibility(g, SolveOptions(variant=v, **kw)).value for v in ALL_VARIANTS}


def greedy_lower_bound(g: Graph, variant: Variant) -> VertexSet:
    """Insert vertices by decreasing degree whenever the set stays valid."""
    ctx = context_for(g)
    if not ctx.connected:
        raise SolverError("greedy_lower_bound needs a connected graph")
    order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    x = 0
    for v in order:
        if ctx.is_valid(x | (1 << v), variant):
            x |= 1 << v
    return VertexSet(g.n, x)


def all_max_witnesses(g: Graph, variant: Variant, cap: int = 100, value: int | None = None) -> list[VertexSet]:
    """Up to ``cap`` maximum sets, in colex order."""
    if value is None:
        value = max_visibility(g, variant).value
    ctx = context_for(g)
    found = []
    for mask in _subsets_colex(g.n, value):
        if ctx.is_valid(mask, variant):
            found.append(VertexSet(g.n, mask))
            if len(found) >= cap:
                break
    return found
