"""Cycle spaces of multigraphs and the arrangement they carry.

Each oriented edge ``e`` gives a functional on the cycle space: the signed
coefficient of ``e`` in a cycle.  The kernels of the nonzero ones, with
duplicates merged, form a central essential arrangement ``A_G`` in
``Q^b1``.  The complement of ``A_G`` is torifiable exactly when the graph has
a cycle basis whose cycles are pairwise edge-disjoint, which in turn is the
same as every block of the graph having at most one independent cycle.
:func:`theorem44_report` checks all of these characterizations
independently and refuses to return if they disagree.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Iterator, Sequence

from . import linalg
from .arrangement import Arrangement, is_boolean, is_essential, normalize
from .errors import InternalTheoremViolation, NonSimpleCycle, ParseError
from .f1 import torification_verdict

__all__ = [
    "Graph",
    "UnionFind",
    "SpanningForest",
    "CycleBasis",
    "EtaTable",
    "spanning_forest",
    "fundamental_basis",
    "eta_table",
    "build_cycle_arrangement",
    "is_separated",
    "blocks",
    "is_cactus",
    "spanning_forest_count",
    "iter_spanning_forests",
    "random_spanning_forest",
    "Theorem44Record",
    "theorem44_report",
    "parse_graph",
    "read_graph",
    "format_graph",
]

ENUMERATION_CAP = 10_000
SAMPLE_COUNT = 1_000


@dataclass(frozen=True)
class Graph:
    """Finite multigraph; edge ``i`` is oriented ``edges[i][0] -> edges[i][1]``."""

    vertex_count: int
    edges: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "edges", tuple((int(u), int(v)) for u, v in self.edges))
        for u, v in self.edges:
            if not (0 <= u < self.vertex_count and 0 <= v < self.vertex_count):
                raise ValueError(f"edge ({u}, {v}) references a vertex outside 0..{self.vertex_count - 1}")

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def components(self) -> int:
        uf = UnionFind(self.vertex_count)
        for u, v in self.edges:
            uf.union(u, v)
        return uf.count

    def betti1(self) -> int:
        return self.edge_count - self.vertex_count + self.components()

    def loops(self) -> list[int]:
        return [i for i, (u, v) in enumerate(self.edges) if u == v]


class UnionFind:
    """Disjoint sets over ``0..n-1`` with path halving and union by size."""

    def __init__(self, n: int):
        self.parent = list(range(n))
        self.size = [1] * n
        self.count = n

    def find(self, x: int) -> int:
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if self.size[ra] < self.size[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.size[ra] += self.size[rb]
        self.count -= 1
        return True


@dataclass(frozen=True)
class SpanningForest:
    edge_indices: frozenset[int]

    def __contains__(self, e):
        return e in self.edge_indices

    def __len__(self):
        return len(self.edge_indices)


@dataclass(frozen=True)
class CycleBasis:
    """Cycles as signed edge vectors of length ``|E|``.

    For a fundamental basis ``labels[j]`` is the non-forest edge that
    generates ``cycles[j]``.
    """

    cycles: tuple[tuple[int, ...], ...]
    labels: tuple[int, ...] | None = None

    def __len__(self):
        return len(self.cycles)

    def supports(self) -> list[list[int]]:
        return [[e for e, c in enumerate(cyc) if c] for cyc in self.cycles]


@dataclass(frozen=True)
class EtaTable:
    """``rows[e][j]`` is the value of edge ``e``'s functional on basis cycle ``j``."""

    rows: tuple[tuple[int, ...], ...]

    def bridges(self) -> list[int]:
        return [e for e, r in enumerate(self.rows) if not any(r)]


def spanning_forest(g: Graph) -> SpanningForest:
    """Greedy forest: scan edges in storage order, keep those joining two trees."""
    uf = UnionFind(g.vertex_count)
    return SpanningForest(frozenset(i for i, (u, v) in enumerate(g.edges) if uf.union(u, v)))


def _forest_path(g: Graph, forest: SpanningForest, start: int, goal: int) -> list[tuple[int, int]]:
    """Edges ``(index, sign)`` along the forest path from ``start`` to ``goal``.

    ``sign`` is +1 when the path runs along the edge's orientation.
    """
    if start == goal:
        return []
    adj: dict[int, list[tuple[int, int]]] = {}
    for e in forest.edge_indices:
        u, v = g.edges[e]
        adj.setdefault(u, []).append((v, e))
        adj.setdefault(v, []).append((u, e))
    prev: dict[int, tuple[int, int]] = {start: (-1, -1)}
    frontier = [start]
    while frontier and goal not in prev:
        nxt = []
        for x in frontier:
            for y, e in adj.get(x, ()):
                if y not in prev:
                    prev[y] = (x, e)
                    nxt.append(y)
        frontier = nxt
    if goal not in prev:
        raise ValueError(f"vertices {start} and {goal} lie in different trees of the forest")
    path = []
    y = goal
    while y != start:
        x, e = prev[y]
        path.append((e, 1 if g.edges[e] == (x, y) else -1))
        y = x
    path.reverse()
    return path


def fundamental_basis(g: Graph, f: SpanningForest) -> CycleBasis:
    """One cycle per non-forest edge ``e = (u, v)``: ``e`` then the forest path ``v -> u``.

    ``e`` always has coefficient +1; a loop is the unit vector at itself.
    """
    cycles, labels = [], []
    for e, (u, v) in enumerate(g.edges):
        if e in f:
            continue
        vec = [0] * g.edge_count
        vec[e] = 1
        for pe, sign in _forest_path(g, f, v, u):
            vec[pe] += sign
        cycles.append(tuple(vec))
        labels.append(e)
    return CycleBasis(tuple(cycles), tuple(labels))


def eta_table(g: Graph, b: CycleBasis) -> EtaTable:
    return EtaTable(tuple(tuple(cyc[e] for cyc in b.cycles) for e in range(g.edge_count)))


def build_cycle_arrangement(g: Graph, forest: SpanningForest | None = None) -> Arrangement:
    """``A_G`` in the coordinates of a fundamental basis.

    Uses the greedy forest unless another one is supplied.
    """
    if forest is None:
        forest = spanning_forest(g)
    basis = fundamental_basis(g, forest)
    eta = eta_table(g, basis)
    return normalize([r for r in eta.rows if any(r)], len(basis))


def is_separated(b: CycleBasis) -> bool:
    """No edge carries a nonzero coefficient in two different basis cycles."""
    used = set()
    for cyc in b.cycles:
        for e, c in enumerate(cyc):
            if c not in (-1, 0, 1):
                raise NonSimpleCycle(f"coefficient {c} on edge {e} is not in {{-1, 0, 1}}")
            if c:
                if e in used:
                    return False
                used.add(e)
    return True


def _shared_edge(b: CycleBasis) -> tuple[int, list[int]] | None:
    owners: dict[int, list[int]] = {}
    for j, cyc in enumerate(b.cycles):
        for e, c in enumerate(cyc):
            if c:
                owners.setdefault(e, []).append(j)
    for e in sorted(owners):
        if len(owners[e]) > 1:
            return e, owners[e]
    return None


# --- blocks ---------------------------------------------------------------

def blocks(g: Graph) -> list[list[int]]:
    """Biconnected blocks as lists of edge indices.

    Parallel edges stay in one block; each loop is a block of its own.
    """
    adj: list[list[tuple[int, int]]] = [[] for _ in range(g.vertex_count)]
    for e, (u, v) in enumerate(g.edges):
        if u != v:
            adj[u].append((v, e))
            adj[v].append((u, e))
    disc = [-1] * g.vertex_count
    low = [0] * g.vertex_count
    clock = 0
    out: list[list[int]] = []
    for root in range(g.vertex_count):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = clock
        clock += 1
        stack = [(root, -1, iter(adj[root]))]
        edge_stack: list[int] = []
        while stack:
            v, parent_edge, it = stack[-1]
            descended = False
            for w, e in it:
                if e == parent_edge:
                    continue
                if disc[w] == -1:
                    edge_stack.append(e)
                    disc[w] = low[w] = clock
                    clock += 1
                    stack.append((w, e, iter(adj[w])))
                    descended = True
                    break
                if disc[w] < disc[v]:
                    edge_stack.append(e)
                    low[v] = min(low[v], disc[w])
            if descended:
                continue
            stack.pop()
            if stack:
                u = stack[-1][0]
                low[u] = min(low[u], low[v])
                if low[v] >= disc[u]:
                    block = []
                    while True:
                        e = edge_stack.pop()
                        block.append(e)
                        if e == parent_edge:
                            break
                    out.append(sorted(block))
    out.extend([e] for e in g.loops())
    return out


def _block_betti(g: Graph, block: Sequence[int]) -> int:
    verts = {x for e in block for x in g.edges[e]}
    return len(block) - len(verts) + 1


def is_cactus(g: Graph) -> bool:
    """Every block has first Betti number at most one."""
    return all(_block_betti(g, b) <= 1 for b in blocks(g))


# --- spanning forest enumeration ------------------------------------------

def spanning_forest_count(g: Graph) -> int:
    """Number of spanning forests (maximal), by the matrix-tree theorem per component."""
    uf = UnionFind(g.vertex_count)
    for u, v in g.edges:
        uf.union(u, v)
    comps: dict[int, list[int]] = {}
    for x in range(g.vertex_count):
        comps.setdefault(uf.find(x), []).append(x)
    total = 1
    for verts in comps.values():
        if len(verts) == 1:
            continue
        pos = {x: i for i, x in enumerate(verts)}
        k = len(verts)
        lap = [[0] * k for _ in range(k)]
        for u, v in g.edges:
            if u == v or u not in pos:
                continue
            i, j = pos[u], pos[v]
            lap[i][i] += 1
            lap[j][j] += 1
            lap[i][j] -= 1
            lap[j][i] -= 1
        minor = [row[1:] for row in lap[1:]]
        total *= int(linalg.det(minor))
    return total


def iter_spanning_forests(g: Graph) -> Iterator[SpanningForest]:
    """Every spanning forest, by include/exclude backtracking over edges."""
    candidates = [e for e, (u, v) in enumerate(g.edges) if u != v]
    need = g.vertex_count - g.components()

    def rec(pos: int, chosen: list[int], labels: list[int]):
        if len(chosen) == need:
            yield SpanningForest(frozenset(chosen))
            return
        if len(candidates) - pos < need - len(chosen):
            return
        e = candidates[pos]
        u, v = g.edges[e]
        if labels[u] != labels[v]:
            old, new = labels[v], labels[u]
            merged = [new if x == old else x for x in labels]
            chosen.append(e)
            yield from rec(pos + 1, chosen, merged)
            chosen.pop()
        yield from rec(pos + 1, chosen, labels)

    yield from rec(0, [], list(range(g.vertex_count)))


def random_spanning_forest(g: Graph, rng: random.Random) -> SpanningForest:
    """Kruskal over a shuffled edge order (not uniform over forests)."""
    order = list(range(g.edge_count))
    rng.shuffle(order)
    uf = UnionFind(g.vertex_count)
    return SpanningForest(frozenset(e for e in order if uf.union(*g.edges[e])))


# --- the equivalence record -------------------------------------------------

CONDITION_NAMES = ("i", "ii", "iii", "iv", "v", "vi", "cactus")


@dataclass
class Theorem44Record:
    """All characterizations of torifiability for one graph, evaluated separately."""

    b1: int
    hyperplane_count: int
    conditions: dict[str, bool]
    verdict: bool
    witness: dict
    forests_checked: int
    forests_exhaustive: bool
    essential: bool
    arrangement: Arrangement = field(repr=False)
    basis: CycleBasis = field(repr=False)

    def to_dict(self) -> dict:
        return {
            "b1": self.b1,
            "hyperplane_count": self.hyperplane_count,
            "conditions": dict(self.conditions),
            "verdict": "torifiable" if self.verdict else "not_torifiable",
            "torifiable": self.verdict,
            "witness": self.witness,
            "forests_checked": self.forests_checked,
            "forests_exhaustive": self.forests_exhaustive,
            "essential": self.essential,
        }


def _forests_for_check(g: Graph, cap: int, samples: int, seed: int):
    if spanning_forest_count(g) <= cap:
        return list(iter_spanning_forests(g)), True
    rng = random.Random(seed)
    return [random_spanning_forest(g, rng) for _ in range(samples)], False


def theorem44_report(
    g: Graph,
    enumeration_cap: int = ENUMERATION_CAP,
    samples: int = SAMPLE_COUNT,
    seed: int = 0,
) -> Theorem44Record:
    """Evaluate every characterization of torifiability and demand agreement.

    (i) torifiable complement, (ii) ``A_G`` Boolean, (iii) ``|A_G| = b1``,
    (iv) every fundamental basis separated, (v) some fundamental basis
    separated, (vi) a separated basis exists, plus the block test.  Forests
    are enumerated when there are at most ``enumeration_cap`` of them,
    otherwise ``samples`` random ones are drawn.
    """
    forest = spanning_forest(g)
    basis = fundamental_basis(g, forest)
    eta = eta_table(g, basis)
    arr = normalize([r for r in eta.rows if any(r)], len(basis))
    b1 = g.betti1()
    if len(basis) != b1:
        raise InternalTheoremViolation(f"fundamental basis has {len(basis)} cycles, b1 = {b1}")
    essential = is_essential(arr)
    if not essential or arr.n < b1:
        raise InternalTheoremViolation(f"A_G not essential or too small: n={arr.n}, b1={b1}")

    cond_i = torification_verdict(arr).torifiable
    cond_ii = is_boolean(arr)
    cond_iii = arr.n == b1

    forests, exhaustive = _forests_for_check(g, enumeration_cap, samples, seed)
    separated = [is_separated(fundamental_basis(g, f)) for f in forests]
    cond_iv = all(separated)
    cond_v = any(separated)

    cond_vi = cond_iii and is_separated(basis)
    if cond_iii and not cond_vi:
        raise InternalTheoremViolation("|A_G| = b1 but the extracted fundamental basis is not separated")

    conditions = {
        "i": cond_i,
        "ii": cond_ii,
        "iii": cond_iii,
        "iv": cond_iv,
        "v": cond_v,
        "vi": cond_vi,
        "cactus": is_cactus(g),
    }
    if len(set(conditions.values())) != 1:
        raise InternalTheoremViolation(f"characterizations disagree on {g}: {conditions}")
    verdict = cond_ii

    if verdict:
        witness = {
            "kind": "separated_basis",
            "cycles": basis.supports(),
            "labels": list(basis.labels),
        }
    else:
        shared = _shared_edge(basis)
        if shared is None:
            raise InternalTheoremViolation("non-torifiable graph with a separated fundamental basis")
        e0, owners = shared
        witness = {
            "kind": "shared_edge",
            "edge": e0,
            "cycles": [basis.labels[j] for j in owners],
            "hyperplane_count": arr.n,
            "b1": b1,
        }
    return Theorem44Record(
        b1=b1,
        hyperplane_count=arr.n,
        conditions=conditions,
        verdict=verdict,
        witness=witness,
        forests_checked=len(forests),
        forests_exhaustive=exhaustive,
        essential=essential,
        arrangement=arr,
        basis=basis,
    )


# --- text format -----------------------------------------------------------

def parse_graph(text: str) -> Graph:
    """Parse ``graph vertices=<n>`` followed by ``edge <u> <v>`` lines."""
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if n is None:
            if len(tokens) != 2 or tokens[0] != "graph" or not tokens[1].startswith("vertices="):
                raise ParseError("expected 'graph vertices=<n>'", lineno)
            try:
                n = int(tokens[1][len("vertices="):])
            except ValueError:
                raise ParseError(f"bad vertex count {tokens[1]!r}", lineno) from None
            if n < 0:
                raise ParseError("vertex count must be nonnegative", lineno)
            continue
        if tokens[0] != "edge" or len(tokens) != 3:
            raise ParseError("expected 'edge <u> <v>'", lineno)
        try:
            u, v = int(tokens[1]), int(tokens[2])
        except ValueError:
            raise ParseError("edge endpoints must be integers", lineno) from None
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"edge ({u}, {v}) references a vertex outside 0..{n - 1}", lineno)
        edges.append((u, v))
    if n is None:
        raise ParseError("empty graph file")
    return Graph(n, tuple(edges))


def read_graph(path) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return parse_graph(fh.read())


def format_graph(g: Graph) -> str:
    lines = [f"graph vertices={g.vertex_count}"]
    lines.extend(f"edge {u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"
