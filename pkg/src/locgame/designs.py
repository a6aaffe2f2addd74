"""Block designs, their incidence graphs and exact hop distances.

Vertices of an incidence graph are numbered points first: ``0..v-1`` are the
points and ``v..v+b-1`` the blocks, in input order.
"""
from __future__ import annotations

import itertools
from collections import Counter, deque
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterable, Sequence

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import shortest_path

from .errors import (
    DisconnectedGraph,
    EmptyDesign,
    NotUniform,
    PairCountViolation,
)

POINT = "P"
BLOCK = "B"

# sentinel stored in distance matrices for unreachable pairs
UNREACHABLE = -1


@dataclass(frozen=True)
class Design:
    v: int
    blocks: tuple[tuple[int, ...], ...]

    def __init__(self, v: int, blocks: Iterable[Iterable[int]]):
        if v < 0:
            raise ValueError("point count must be non-negative")
        normalized = []
        for i, blk in enumerate(blocks):
            pts = tuple(int(p) for p in blk)
            if len(set(pts)) != len(pts):
                raise ValueError(f"block {i} repeats a point: {pts}")
            for p in pts:
                if not 0 <= p < v:
                    raise ValueError(f"block {i} has point {p} outside [0, {v})")
            normalized.append(tuple(sorted(pts)))
        object.__setattr__(self, "v", int(v))
        object.__setattr__(self, "blocks", tuple(normalized))

    @property
    def b(self) -> int:
        return len(self.blocks)

    def blocks_through(self, point: int) -> list[int]:
        return [j for j, blk in enumerate(self.blocks) if point in blk]

    def point_replication(self) -> list[int]:
        counts = [0] * self.v
        for blk in self.blocks:
            for p in blk:
                counts[p] += 1
        return counts


@dataclass(frozen=True)
class DesignParams:
    v: int
    b: int
    r: int
    k: int
    lam: int
    symmetric: bool
    simple: bool

    def as_tuple(self) -> tuple[int, int, int, int, int]:
        return (self.v, self.b, self.r, self.k, self.lam)

    def __str__(self) -> str:
        return "BIBD({},{},{},{},{})".format(*self.as_tuple())


def _require_blocks(design: Design) -> int:
    if design.v == 0 or design.b == 0:
        raise EmptyDesign("design has no points or no blocks")
    sizes = {len(blk) for blk in design.blocks}
    if len(sizes) != 1:
        raise NotUniform(f"block sizes differ: {sorted(sizes)}")
    return sizes.pop()


def _pair_counts(design: Design) -> Counter:
    counts: Counter = Counter()
    for blk in design.blocks:
        counts.update(itertools.combinations(blk, 2))
    return counts


def validate_bibd(design: Design) -> DesignParams:
    """Check the BIBD axioms and return the parameters.

    Raises PairCountViolation naming the lexicographically smallest pair whose
    count differs from the index (taken as the most frequent pair count).
    """
    k = _require_blocks(design)
    v, b = design.v, design.b
    if v < 2:
        raise EmptyDesign("a BIBD needs at least two points")
    reps = design.point_replication()
    counts = _pair_counts(design)
    # the index is the most frequent pair count; every other count is a violation
    freq = Counter(counts.get(pair, 0) for pair in itertools.combinations(range(v), 2))
    lam = max(freq, key=lambda c: (freq[c], c))
    for pair in itertools.combinations(range(v), 2):
        c = counts.get(pair, 0)
        if c != lam:
            raise PairCountViolation(pair, c, lam)
    if lam == 0:
        raise PairCountViolation((0, 1), 0, 1)
    r = reps[0]
    assert v * r == b * k and lam * (v - 1) == r * (k - 1)
    simple = len(set(design.blocks)) == b
    return DesignParams(v, b, r, k, lam, symmetric=(v == b), simple=simple)


def first_uncovered_subset(design: Design, t: int) -> tuple[int, ...] | None:
    """Return the first t-subset of points not in exactly one block, else None."""
    counts: Counter = Counter()
    for blk in design.blocks:
        counts.update(itertools.combinations(blk, t))
    for sub in itertools.combinations(range(design.v), t):
        if counts.get(sub, 0) != 1:
            return sub
    return None


class SteinerCheck:
    """Truthy result of :func:`validate_steiner` carrying the first violation."""

    def __init__(self, ok: bool, violation: tuple[int, ...] | None = None):
        self.ok = ok
        self.violation = violation

    def __bool__(self) -> bool:
        return self.ok

    def __repr__(self) -> str:
        return f"SteinerCheck(ok={self.ok}, violation={self.violation})"


def validate_steiner(design: Design, t: int) -> SteinerCheck:
    if design.b == 0:
        return SteinerCheck(False, None)
    sizes = {len(blk) for blk in design.blocks}
    if len(sizes) != 1:
        return SteinerCheck(False, None)
    k = sizes.pop()
    if t < 2:
        raise ValueError(f"need t >= 2, got {t}")
    if t > min(k, design.v):
        return SteinerCheck(False, tuple(range(t)) if t <= design.v else None)
    bad = first_uncovered_subset(design, t)
    return SteinerCheck(bad is None, bad)


def repetition_number(t: int, k: int, v: int) -> Fraction:
    """Blocks through a point of an S(t, k, v); non-integral means inadmissible."""
    if not t < k < v:
        raise ValueError("need t < k < v")
    return Fraction(comb(v - 1, t - 1), comb(k - 1, t - 1))


class Graph:
    """Simple undirected graph with an eagerly computed distance matrix."""

    def __init__(self, n: int, edges: Iterable[tuple[int, int]], name: str = ""):
        adj: list[set[int]] = [set() for _ in range(n)]
        for a, b in edges:
            if a == b:
                raise ValueError("loops are not allowed")
            adj[a].add(b)
            adj[b].add(a)
        self.n = n
        self.name = name
        self.adjacency: tuple[frozenset[int], ...] = tuple(frozenset(s) for s in adj)
        self.dist = _all_pairs_hops(n, self.adjacency)

    @classmethod
    def from_adjacency(cls, adjacency: Sequence[Iterable[int]], name: str = "") -> "Graph":
        edges = [(a, b) for a, nbrs in enumerate(adjacency) for b in nbrs if a < b]
        return cls(len(adjacency), edges, name=name)

    @property
    def vertices(self) -> range:
        return range(self.n)

    def edges(self) -> list[tuple[int, int]]:
        return [(a, b) for a in range(self.n) for b in sorted(self.adjacency[a]) if a < b]

    def neighbors(self, u: int) -> frozenset[int]:
        return self.adjacency[u]

    def degree(self, u: int) -> int:
        return len(self.adjacency[u])

    def is_connected(self) -> bool:
        return self.n == 0 or bool(np.all(self.dist >= 0))

    def closed_neighborhood(self, vertices: Iterable[int]) -> frozenset[int]:
        out = set()
        for u in vertices:
            out.add(u)
            out.update(self.adjacency[u])
        return frozenset(out)

    def is_independent(self, vertices: Iterable[int]) -> bool:
        vs = set(vertices)
        return all(not (self.adjacency[u] & vs) for u in vs)

    def girth(self) -> float:
        """Length of a shortest cycle (inf for forests), exhaustive BFS from every vertex."""
        best = float("inf")
        for s in range(self.n):
            depth = {s: 0}
            parent = {s: -1}
            queue = deque([s])
            while queue:
                x = queue.popleft()
                for y in self.adjacency[x]:
                    if y not in depth:
                        depth[y] = depth[x] + 1
                        parent[y] = x
                        queue.append(y)
                    elif parent[x] != y:
                        best = min(best, depth[x] + depth[y] + 1)
        return best

    def __repr__(self) -> str:
        label = f" {self.name}" if self.name else ""
        return f"<Graph{label} n={self.n} m={len(self.edges())}>"


def _all_pairs_hops(n: int, adjacency: Sequence[frozenset[int]]) -> np.ndarray:
    if n == 0:
        return np.zeros((0, 0), dtype=np.int32)
    rows = [a for a in range(n) for _ in adjacency[a]]
    cols = [b for a in range(n) for b in sorted(adjacency[a])]
    mat = csr_matrix((np.ones(len(rows)), (rows, cols)), shape=(n, n))
    d = shortest_path(mat, method="D", unweighted=True, directed=False)
    out = np.full((n, n), UNREACHABLE, dtype=np.int32)
    finite = np.isfinite(d)
    out[finite] = d[finite].astype(np.int32)
    return out


class IncidenceGraph(Graph):
    """Point-block incidence (Levi) graph of a design."""

    def __init__(self, design: Design, name: str = ""):
        v = design.v
        edges = [(p, v + j) for j, blk in enumerate(design.blocks) for p in blk]
        super().__init__(v + design.b, edges, name=name)
        self.design = design
        self.v = v
        self.b = design.b
        self.side: tuple[str, ...] = tuple([POINT] * v + [BLOCK] * design.b)

    def block_vertex(self, j: int) -> int:
        return self.v + j

    def block_index(self, vertex: int) -> int:
        return vertex - self.v

    def is_point(self, vertex: int) -> bool:
        return vertex < self.v

    @property
    def points(self) -> range:
        return range(self.v)

    @property
    def block_vertices(self) -> range:
        return range(self.v, self.n)


def incidence_graph(design: Design, name: str = "") -> IncidenceGraph:
    g = IncidenceGraph(design, name=name)
    if not g.is_connected():
        raise DisconnectedGraph("incidence graph is disconnected")
    return g


def degree_census(g: IncidenceGraph) -> tuple[set[int], set[int]]:
    """Sets of point degrees and block degrees."""
    return (
        {g.degree(x) for x in g.points},
        {g.degree(x) for x in g.block_vertices},
    )
