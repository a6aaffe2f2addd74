"""Robber adversaries from the lower-bound arguments, as cell choosers.

Each adversary keeps a cell that witnesses a survival invariant: the cell
holds two vertices of one side (symmetric designs), or two points or enough
blocks through a common point (general index-1 designs).  If no offered cell
is a witness the adversary raises InvariantViolation, so a clean run is a
check of the invariant.
"""
from __future__ import annotations

import itertools
import random
from collections import Counter
from fractions import Fraction

from ..designs import Design, IncidenceGraph, incidence_graph, validate_bibd
from ..errors import InvariantViolation, NotApplicable
from ..game import CopStrategy, RobberAdversary, expand, partition_by_probe


class WitnessRobber(RobberAdversary):
    def __init__(self, graph: IncidenceGraph):
        self.graph = graph

    def is_witness(self, cell) -> bool:
        raise NotImplementedError

    def choose_class(self, cells, transcript=None, placement=None):
        good = [c for c in cells if self.is_witness(c)]
        if not good:
            raise InvariantViolation(
                f"no witness among {len(cells)} cells for placement {sorted(placement or ())}"
            )
        return min(good, key=lambda c: (-len(c), sorted(c)))


class SymmetricRobber(WitnessRobber):
    """Keep two vertices of the same side in the candidate cell."""

    def __init__(self, design: Design, cop_count: int, graph: IncidenceGraph | None = None):
        p = validate_bibd(design)
        if not (p.symmetric and p.lam == 1):
            raise NotApplicable(f"needs a symmetric BIBD with index 1, got {p}")
        if not 1 <= cop_count <= p.k - 1:
            raise NotApplicable(f"survives at most k-1 = {p.k - 1} cops, asked for {cop_count}")
        super().__init__(graph if graph is not None else incidence_graph(design))
        self.cop_count = cop_count

    def is_witness(self, cell) -> bool:
        sides = Counter(self.graph.is_point(x) for x in cell)
        return max(sides.values(), default=0) >= 2


def symmetric_robber(design: Design, cop_count: int, graph: IncidenceGraph | None = None) -> SymmetricRobber:
    return SymmetricRobber(design, cop_count, graph)


def general_lower_d(r: int, k: int) -> int | None:
    """Largest d >= 1 allowed by the index-1 robber argument, or None."""
    alpha = min(k, r - k)
    if k >= r or alpha <= 0:
        return None
    second = Fraction(2 * r * (k - 1) - 2, k + 1 + 2 * (k - 1) * alpha)
    escape = max(Fraction(k), second)
    best = None
    d = 1
    while Fraction(d) <= Fraction(r - 2, alpha) and d < escape:
        best = d
        d += 1
    return best


class GeneralRobber(WitnessRobber):
    """Keep two points, or r - d*alpha blocks through a common point."""

    def __init__(self, design: Design, d: int, graph: IncidenceGraph | None = None):
        p = validate_bibd(design)
        if p.lam != 1 or p.k >= p.r:
            raise NotApplicable(f"needs index 1 and k < r, got {p}")
        top = general_lower_d(p.r, p.k)
        if top is None or not 1 <= d <= top:
            raise NotApplicable(f"d = {d} outside the admissible range 1..{top}")
        super().__init__(graph if graph is not None else incidence_graph(design))
        self.d = d
        self.alpha = min(p.k, p.r - p.k)
        self.block_floor = max(2, p.r - d * self.alpha)

    def is_witness(self, cell) -> bool:
        g = self.graph
        points = [x for x in cell if g.is_point(x)]
        if len(points) >= 2:
            return True
        blocks = [x for x in cell if not g.is_point(x)]
        if len(blocks) < self.block_floor:
            return False
        through = Counter(p for x in blocks for p in g.adjacency[x])
        return max(through.values()) >= self.block_floor


def general_robber(design: Design, d: int, graph: IncidenceGraph | None = None) -> GeneralRobber:
    return GeneralRobber(design, d, graph)


class RandomPlacementStrategy(CopStrategy):
    """Seeded random placements of exactly k distinct vertices, for stress runs."""

    def __init__(self, graph, k: int, seed: int = 0):
        super().__init__(graph, k)
        self.seed = seed
        self.rng = random.Random(seed)

    def next_placement(self, transcript):
        return tuple(sorted(self.rng.sample(range(self.graph.n), self.k)))


def exhaustive_invariant_check(robber: WitnessRobber, k: int, depth: int | None = None) -> tuple[bool, int]:
    """Check the robber against every sequence of placements of at most k vertices.

    The search runs over reachable territories, each expanded once, up to
    ``depth`` rounds or until no new territory appears (``depth=None``).
    Returns (invariant held, number of distinct territories reached).
    """
    g = robber.graph
    placements = [p for size in range(1, k + 1) for p in itertools.combinations(range(g.n), size)]
    start = frozenset(range(g.n))
    seen = {start}
    frontier = [start]
    rounds = 0
    while frontier and (depth is None or rounds < depth):
        nxt = set()
        for terr in frontier:
            for p in placements:
                cells = [c for c in partition_by_probe(g, terr, p) if len(c) > 1]
                try:
                    cell = robber.choose_class(cells, placement=p)
                except InvariantViolation:
                    return False, len(seen)
                nxt.add(expand(g, cell))
        frontier = sorted(nxt - seen, key=sorted)
        seen |= nxt
        rounds += 1
    return True, len(seen)


__all__ = [
    "SymmetricRobber",
    "GeneralRobber",
    "RandomPlacementStrategy",
    "symmetric_robber",
    "general_robber",
    "general_lower_d",
    "exhaustive_invariant_check",
]
