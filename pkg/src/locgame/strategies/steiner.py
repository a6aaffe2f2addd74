"""Strategies for Steiner triple and quadruple systems, and the exact packing search."""
from __future__ import annotations

from dataclasses import dataclass

from ..designs import Design, validate_bibd, validate_steiner
from ..errors import BudgetExhausted, NotApplicable
from ..game import StrategyError, partition_by_probe
from .common import DesignStrategy


def _steiner_strength(design: Design) -> tuple[int, int] | None:
    """(t, k) for the largest t making the design an S(t, k, v), else None."""
    sizes = {len(b) for b in design.blocks}
    if len(sizes) != 1:
        return None
    k = sizes.pop()
    for t in range(k - 1, 1, -1):
        if k < design.v and validate_steiner(design, t):
            return t, k
    return None


def is_sts(design: Design) -> bool:
    try:
        p = validate_bibd(design)
    except Exception:
        return False
    return p.k == 3 and p.lam == 1 and design.v >= 7


class STSHalfStrategy(DesignStrategy):
    """(v+1)/2 cops alternating between the halves A and B of the point set."""

    theorem = "Thm4.2"

    def __init__(self, design: Design):
        if not is_sts(design):
            raise NotApplicable("needs a Steiner triple system")
        super().__init__(design, (design.v + 1) // 2)
        self.A = tuple(range(self.k))
        self.B = tuple(range(self.k, design.v))
        self.a = self.A[0]

    def next_placement(self, transcript):
        g = self.graph
        cell = transcript.last_cell
        if cell is None:
            return self.A
        A = set(self.A)
        if all(g.is_point(x) for x in cell):
            if not cell <= set(self.B):
                raise StrategyError(f"point cell {sorted(cell)} meets A")
            return tuple(sorted(set(self.B) | {self.a}))
        if any(g.is_point(x) for x in cell):
            raise StrategyError("mixed cell")
        pts = [set(g.adjacency[x]) for x in cell]
        in_a = [p & A for p in pts]
        if all(not s for s in in_a):
            return tuple(sorted(set(self.B) | {self.a}))
        if all(len(s) == 1 for s in in_a) and len(set.intersection(*in_a)) == 1:
            (p,) = set.intersection(*in_a)
            return tuple(sorted(set(self.B) | {p}))
        in_b = [p - A for p in pts]
        if all(len(s) == 1 for s in in_b) and len(set.intersection(*in_b)) == 1:
            (q,) = set.intersection(*in_b)
            return tuple(sorted((A - {self.a}) | {q}))
        raise StrategyError(f"unexpected block cell {sorted(cell)}")


def sts_half_strategy(design: Design) -> STSHalfStrategy:
    return STSHalfStrategy(design)


@dataclass(frozen=True)
class Packing:
    blocks: tuple[int, ...]  # block indices, pairwise disjoint
    uncovered: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.blocks)


def max_partial_parallel_class(design: Design, node_budget: int = 5_000_000) -> Packing:
    """Maximum set of pairwise disjoint blocks by branch and bound.

    Branches on the lowest undecided point: cover it with a disjoint block
    through it, or leave it uncovered.  The bound is (free points) // k.
    """
    v = design.v
    masks = [sum(1 << p for p in blk) for blk in design.blocks]
    k = max((len(b) for b in design.blocks), default=1)
    through = [[j for j, blk in enumerate(design.blocks) if p in blk] for p in range(v)]
    best: list[int] = []
    nodes = 0
    ceiling = v // k

    def search(chosen: list[int], used: int, skipped: int):
        nonlocal best, nodes
        nodes += 1
        if nodes > node_budget:
            raise BudgetExhausted(f"packing search exceeded {node_budget} nodes")
        free = v - bin(used | skipped).count("1")
        if len(chosen) + free // k <= len(best):
            return
        p = next((x for x in range(v) if not (used | skipped) >> x & 1), None)
        if p is None:
            if len(chosen) > len(best):
                best = list(chosen)
            return
        for j in through[p]:
            if not masks[j] & used:
                chosen.append(j)
                search(chosen, used | masks[j], skipped)
                chosen.pop()
                if len(best) == ceiling:
                    return
        search(chosen, used, skipped | (1 << p))

    search([], 0, 0)
    covered = set(p for j in best for p in design.blocks[j])
    return Packing(tuple(sorted(best)), tuple(p for p in range(v) if p not in covered))


class MatchingStrategy(DesignStrategy):
    """Cops on a maximum packing and on its uncovered points, plus one rover.

    A robber found on blocks is settled by probing the points of the packing
    blocks those candidate blocks meet.  ``literal`` follows the triple-system
    case analysis (all points of the met packing blocks plus the shared
    uncovered point); otherwise every point of the candidate blocks but one is
    probed, which works for any S(t, k, v).
    """

    def __init__(self, design: Design, packing: Packing, k: int, literal: bool):
        super().__init__(design, k)
        g = self.graph
        self.packing = packing
        self.literal = literal
        self.base = tuple(sorted([g.block_vertex(j) for j in packing.blocks] + list(packing.uncovered)))
        self.packing_of = {}
        for j in packing.blocks:
            for p in design.blocks[j]:
                self.packing_of[p] = j
        self.first_rover = min(design.blocks[packing.blocks[0]]) if packing.blocks else 0

    def block_cell_probe(self, cell) -> list[int]:
        g = self.graph
        pts = set()
        for x in cell:
            pts.update(g.adjacency[x])
        if self.literal:
            met = {self.packing_of[p] for p in pts if p in self.packing_of}
            out = {p for p in pts if p not in self.packing_of}
            for j in met:
                out.update(self.design.blocks[j])
            return sorted(out)
        return sorted(pts)[:-1]

    def next_placement(self, transcript):
        g = self.graph
        cell = transcript.last_cell
        if cell is None:
            return tuple(sorted(set(self.base) | {self.first_rover}))
        if all(g.is_point(x) for x in cell):
            owners = {self.packing_of.get(p) for p in cell}
            if len(owners) != 1 or None in owners:
                raise StrategyError(f"point cell {sorted(cell)} is not inside one packing block")
            return tuple(sorted(set(self.base) | {min(cell)}))
        if any(g.is_point(x) for x in cell):
            raise StrategyError("mixed cell")
        probe = self.block_cell_probe(cell)
        if len(probe) > self.k:
            raise StrategyError(f"block cell needs {len(probe)} probes")
        return tuple(probe)


def sts_matching_strategy(design: Design, packing: Packing | None = None) -> MatchingStrategy:
    """t + |Q| + 1 cops from an exact maximum packing of a triple system."""
    if not is_sts(design):
        raise NotApplicable("needs a Steiner triple system")
    packing = packing or max_partial_parallel_class(design)
    k = packing.size + len(packing.uncovered) + 1
    if k < 9:
        raise NotApplicable(f"the case analysis needs at least 9 cops, packing gives {k}")
    st = MatchingStrategy(design, packing, k, literal=True)
    st.theorem = "Thm4.3"
    return st


def steiner_matching_strategy(
    design: Design, t: int | None = None, k: int | None = None, packing: Packing | None = None
) -> MatchingStrategy:
    """Packing strategy for an S(t, k, v); the cop count is what the case analysis needs.

    ``t`` and ``k`` are optional checks on the design parameters.
    """
    strength = _steiner_strength(design)
    if strength is None:
        raise NotApplicable("needs a Steiner system")
    if (t is not None and not (2 <= t < strength[1] and validate_steiner(design, t))) or (k is not None and strength[1] != k):
        raise NotApplicable(f"design is not an S({t}, {k}, {design.v})")
    packing = packing or max_partial_parallel_class(design)
    base = packing.size + len(packing.uncovered) + 1
    probe = MatchingStrategy(design, packing, base, literal=False)
    g = probe.graph
    cells = partition_by_probe(g, g.block_vertices, probe.base + (probe.first_rover,))
    need = max((len(probe.block_cell_probe(c)) for c in cells if len(c) > 1), default=0)
    st = MatchingStrategy(design, packing, max(base, need), literal=False)
    st.theorem = "Thm4.6"
    return st


class SQSStrategy(DesignStrategy):
    """v-3 cops: probe all points but three, then all points but three others."""

    theorem = "Thm4.5"

    def __init__(self, design: Design):
        strength = _steiner_strength(design)
        if strength != (3, 4) or design.v < 6:
            raise NotApplicable("needs an S(3, 4, v) with v >= 6")
        super().__init__(design, design.v - 3)

    def next_placement(self, transcript):
        g = self.graph
        cell = transcript.last_cell
        if cell is None:
            omit = {0, 1, 2}
        else:
            if not all(g.is_point(x) for x in cell):
                raise StrategyError(f"block cell {sorted(cell)} survived a probe")
            omit = set([p for p in range(self.design.v) if p not in cell][:3])
        return tuple(p for p in range(self.design.v) if p not in omit)


def sqs_strategy(design: Design) -> SQSStrategy:
    return SQSStrategy(design)
