"""Helpers shared by the theorem strategies."""
from __future__ import annotations

import itertools
from functools import reduce

from ..designs import Design, IncidenceGraph, incidence_graph
from ..game import CopStrategy, GameTranscript


def pair_index(design: Design) -> int | None:
    """Common index of all point pairs, or None when pairs are covered unevenly."""
    counts: dict[tuple[int, int], int] = {}
    for blk in design.blocks:
        for pair in itertools.combinations(blk, 2):
            counts[pair] = counts.get(pair, 0) + 1
    values = {counts.get(pair, 0) for pair in itertools.combinations(range(design.v), 2)}
    return values.pop() if len(values) == 1 else None


def common_neighbor(g: IncidenceGraph, cell) -> int | None:
    """Smallest vertex adjacent to every member of ``cell`` (None if there is none)."""
    cell = list(cell)
    if not cell:
        return None
    shared = reduce(lambda acc, x: acc & g.adjacency[x], cell[1:], set(g.adjacency[cell[0]]))
    return min(shared) if shared else None


def same_side(g: IncidenceGraph, cell) -> bool:
    sides = {g.is_point(x) for x in cell}
    return len(sides) == 1


class DesignStrategy(CopStrategy):
    """Cop strategy bound to a design and its incidence graph."""

    theorem = ""

    def __init__(self, design: Design, k: int, graph: IncidenceGraph | None = None):
        super().__init__(graph if graph is not None else incidence_graph(design), k)
        self.design = design

    def block_vertices_through(self, point: int) -> list[int]:
        return sorted(self.graph.adjacency[point])

    def phase_start(self, transcript: GameTranscript, predicate) -> int | None:
        """Index of the first round whose chosen cell satisfies ``predicate``."""
        for i, rnd in enumerate(transcript.rounds):
            if rnd.cell is not None and predicate(rnd.cell):
                return i
        return None
