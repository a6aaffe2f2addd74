"""The f-function of a BIBD and the scanning strategies built on delayed-resolving sets."""
from __future__ import annotations

from dataclasses import dataclass

from ..designs import Design, IncidenceGraph, incidence_graph, validate_bibd
from ..errors import NotApplicable
from ..game import ScanningStrategy, ambiguous_vertices
from .common import pair_index


@dataclass(frozen=True)
class FPartition:
    base: int
    cells: tuple[tuple[int, ...], ...]

    @property
    def f(self) -> int:
        return sum(len(c) - 1 for c in self.cells)


def f_partition(design: Design, u: int) -> FPartition:
    """Split the other points by the set of blocks they share with ``u``."""
    through_u = [j for j, blk in enumerate(design.blocks) if u in blk]
    groups: dict[tuple[int, ...], list[int]] = {}
    for x in range(design.v):
        if x == u:
            continue
        key = tuple(j for j in through_u if x in design.blocks[j])
        groups.setdefault(key, []).append(x)
    cells = sorted(tuple(c) for c in groups.values())
    return FPartition(u, tuple(cells))


def f_value(design: Design, u: int) -> int:
    return f_partition(design, u).f


def f_of_design(design: Design) -> int:
    return min(f_value(design, u) for u in range(design.v))


def two_design_set(design: Design, u: int, u2: int, graph: IncidenceGraph | None = None) -> frozenset[int]:
    """Delayed-resolving set N(u) + N(u') + N(v) minus {u, u', v} for the common block v."""
    if pair_index(design) != 1:
        raise NotApplicable("needs every point pair in exactly one block")
    if u == u2:
        raise ValueError("u and u' must differ")
    g = graph if graph is not None else incidence_graph(design)
    nu, nu2 = g.adjacency[u], g.adjacency[u2]
    if len(nu) < 2 or len(nu2) < 2:
        raise NotApplicable("both points need degree at least 2")
    (v,) = nu & nu2
    return frozenset((nu | nu2 | g.adjacency[v]) - {u, u2, v})


class TwoDesignStrategy(ScanningStrategy):
    theorem = "Thm2.2"

    def __init__(self, design: Design, u: int = 0, u2: int = 1, graph=None):
        g = graph if graph is not None else incidence_graph(design)
        s = two_design_set(design, u, u2, graph=g)
        super().__init__(g, s, sorted(ambiguous_vertices(g, s)))
        self.design = design


def two_design_strategy(design: Design, u: int = 0, u2: int = 1, graph=None) -> TwoDesignStrategy:
    """Scanning over the two-point set; |N(u)| + |N(u')| + |N(v)| - 3 cops."""
    return TwoDesignStrategy(design, u, u2, graph=graph)


def general_bibd_set(design: Design, graph: IncidenceGraph | None = None) -> tuple[int, frozenset[int]]:
    """Base point minimizing f and the delayed-resolving set N(u) + (cells minus one point)."""
    g = graph if graph is not None else incidence_graph(design)
    best = min(range(design.v), key=lambda u: (f_value(design, u), u))
    part = f_partition(design, best)
    s = set(g.adjacency[best])
    for cell in part.cells:
        s.update(cell[:-1])
    return best, frozenset(s)


class GeneralBIBDStrategy(ScanningStrategy):
    theorem = "Thm2.4"

    def __init__(self, design: Design, graph=None):
        params = validate_bibd(design)
        if not 2 <= params.lam <= params.r - 1:
            raise NotApplicable(f"needs 2 <= lambda <= r-1, got {params}")
        g = graph if graph is not None else incidence_graph(design)
        self.base, s = general_bibd_set(design, graph=g)
        super().__init__(g, s, sorted(ambiguous_vertices(g, s)))
        self.design = design
        self.params = params


def general_bibd_strategy(design: Design, graph=None) -> GeneralBIBDStrategy:
    """Scanning strategy with f(G) + r + 1 cops."""
    return GeneralBIBDStrategy(design, graph=graph)
