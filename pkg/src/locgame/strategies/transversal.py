"""n+k-4 cops on the incidence graph of a transversal design TD(k, n), k >= 4."""
from __future__ import annotations

from ..errors import NotApplicable
from ..game import StrategyError
from ..generators import GroupedDesign, check_transversal
from .common import DesignStrategy, common_neighbor


class TDStrategy(DesignStrategy):
    """Scan with n-1 cops on the first group, then chase the robber through N(u) and N(v).

    A block cell around a point u is answered by probing every block through
    u; a point cell inside N(v) - {u}, where u is the first-group point of
    v, is answered by probing all of N(v) - {u} and G1 - {u} but one vertex
    each.  Any other point cell moves the scanning rover.
    """

    theorem = "Thm5.1"

    def __init__(self, td: GroupedDesign):
        if not isinstance(td, GroupedDesign) or not check_transversal(td):
            raise NotApplicable("needs a transversal design with its groups")
        if td.k < 4:
            raise NotApplicable(f"needs k >= 4, got TD({td.k},{td.n})")
        super().__init__(td.design, td.n + td.k - 4)
        self.td = td
        self.g1 = tuple(sorted(td.groups[0]))
        self.fixed = self.g1[:-1]

    def next_placement(self, transcript):
        g = self.graph
        cell = transcript.last_cell
        if cell is None:
            return self._scan(frozenset(g.points))
        if all(not g.is_point(x) for x in cell):
            u = common_neighbor(g, cell)
            if u is None:
                raise StrategyError(f"block cell {sorted(cell)} has no common point")
            return tuple(sorted(g.adjacency[u]))
        if any(not g.is_point(x) for x in cell):
            raise StrategyError("mixed cell")
        v = common_neighbor(g, cell)
        if v is not None:
            line = g.adjacency[v]
            (u,) = line & set(self.g1)
            if u not in cell:
                return tuple(sorted(sorted(line - {u})[:-1] + [x for x in self.g1 if x != u][:-1]))
        return self._scan(cell)

    def _scan(self, cell):
        rover = sorted(x for x in cell if x not in self.fixed)[:1]
        return tuple(sorted(set(self.fixed) | set(rover)))


def td_strategy(td: GroupedDesign) -> TDStrategy:
    return TDStrategy(td)
