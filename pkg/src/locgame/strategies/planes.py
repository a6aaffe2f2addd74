"""Cop strategies for symmetric, near-symmetric and affine designs with index 1.

All three share the same skeleton.  A scanning phase pins the robber to a set
of points on one block.  After that the cops alternate between the two sides:
with the robber known to be on a set C of vertices sharing the neighbour c,
they probe all of C but one vertex and spend the remaining cops on vertices
that split the next neighbourhoods, which shrinks the candidate set.  When C
has fewer than three vertices the probe on C is padded with further
neighbours of c so that c itself stays distinguishable.
"""
from __future__ import annotations

from ..designs import Design, validate_bibd
from ..errors import NotApplicable
from ..game import StrategyError
from ..generators import ResolvedDesign, check_resolution
from .common import DesignStrategy, common_neighbor, same_side

SYMMETRIC = "symmetric"
NEAR_SYMMETRIC = "near-symmetric"
AFFINE = "affine"


class PlaneStrategy(DesignStrategy):
    def __init__(self, design: Design, k: int, mode: str, classes=None, base_point: int = 0):
        super().__init__(design, k)
        self.mode = mode
        self.classes = classes
        g = self.graph
        if mode == AFFINE:
            blocks = [g.block_vertex(j) for j in classes[0]]
        else:
            blocks = sorted(g.adjacency[base_point])
        # all but the last block of the scanning frame carry a fixed cop
        self.frame = tuple(blocks[:-1])
        self.frame_all = frozenset(blocks)
        self._class_of = {}
        if classes is not None:
            for i, cls in enumerate(classes):
                for j in cls:
                    self._class_of[g.block_vertex(j)] = i

    def _in_structured_phase(self, transcript) -> bool:
        g = self.graph
        return self.phase_start(transcript, lambda c: all(g.is_point(x) for x in c)) is not None

    def next_placement(self, transcript):
        g = self.graph
        cell = transcript.last_cell
        if cell is None or not self._in_structured_phase(transcript):
            return self._scan(transcript)
        return self._step(cell)

    def state_key(self, transcript):
        return None

    def _scan(self, transcript):
        g = self.graph
        cell = transcript.last_cell
        pool = cell if cell is not None else frozenset(g.block_vertices)
        candidates = sorted(x for x in pool if not g.is_point(x) and x not in self.frame_all)
        rover = candidates[:1]
        return tuple(sorted(set(self.frame) | set(rover)))

    def _aux_candidates(self, cell, c: int, w: int) -> list[int]:
        g = self.graph
        if self.mode == AFFINE and not g.is_point(w):
            # blocks parallel to w; each meets every other block through c once
            cls = self.classes[self._class_of[w]]
            return [g.block_vertex(j) for j in cls if g.block_vertex(j) != w]
        y = min(g.adjacency[w] - {c})
        return sorted(g.adjacency[y] - {w})

    def _step(self, cell):
        g = self.graph
        if not same_side(g, cell):
            raise StrategyError(f"mixed cell {sorted(cell)}")
        c = common_neighbor(g, cell)
        if c is None:
            raise StrategyError(f"cell {sorted(cell)} has no common neighbour")
        members = sorted(cell)
        outside = sorted(g.adjacency[c] - cell)
        if not outside:
            raise StrategyError(f"cell {members} fills the neighbourhood of {c}")
        w = outside[0]
        probes = members[:-1]
        for x in outside[1:] + [w]:
            if len(probes) >= 2:
                break
            probes.append(x)
        aux = [x for x in self._aux_candidates(cell, c, w) if x not in probes]
        room = self.k - len(probes)
        return tuple(sorted(probes + aux[:room]))


def symmetric_strategy(design: Design) -> PlaneStrategy:
    """k cops on a symmetric BIBD with index 1 and k >= 3."""
    p = validate_bibd(design)
    if not (p.symmetric and p.lam == 1 and p.k >= 3):
        raise NotApplicable(f"needs a symmetric BIBD with index 1 and k >= 3, got {p}")
    st = PlaneStrategy(design, p.k, SYMMETRIC)
    st.theorem = "Thm3.2"
    return st


def near_symmetric_strategy(design: Design) -> PlaneStrategy:
    """k+1 cops on a BIBD(k^2, k^2+k, k+1, k, 1) with k >= 3."""
    p = validate_bibd(design)
    if not (p.lam == 1 and p.r == p.k + 1 and p.k >= 3):
        raise NotApplicable(f"needs index 1, r = k+1, k >= 3, got {p}")
    st = PlaneStrategy(design, p.k + 1, NEAR_SYMMETRIC)
    st.theorem = "Thm3.4"
    return st


def affine_strategy(ap: ResolvedDesign) -> PlaneStrategy:
    """k cops on an affine plane of order k >= 3, using one parallel class as a frame."""
    if not isinstance(ap, ResolvedDesign) or not check_resolution(ap):
        raise NotApplicable("needs an affine plane with a resolution")
    p = validate_bibd(ap.design)
    if not (p.lam == 1 and p.r == p.k + 1 and p.k >= 3):
        raise NotApplicable(f"needs an affine plane of order >= 3, got {p}")
    st = PlaneStrategy(ap.design, p.k, AFFINE, classes=ap.classes)
    st.theorem = "Thm3.6"
    return st
