"""The localization game on candidate sets.

The robber's territory is a set of vertices consistent with every probe so far.
Each round the cops place probes on the current territory, the territory is
split into cells of equal distance vector, the robber picks a non-singleton cell
and the next territory is that cell's closed neighbourhood.  The cops capture
the robber once every cell is a singleton.
"""
from __future__ import annotations

import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

import numpy as np

from .designs import Graph
from .errors import NotDelayedResolving

CAPTURED = "CAPTURED"
ONGOING = "ONGOING"
SURVIVED = "SURVIVED"

PROVEN = "PROVEN"
COUNTEREXAMPLE = "COUNTEREXAMPLE"
BUDGET_EXHAUSTED = "BUDGET_EXHAUSTED"

CandidateSet = frozenset


class StrategyError(Exception):
    """A strategy met a territory its rules do not cover."""


def expand(g: Graph, s: Iterable[int]) -> frozenset[int]:
    s = list(s)
    if not s:
        raise ValueError("candidate set must be non-empty")
    return g.closed_neighborhood(s)


def distance_vector(g: Graph, placement: Sequence[int], x: int) -> tuple[int, ...]:
    return tuple(int(g.dist[p, x]) for p in placement)


def partition_by_probe(
    g: Graph, s: Iterable[int], placement: Sequence[int]
) -> list[frozenset[int]]:
    """Cells of ``s`` with identical distance vectors, ordered by that vector."""
    return [cell for _, cell in keyed_partition(g, s, placement)]


def keyed_partition(
    g: Graph, s: Iterable[int], placement: Sequence[int]
) -> list[tuple[tuple[int, ...], frozenset[int]]]:
    verts = sorted(s)
    if not verts:
        raise ValueError("candidate set must be non-empty")
    probes = list(placement)
    if not probes:
        return [((), frozenset(verts))]
    block = g.dist[np.ix_(probes, verts)]
    groups: dict[tuple[int, ...], list[int]] = {}
    for col, x in zip(block.T.tolist(), verts):
        groups.setdefault(tuple(col), []).append(x)
    return [(key, frozenset(groups[key])) for key in sorted(groups)]


@dataclass(frozen=True)
class Round:
    territory: frozenset[int]
    placement: tuple[int, ...]
    vector: tuple[int, ...] | None
    cell: frozenset[int] | None  # None when every cell was a singleton


@dataclass(frozen=True)
class GameTranscript:
    initial: frozenset[int]
    rounds: tuple[Round, ...] = ()

    def __len__(self) -> int:
        return len(self.rounds)

    @property
    def captured(self) -> bool:
        return bool(self.rounds) and self.rounds[-1].cell is None

    @property
    def last_cell(self) -> frozenset[int] | None:
        return self.rounds[-1].cell if self.rounds else None

    def territory(self, g: Graph) -> frozenset[int]:
        """Territory the next probe will partition."""
        if not self.rounds:
            return self.initial
        cell = self.rounds[-1].cell
        if cell is None:
            raise ValueError("game already over")
        return expand(g, cell)

    def extend(self, rnd: Round) -> "GameTranscript":
        return GameTranscript(self.initial, self.rounds + (rnd,))


class CopStrategy:
    """Deterministic cop strategy: a function from transcript to placement.

    Subclasses implement :meth:`next_placement`.  :meth:`state_key` may return a
    hashable value that together with the current territory determines every
    future placement; verification then detects robber cycles.
    """

    name = "strategy"

    def __init__(self, graph: Graph, k: int):
        self.graph = graph
        self.k = k

    def next_placement(self, transcript: GameTranscript) -> Sequence[int]:
        raise NotImplementedError

    def state_key(self, transcript: GameTranscript):
        return None

    def __repr__(self) -> str:
        return f"<{type(self).__name__} k={self.k}>"


class FixedStrategy(CopStrategy):
    """Probe the same placement every round."""

    name = "fixed"

    def __init__(self, graph: Graph, placement: Iterable[int], k: int | None = None):
        placement = tuple(sorted(set(placement)))
        super().__init__(graph, len(placement) if k is None else k)
        self.placement = placement

    def next_placement(self, transcript):
        return self.placement

    def state_key(self, transcript):
        return 0


class FunctionStrategy(CopStrategy):
    def __init__(self, graph: Graph, k: int, fn: Callable[[GameTranscript], Sequence[int]], name="function"):
        super().__init__(graph, k)
        self.fn = fn
        self.name = name

    def next_placement(self, transcript):
        return self.fn(transcript)


class RobberAdversary:
    """Chooses one of the non-singleton cells offered after a probe."""

    def choose_class(self, cells: Sequence[frozenset[int]], transcript=None, placement=None) -> frozenset[int]:
        raise NotImplementedError


class FirstCellAdversary(RobberAdversary):
    def choose_class(self, cells, transcript=None, placement=None):
        return cells[0]


class MaxCellAdversary(RobberAdversary):
    """Largest cell; ties go to the cell with the smallest sorted vertex list."""

    def choose_class(self, cells, transcript=None, placement=None):
        return min(cells, key=lambda c: (-len(c), sorted(c)))


class RandomAdversary(RobberAdversary):
    def __init__(self, seed: int = 0):
        self.rng = random.Random(seed)

    def choose_class(self, cells, transcript=None, placement=None):
        return cells[self.rng.randrange(len(cells))]


def _check_placement(g: Graph, placement: Sequence[int], k: int) -> tuple[int, ...]:
    p = tuple(int(x) for x in placement)
    if len(set(p)) != len(p):
        raise ValueError(f"placement repeats a vertex: {p}")
    if len(p) > k:
        raise ValueError(f"placement uses {len(p)} probes, only {k} cops")
    if any(not 0 <= x < g.n for x in p):
        raise ValueError(f"placement outside the graph: {p}")
    return p


def step(g: Graph, s: Iterable[int], placement: Sequence[int], adv: RobberAdversary, transcript=None):
    """One probe on territory ``s``: returns (outcome, next territory, round record)."""
    s = frozenset(s)
    keyed = keyed_partition(g, s, placement)
    open_cells = [(key, c) for key, c in keyed if len(c) > 1]
    p = tuple(placement)
    if not open_cells:
        return CAPTURED, None, Round(s, p, None, None)
    cells = [c for _, c in open_cells]
    choice = adv.choose_class(cells, transcript=transcript, placement=p)
    for key, c in open_cells:
        if c == choice:
            return ONGOING, expand(g, c), Round(s, p, key, c)
    raise ValueError("adversary returned a cell that was not offered")


@dataclass
class PlayResult:
    outcome: str
    rounds: int
    transcript: GameTranscript


def play(g: Graph, cs: CopStrategy, adv: RobberAdversary, round_budget: int | None = None) -> PlayResult:
    budget = 4 * g.n if round_budget is None else round_budget
    tr = GameTranscript(frozenset(g.vertices))
    for i in range(budget):
        placement = _check_placement(g, cs.next_placement(tr), cs.k)
        outcome, _, rnd = step(g, tr.territory(g), placement, adv, transcript=tr)
        tr = tr.extend(rnd)
        if outcome == CAPTURED:
            return PlayResult(CAPTURED, i + 1, tr)
    return PlayResult(SURVIVED, budget, tr)


@dataclass
class Verdict:
    status: str
    max_rounds: int = 0
    transcript: GameTranscript | None = None
    nodes: int = 0
    reason: str = ""

    @property
    def proven(self) -> bool:
        return self.status == PROVEN

    def __str__(self) -> str:
        if self.status == PROVEN:
            return f"PROVEN rounds={self.max_rounds}"
        return f"{self.status} ({self.reason})"


class _Search:
    def __init__(self, g, cs, budget, node_budget):
        self.g = g
        self.cs = cs
        self.budget = budget
        self.node_budget = node_budget
        self.nodes = 0

    def run(self, tr: GameTranscript, seen: frozenset) -> Verdict:
        """Depth-first over all adversary choices from ``tr``."""
        g, cs = self.g, self.cs
        self.nodes += 1
        if self.nodes > self.node_budget:
            return Verdict(BUDGET_EXHAUSTED, transcript=tr, reason="node budget")
        territory = tr.territory(g)
        key = cs.state_key(tr)
        if key is not None:
            mark = (key, territory)
            if mark in seen:
                return Verdict(COUNTEREXAMPLE, transcript=tr, reason="robber repeats a position")
            seen = seen | {mark}
        try:
            placement = _check_placement(g, cs.next_placement(tr), cs.k)
        except (StrategyError, ValueError) as exc:
            return Verdict(COUNTEREXAMPLE, transcript=tr, reason=f"strategy failed: {exc}")
        keyed = keyed_partition(g, territory, placement)
        open_cells = [(k, c) for k, c in keyed if len(c) > 1]
        depth = len(tr) + 1
        if not open_cells:
            return Verdict(PROVEN, max_rounds=depth)
        if depth >= self.budget:
            return Verdict(BUDGET_EXHAUSTED, transcript=tr, reason="round budget")
        worst = 0
        pending = None
        for k, c in open_cells:
            sub = self.run(tr.extend(Round(territory, placement, k, c)), seen)
            if sub.status == COUNTEREXAMPLE:
                return sub
            if sub.status == BUDGET_EXHAUSTED:
                pending = pending or sub
                if sub.reason == "node budget":
                    return sub
                continue
            worst = max(worst, sub.max_rounds)
        return pending or Verdict(PROVEN, max_rounds=worst)


def verify_strategy_exhaustive(
    g: Graph,
    cs: CopStrategy,
    round_budget: int | None = None,
    node_budget: int = 2_000_000,
    threads: int = 1,
) -> Verdict:
    """Play ``cs`` against every adversary; PROVEN iff all branches are captured."""
    budget = 4 * g.n if round_budget is None else round_budget
    root = GameTranscript(frozenset(g.vertices))
    if threads <= 1:
        search = _Search(g, cs, budget, node_budget)
        verdict = search.run(root, frozenset())
        verdict.nodes = search.nodes
        return verdict
    # split on the first round's cells; results combine in cell order
    territory = root.territory(g)
    placement = _check_placement(g, cs.next_placement(root), cs.k)
    keyed = keyed_partition(g, territory, placement)
    open_cells = [(k, c) for k, c in keyed if len(c) > 1]
    if not open_cells:
        return Verdict(PROVEN, max_rounds=1, nodes=1)
    seen = frozenset()
    key = cs.state_key(root)
    if key is not None:
        seen = frozenset({(key, territory)})

    def branch(item):
        k, c = item
        search = _Search(g, cs, budget, node_budget)
        v = search.run(root.extend(Round(territory, placement, k, c)), seen)
        v.nodes = search.nodes
        return v

    with ThreadPoolExecutor(max_workers=threads) as pool:
        results = list(pool.map(branch, open_cells))
    nodes = 1 + sum(v.nodes for v in results)
    for v in results:
        if v.status == COUNTEREXAMPLE:
            v.nodes = nodes
            return v
    for v in results:
        if v.status == BUDGET_EXHAUSTED:
            v.nodes = nodes
            return v
    return Verdict(PROVEN, max_rounds=max(v.max_rounds for v in results), nodes=nodes)


def ambiguous_vertices(g: Graph, s: Iterable[int]) -> frozenset[int]:
    """Union of the classes of V(G) with at least two vertices, w.r.t. probes on ``s``."""
    cells = partition_by_probe(g, g.vertices, sorted(set(s)))
    return frozenset(x for c in cells if len(c) > 1 for x in c)


def is_delayed_resolving(g: Graph, s: Iterable[int]) -> bool:
    return g.is_independent(ambiguous_vertices(g, s))


class ScanningStrategy(CopStrategy):
    """Fixed probes on a delayed-resolving set plus one rover walking ``scan_order``."""

    name = "scanning"

    def __init__(self, g: Graph, s: Iterable[int], scan_order: Sequence[int], check: bool = True):
        fixed = tuple(sorted(set(s)))
        super().__init__(g, len(fixed) + 1)
        if check:
            if not is_delayed_resolving(g, fixed):
                raise NotDelayedResolving("probe set leaves adjacent ambiguous vertices")
            missing = ambiguous_vertices(g, fixed) - set(scan_order)
            if missing:
                raise ValueError(f"scan order misses ambiguous vertices {sorted(missing)}")
        self.fixed = fixed
        self.scan_order = tuple(scan_order)

    def next_placement(self, transcript):
        i = len(transcript)
        if i < len(self.scan_order):
            return tuple(sorted(set(self.fixed) | {self.scan_order[i]}))
        return self.fixed

    def state_key(self, transcript):
        return min(len(transcript), len(self.scan_order))


def scanning_strategy(g: Graph, s: Iterable[int], scan_order: Sequence[int] | None = None, check: bool = True) -> ScanningStrategy:
    if scan_order is None:
        scan_order = sorted(ambiguous_vertices(g, s))
    return ScanningStrategy(g, s, scan_order, check=check)


def transcript_lines(tr: GameTranscript) -> list[str]:
    lines = ["# locgame-format 1", "transcript initial " + " ".join(map(str, sorted(tr.initial)))]
    for i, rnd in enumerate(tr.rounds, 1):
        probes = " ".join(map(str, rnd.placement))
        if rnd.cell is None:
            lines.append(f"round {i} probes {probes} captured")
        else:
            vec = " ".join(map(str, rnd.vector))
            cell = " ".join(map(str, sorted(rnd.cell)))
            lines.append(f"round {i} probes {probes} vector {vec} cell {cell}")
    return lines


def parse_transcript(lines: Iterable[str], g: Graph) -> GameTranscript:
    tr = None
    for raw in lines:
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] == "transcript":
            tr = GameTranscript(frozenset(int(x) for x in parts[2:]))
        elif parts[0] == "round":
            if tr is None:
                raise ValueError("round before transcript header")
            territory = tr.territory(g)
            rest = parts[2:]
            if "captured" in rest:
                probes = tuple(int(x) for x in rest[1 : rest.index("captured")])
                tr = tr.extend(Round(territory, probes, None, None))
            else:
                vi, ci = rest.index("vector"), rest.index("cell")
                probes = tuple(int(x) for x in rest[1:vi])
                vec = tuple(int(x) for x in rest[vi + 1 : ci])
                cell = frozenset(int(x) for x in rest[ci + 1 :])
                tr = tr.extend(Round(territory, probes, vec, cell))
        else:
            raise ValueError(f"unrecognized transcript line: {line!r}")
    if tr is None:
        raise ValueError("no transcript header")
    return tr
