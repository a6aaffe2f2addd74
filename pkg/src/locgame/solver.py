"""Exact solver for small graphs: who wins the localization game with k cops.

States are robber territories, stored as vertex bitmasks.  From the full
vertex set the solver explores every territory the robber can reach against
some placement, keeping for each state only the placements whose outcome is
not dominated by another placement.  A least fixpoint then assigns each state
its capture rank: 0 when one probe separates every vertex, otherwise one more
than the best placement's worst successor rank.

Two monotonicity facts justify the reductions.  A smaller territory is never
harder for the cops than a larger one, and a finer partition is never worse.
So only placements of exactly ``min(k, n)`` vertices are enumerated, and a
placement is dropped when each of another placement's successors fits inside
one of its own.

Certificates are checkable without the solver.  A cops certificate maps every
territory met along the strategy to a placement.  A robber certificate lists
territories from which the cops cannot win, each with the successor
territories the robber may aim for; it is valid when every placement of at
most k vertices leaves a non-singleton cell whose neighbourhood contains one
of those successors.
"""
from __future__ import annotations

import itertools
from collections import deque
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .designs import Graph
from .errors import BudgetExhausted
from .game import CopStrategy, RobberAdversary, expand, partition_by_probe

COPS_WIN = "COPS_WIN"
ROBBER_WINS = "ROBBER_WINS"
UNKNOWN = "UNKNOWN"

MAX_VERTICES = 62  # territories are int64-safe bitmasks


def to_mask(vertices) -> int:
    m = 0
    for x in vertices:
        m |= 1 << int(x)
    return m


def from_mask(mask: int) -> tuple[int, ...]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


@dataclass
class Certificate:
    kind: str  # COPS_WIN or ROBBER_WINS
    k: int
    n: int
    cops: dict[int, tuple[int, ...]] = field(default_factory=dict)
    robber: dict[int, tuple[int, ...]] = field(default_factory=dict)

    def __len__(self) -> int:
        return len(self.cops) if self.kind == COPS_WIN else len(self.robber)


@dataclass
class SolveResult:
    graph: str
    k: int
    status: str
    round_bound: int | None = None
    states: int = 0
    reason: str = ""
    certificate: Certificate | None = None

    def summary(self) -> str:
        if self.status == COPS_WIN:
            return f"{self.status} k={self.k} rounds={self.round_bound} states={self.states}"
        if self.status == ROBBER_WINS:
            return f"{self.status} k={self.k} states={self.states}"
        return f"{self.status} k={self.k} states={self.states} ({self.reason})"


class _Explorer:
    def __init__(self, g: Graph, k: int):
        self.g = g
        self.n = g.n
        self.k = min(k, g.n)
        base = int(g.dist.max()) + 1
        self.placements = np.array(list(itertools.combinations(range(self.n), self.k)), dtype=np.int64)
        # keys[p, v]: distance vector of v under placement p, packed into one integer
        if self.k * np.log2(base) < 62:
            weights = base ** np.arange(self.k, dtype=np.int64)
            self.keys = (g.dist[self.placements].astype(np.int64) * weights[None, :, None]).sum(axis=1)
        else:
            self.keys = np.array(
                [np.unique(g.dist[list(p)], axis=1, return_inverse=True)[1].ravel() for p in self.placements],
                dtype=np.int64,
            )
        self.bits = np.array([1 << v for v in range(self.n)], dtype=np.int64)
        self.closed = [to_mask(g.closed_neighborhood([v])) for v in range(self.n)]
        self._expand: dict[int, int] = {}

    def expand(self, cell: int) -> int:
        out = self._expand.get(cell)
        if out is None:
            out = 0
            for v in from_mask(cell):
                out |= self.closed[v]
            self._expand[cell] = out
        return out

    def options(self, state: int):
        """(capture placement or None, [(successor masks, placement index)]) for ``state``."""
        idx = np.array(from_mask(state), dtype=np.int64)
        ks = self.keys[:, idx]
        order = np.argsort(ks, axis=1, kind="stable")
        sk = np.take_along_axis(ks, order, axis=1)
        sb = self.bits[idx][order]
        m = len(idx)
        starts = np.ones_like(sk, dtype=bool)
        starts[:, 1:] = sk[:, 1:] != sk[:, :-1]
        csum = np.cumsum(sb, axis=1)
        # a run is non-singleton when the next position continues it
        cont = np.zeros_like(starts)
        cont[:, :-1] = ~starts[:, 1:]
        singles = starts & ~cont
        all_single = singles.all(axis=1)
        if all_single.any():
            return int(np.flatnonzero(all_single)[0]), []
        ends = np.ones_like(starts)
        ends[:, :-1] = starts[:, 1:]
        rows, cols_end = np.nonzero(ends & ~singles)
        start_pos = np.maximum.accumulate(np.where(starts, np.arange(m)[None, :], 0), axis=1)
        begin = start_pos[rows, cols_end]
        prev = np.where(begin > 0, csum[rows, np.maximum(begin - 1, 0)], 0)
        masks = csum[rows, cols_end] - prev
        seen: dict[frozenset, int] = {}
        for r, mask in _group_rows(rows.tolist(), masks.tolist()):
            succ = _antichain({self.expand(c) for c in mask})
            if succ not in seen:
                seen[succ] = r
        return None, _undominated(seen)


def _group_rows(rows, masks):
    cur, acc = None, []
    for r, mk in zip(rows, masks):
        if r != cur:
            if cur is not None:
                yield cur, acc
            cur, acc = r, []
        acc.append(mk)
    if cur is not None:
        yield cur, acc


def _antichain(succ: set[int]) -> frozenset:
    """Drop successors contained in another successor: they win whenever it does."""
    items = sorted(succ, key=lambda s: -bin(s).count("1"))
    keep: list[int] = []
    for s in items:
        if not any(s & ~t == 0 for t in keep):
            keep.append(s)
    return frozenset(keep)


def _undominated(options: dict[frozenset, int]) -> list[tuple[tuple[int, ...], int]]:
    """Keep options not beaten by another: B beats A if each successor of B lies in one of A's.

    Subset tests run on all distinct successors at once; two matrix products
    then give, for every pair (B, A), how many successors of B fit inside A.
    """
    items = sorted(options.items(), key=lambda kv: (len(kv[0]), sorted(kv[0]), kv[1]))
    if len(items) < 2:
        return [(tuple(sorted(o)), r) for o, r in items]
    succ = sorted({x for o, _ in items for x in o})
    where = {x: i for i, x in enumerate(succ)}
    sv = np.array(succ, dtype=np.int64)
    sub = ((sv[:, None] & ~sv[None, :]) == 0).astype(np.float32)  # sub[i, j]: s_i inside s_j
    inc = np.zeros((len(succ), len(items)), dtype=np.float32)
    for col, (o, _) in enumerate(items):
        inc[[where[x] for x in o], col] = 1.0
    covered = (sub @ inc) > 0  # covered[i, A]: s_i inside some successor of A
    fits = inc.T @ covered.astype(np.float32)  # fits[B, A]: successors of B covered by A
    sizes = inc.sum(axis=0)
    beats = fits >= sizes[:, None] - 0.5
    np.fill_diagonal(beats, False)
    # among mutually beating options the earlier one survives
    mutual = beats & beats.T
    beats &= ~(mutual & np.tri(len(items), k=-1, dtype=bool))
    keep = ~beats.any(axis=0)
    return [(tuple(sorted(items[i][0])), items[i][1]) for i in np.flatnonzero(keep)]


def can_win(
    g: Graph,
    k: int,
    max_states: int = 2_000_000,
    max_rounds: int | None = None,
    threads: int = 1,
    name: str = "",
) -> SolveResult:
    """Decide whether k cops win on ``g``; the result carries a checkable certificate."""
    if k < 1:
        raise ValueError("k must be at least 1")
    if g.n > MAX_VERTICES:
        raise ValueError(f"solver handles at most {MAX_VERTICES} vertices, got {g.n}")
    if not g.is_connected():
        raise ValueError("graph must be connected")
    name = name or g.name or f"graph(n={g.n})"
    rounds_cap = 3 * g.n if max_rounds is None else max_rounds
    ex = _Explorer(g, k)
    start = (1 << g.n) - 1
    ids = {start: 0}
    masks = [start]
    capture: dict[int, int] = {}
    opts: list[list[tuple[tuple[int, ...], int]]] = []
    frontier = [start]
    pool = ThreadPoolExecutor(max_workers=threads) if threads > 1 else None
    try:
        while frontier:
            results = list(pool.map(ex.options, frontier)) if pool else [ex.options(s) for s in frontier]
            nxt = []
            for state, (cap, options) in zip(frontier, results):
                sid = ids[state]
                while len(opts) <= sid:
                    opts.append([])
                if cap is not None:
                    capture[sid] = cap
                    continue
                conv = []
                for succ, pidx in options:
                    out = []
                    for s in succ:
                        if s not in ids:
                            ids[s] = len(masks)
                            masks.append(s)
                            nxt.append(s)
                        out.append(ids[s])
                    conv.append((tuple(out), pidx))
                opts[sid] = conv
                if len(masks) > max_states:
                    return SolveResult(name, k, UNKNOWN, states=len(masks), reason=f"state budget {max_states}")
            frontier = nxt
    finally:
        if pool:
            pool.shutdown()
    while len(opts) < len(masks):
        opts.append([])

    rank, choice = _ranks(len(masks), capture, opts)
    res = SolveResult(name, k, UNKNOWN, states=len(masks))
    if rank[0] is None:
        res.status = ROBBER_WINS
        res.certificate = _robber_certificate(ex, masks, rank, opts)
    elif rank[0] + 1 > rounds_cap:
        res.reason = f"capture needs {rank[0] + 1} rounds, budget {rounds_cap}"
    else:
        res.status = COPS_WIN
        res.round_bound = rank[0] + 1
        res.certificate = _cops_certificate(ex, masks, capture, opts, choice)
    return res


def _ranks(count, capture, opts):
    """Least-fixpoint capture ranks, computed in nondecreasing order."""
    rank: list[int | None] = [None] * count
    choice: list[int | None] = [None] * count
    pending = [[len(set(succ)) for succ, _ in o] for o in opts]
    worst = [[0] * len(o) for o in opts]
    parents: list[list[tuple[int, int]]] = [[] for _ in range(count)]
    for sid, o in enumerate(opts):
        for oi, (succ, _) in enumerate(o):
            for t in set(succ):
                parents[t].append((sid, oi))
    queue = deque()
    for sid in sorted(capture):
        rank[sid] = 0
        queue.append(sid)
    while queue:
        t = queue.popleft()
        for sid, oi in parents[t]:
            if rank[sid] is not None:
                continue
            pending[sid][oi] -= 1
            worst[sid][oi] = max(worst[sid][oi], rank[t])
            if pending[sid][oi] == 0:
                rank[sid] = worst[sid][oi] + 1
                choice[sid] = oi
                queue.append(sid)
    return rank, choice


def _cops_certificate(ex, masks, capture, opts, choice) -> Certificate:
    cert = Certificate(COPS_WIN, ex.k, ex.n)
    todo = [0]
    seen = {0}
    while todo:
        sid = todo.pop()
        if sid in capture:
            cert.cops[masks[sid]] = tuple(int(x) for x in ex.placements[capture[sid]])
            continue
        succ, pidx = opts[sid][choice[sid]]
        cert.cops[masks[sid]] = tuple(int(x) for x in ex.placements[pidx])
        for t in succ:
            if t not in seen:
                seen.add(t)
                todo.append(t)
    return cert


def _robber_certificate(ex, masks, rank, opts) -> Certificate:
    cert = Certificate(ROBBER_WINS, ex.k, ex.n)
    todo = [0]
    seen = {0}
    while todo:
        sid = todo.pop()
        safe = sorted({t for succ, _ in opts[sid] for t in succ if rank[t] is None})
        cert.robber[masks[sid]] = tuple(masks[t] for t in safe)
        for t in safe:
            if t not in seen:
                seen.add(t)
                todo.append(t)
    return cert


def extract_certificate(result: SolveResult) -> Certificate:
    if result.status == UNKNOWN or result.certificate is None:
        raise ValueError("no certificate for an undecided instance")
    return result.certificate


def localization_number(
    g: Graph, k_max: int | None = None, max_states: int = 2_000_000, max_rounds: int | None = None, threads: int = 1
) -> tuple[int, int, list[SolveResult]]:
    """(lower, upper, results) from an ascending search; lower == upper when decided."""
    k_max = g.n if k_max is None else k_max
    lower, results = 1, []
    for k in range(1, k_max + 1):
        res = can_win(g, k, max_states=max_states, max_rounds=max_rounds, threads=threads)
        results.append(res)
        if res.status == COPS_WIN:
            return lower, k, results
        if res.status == ROBBER_WINS:
            lower = k + 1
        else:
            # undecided: later k may still settle the upper end
            for k2 in range(k + 1, k_max + 1):
                r2 = can_win(g, k2, max_states=max_states, max_rounds=max_rounds, threads=threads)
                results.append(r2)
                if r2.status == COPS_WIN:
                    return lower, k2, results
            return lower, k_max + 1, results
    return lower, k_max + 1, results


# ---------------------------------------------------------------- replay


class CertificateStrategy(CopStrategy):
    """Cop strategy read off a cops certificate.

    Successors contained in another successor are not certified, so the
    strategy tracks a certified territory containing the real one (its
    shadow) and plays the shadow's placement.
    """

    def __init__(self, g: Graph, cert: Certificate):
        if cert.kind != COPS_WIN:
            raise ValueError("needs a cops certificate")
        super().__init__(g, cert.k)
        self.cert = cert

    def _successor(self, shadow: int, cell) -> int:
        placement = self.cert.cops[shadow]
        verts = from_mask(shadow)
        probe = next(iter(cell))
        reach = None
        succ = set()
        for c in partition_by_probe(self.graph, verts, placement):
            if len(c) < 2:
                continue
            m = to_mask(expand(self.graph, c))
            succ.add(m)
            if probe in c:
                reach = m
        if reach is None:
            raise ValueError("chosen cell is not inside the certified territory")
        options = [t for t in _antichain(succ) if reach & ~t == 0 and t in self.cert.cops]
        if not options:
            raise ValueError("territory missing from the certificate")
        return min(options)

    def _shadow(self, transcript) -> int:
        shadow = (1 << self.graph.n) - 1
        if shadow not in self.cert.cops:
            raise ValueError("initial territory missing from the certificate")
        for r in transcript.rounds:
            shadow = self._successor(shadow, r.cell)
        return shadow

    def next_placement(self, transcript):
        return self.cert.cops[self._shadow(transcript)]

    def state_key(self, transcript):
        try:
            return self._shadow(transcript)
        except ValueError:
            return None  # next_placement reports the failure


class CertificateRobber(RobberAdversary):
    """Robber following a robber certificate.

    It tracks a certified territory contained in the real one and always
    picks a cell whose neighbourhood still contains a certified successor.
    """

    def __init__(self, g: Graph, cert: Certificate):
        if cert.kind != ROBBER_WINS:
            raise ValueError("needs a robber certificate")
        self.g = g
        self.cert = cert
        self._trail: list[tuple[frozenset | None, int]] = []

    def _pick(self, shadow: int, cells):
        for cell in cells:
            reach = to_mask(expand(self.g, cell))
            for s in self.cert.robber.get(shadow, ()):
                if s & ~reach == 0:
                    return cell, s
        return None, None

    def _shadow(self, transcript) -> int:
        rounds = transcript.rounds if transcript is not None else ()
        if len(self._trail) > len(rounds) or any(c != r.cell for (c, _), r in zip(self._trail, rounds)):
            self._trail = []
        shadow = self._trail[-1][1] if self._trail else (1 << self.g.n) - 1
        for r in rounds[len(self._trail):]:
            _, shadow = self._pick(shadow, [r.cell])
            if shadow is None:
                raise ValueError("transcript left the certified region")
            self._trail.append((r.cell, shadow))
        return shadow

    def choose_class(self, cells, transcript=None, placement=None):
        shadow = self._shadow(transcript)
        cell, _ = self._pick(shadow, cells)
        if cell is None:
            raise ValueError("certificate offers no surviving cell")
        return cell


def check_robber_certificate(g: Graph, cert: Certificate) -> tuple[bool, str]:
    """Every placement of at most k vertices on every certified state leaves a way out."""
    full = (1 << g.n) - 1
    if full not in cert.robber:
        return False, "initial territory missing"
    placements = [p for size in range(1, min(cert.k, g.n) + 1) for p in itertools.combinations(range(g.n), size)]
    for state, safe in cert.robber.items():
        if not safe:
            return False, f"state {from_mask(state)} has no successor"
        for s in safe:
            if s not in cert.robber:
                return False, f"successor {from_mask(s)} not certified"
        verts = from_mask(state)
        for p in placements:
            ok = False
            for cell in partition_by_probe(g, verts, p):
                if len(cell) < 2:
                    continue
                reach = to_mask(expand(g, cell))
                if any(s & ~reach == 0 for s in safe):
                    ok = True
                    break
            if not ok:
                return False, f"placement {p} captures from {verts}"
    return True, f"{len(cert.robber)} states checked"


def replay_certificate(g: Graph, cert: Certificate, round_budget: int | None = None) -> tuple[bool, str]:
    """Check a certificate against the game engine."""
    from .game import verify_strategy_exhaustive

    if cert.kind == COPS_WIN:
        v = verify_strategy_exhaustive(g, CertificateStrategy(g, cert), round_budget=round_budget)
        return v.proven, str(v)
    return check_robber_certificate(g, cert)


# ---------------------------------------------------------------- files


def certificate_lines(cert: Certificate) -> list[str]:
    out = ["# locgame-format 1", f"certificate {cert.kind} k {cert.k} n {cert.n}"]
    if cert.kind == COPS_WIN:
        for state in sorted(cert.cops, key=from_mask):
            out.append(f"state {' '.join(map(str, from_mask(state)))} placement {' '.join(map(str, cert.cops[state]))}")
    else:
        for state in sorted(cert.robber, key=from_mask):
            out.append(f"state {' '.join(map(str, from_mask(state)))}")
            for s in cert.robber[state]:
                out.append(f"  safe {' '.join(map(str, from_mask(s)))}")
    return out


def parse_certificate(lines) -> Certificate:
    cert = None
    current = None
    for raw in lines:
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        head, _, rest = line.partition(" ")
        if head == "certificate":
            f = rest.split()
            if len(f) != 5 or f[1] != "k" or f[3] != "n":
                raise ValueError(f"bad certificate header: {line!r}")
            cert = Certificate(f[0], int(f[2]), int(f[4]))
        elif cert is None:
            raise ValueError("certificate header missing")
        elif head == "state":
            if cert.kind == COPS_WIN:
                st, _, pl = rest.partition(" placement")
                cert.cops[to_mask(map(int, st.split()))] = tuple(int(x) for x in pl.split())
            else:
                current = to_mask(map(int, rest.split()))
                cert.robber[current] = ()
        elif head == "safe":
            if current is None:
                raise ValueError("safe line before any state")
            cert.robber[current] = cert.robber[current] + (to_mask(map(int, rest.split())),)
        else:
            raise ValueError(f"unknown record {head!r}")
    if cert is None:
        raise ValueError("empty certificate")
    return cert


__all__ = [
    "COPS_WIN", "ROBBER_WINS", "UNKNOWN", "BudgetExhausted",
    "Certificate", "SolveResult", "can_win", "localization_number", "extract_certificate",
    "CertificateStrategy", "CertificateRobber", "check_robber_certificate", "replay_certificate",
    "certificate_lines", "parse_certificate", "to_mask", "from_mask",
]
