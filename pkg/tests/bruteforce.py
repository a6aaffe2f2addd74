"""Independent brute-force oracle for the localization game.

Deliberately shares no code with locgame: its own BFS distances, its own
partition, and a plain backward attractor over every subset of vertices with
every placement of at most k vertices.  Meant for graphs with at most 12
vertices.
"""
from __future__ import annotations

import itertools
from collections import deque


def bfs_distances(n, edges):
    adj = [set() for _ in range(n)]
    for a, b in edges:
        adj[a].add(b)
        adj[b].add(a)
    dist = []
    for s in range(n):
        d = [None] * n
        d[s] = 0
        q = deque([s])
        while q:
            x = q.popleft()
            for y in adj[x]:
                if d[y] is None:
                    d[y] = d[x] + 1
                    q.append(y)
        dist.append(d)
    return adj, dist


def _cells(dist, territory, placement):
    groups = {}
    for x in territory:
        groups.setdefault(tuple(dist[p][x] for p in placement), []).append(x)
    return [frozenset(c) for c in groups.values()]


def capture_rank(n, edges, k):
    """Fewest rounds k cops need from the full vertex set, or None if the robber escapes forever."""
    adj, dist = bfs_distances(n, edges)
    closed = [frozenset(adj[x] | {x}) for x in range(n)]
    placements = [p for size in range(0, min(k, n) + 1) for p in itertools.combinations(range(n), size)]
    full = frozenset(range(n))
    subsets = [frozenset(c) for size in range(1, n + 1) for c in itertools.combinations(range(n), size)]
    moves = {}
    for s in subsets:
        opts = []
        for p in placements:
            nxt = []
            for c in _cells(dist, s, p):
                if len(c) > 1:
                    nb = frozenset().union(*(closed[x] for x in c))
                    nxt.append(nb)
            opts.append(nxt)
        moves[s] = opts
    won = {}
    level = 0
    while True:
        new = {}
        for s in subsets:
            if s in won:
                continue
            for nxt in moves[s]:
                if all(t in won for t in nxt):
                    new[s] = level
                    break
        if not new:
            break
        won.update(new)
        level += 1
    return won[full] + 1 if full in won else None


def localization_number(n, edges, k_max=None):
    k_max = n if k_max is None else k_max
    for k in range(1, k_max + 1):
        if capture_rank(n, edges, k) is not None:
            return k
    return None
