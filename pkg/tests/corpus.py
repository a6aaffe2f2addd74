"""Small graphs shared by the oracle comparisons."""
import itertools

from locgame.designs import Graph


def path(n):
    return Graph(n, [(i, i + 1) for i in range(n - 1)], name=f"P{n}")


def cycle(n):
    return Graph(n, [(i, (i + 1) % n) for i in range(n)], name=f"C{n}")


def star(leaves):
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)], name=f"S{leaves}")


def complete(n):
    return Graph(n, list(itertools.combinations(range(n), 2)), name=f"K{n}")


PETERSEN_EDGES = (
    [(i, (i + 1) % 5) for i in range(5)]
    + [(i, i + 5) for i in range(5)]
    + [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
)


def petersen():
    return Graph(10, PETERSEN_EDGES, name="petersen")


def petersen_minus_vertex():
    keep = [e for e in PETERSEN_EDGES if 9 not in e]
    return Graph(9, keep, name="petersen-v")


def petersen_minus_edge():
    return Graph(10, PETERSEN_EDGES[1:], name="petersen-e")


def corpus():
    graphs = [path(n) for n in range(2, 9)]
    graphs += [cycle(n) for n in range(3, 11)]
    graphs += [star(n) for n in range(2, 8)]
    graphs += [complete(4), petersen(), petersen_minus_vertex(), petersen_minus_edge()]
    return graphs
