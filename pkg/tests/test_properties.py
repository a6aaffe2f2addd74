import itertools

from hypothesis import given, settings
from hypothesis import strategies as st

import bruteforce
from locgame.designs import Design, Graph, incidence_graph, validate_bibd
from locgame.formats import format_design, format_graph, parse_design, parse_graph
from locgame.game import expand, partition_by_probe
from locgame.generators import affine_plane, projective_plane, sts
from locgame.solver import localization_number


@st.composite
def connected_graphs(draw, max_n=7):
    n = draw(st.integers(2, max_n))
    edges = {(draw(st.integers(0, i - 1)), i) for i in range(1, n)}
    pairs = list(itertools.combinations(range(n), 2))
    extra = draw(st.sets(st.sampled_from(pairs), max_size=min(n, len(pairs))))
    return Graph(n, sorted(edges | extra))


@st.composite
def graph_and_sets(draw):
    g = draw(connected_graphs(max_n=10))
    verts = st.lists(st.integers(0, g.n - 1), max_size=g.n).map(frozenset)
    territory = st.lists(st.integers(0, g.n - 1), min_size=1, max_size=g.n).map(frozenset)
    return g, draw(territory), draw(verts), draw(verts)


@settings(max_examples=40, deadline=None)
@given(connected_graphs())
def test_solver_matches_oracle(g):
    lo, up, _ = localization_number(g, 3)
    want = bruteforce.localization_number(g.n, g.edges(), 3)
    if want is None:
        assert lo == 4
    else:
        assert lo == up == want


@given(graph_and_sets())
def test_partition_covers_territory(data):
    g, territory, probes, _ = data
    cells = partition_by_probe(g, territory, sorted(probes))
    assert sorted(x for c in cells for x in c) == sorted(territory)
    assert all(cells)


@given(graph_and_sets())
def test_more_probes_refine(data):
    g, territory, p, q = data
    coarse = partition_by_probe(g, territory, sorted(p))
    fine = partition_by_probe(g, territory, sorted(p | q))
    assert all(any(c <= d for d in coarse) for c in fine)


@given(graph_and_sets())
def test_expand_is_monotone(data):
    g, s, a, _ = data
    big = expand(g, s | a)
    assert s <= expand(g, s) <= big


@given(st.sampled_from([2, 3, 4, 5, 7]))
def test_plane_identities(q):
    for d in (projective_plane(q), affine_plane(q).design):
        p = validate_bibd(d)
        assert p.v * p.r == p.b * p.k
        assert p.lam * (p.v - 1) == p.r * (p.k - 1)


@given(st.sampled_from([7, 9, 13, 15, 19, 21, 25, 27, 31, 33]))
def test_sts_identities(v):
    p = validate_bibd(sts(v))
    assert p.r * 2 == v - 1 and p.b * 6 == v * (v - 1)


@given(st.sampled_from([2, 3, 4]), st.integers(0, 100))
def test_design_text_round_trip(q, shuffle):
    d = projective_plane(q)
    blocks = d.blocks[shuffle % d.b:] + d.blocks[: shuffle % d.b]
    d = Design(d.v, blocks)
    again = parse_design(format_design(d))
    assert again.v == d.v and [tuple(b) for b in again.blocks] == [tuple(b) for b in d.blocks]
    g = incidence_graph(d)
    h = parse_graph(format_graph(g))
    assert h.adjacency == g.adjacency
