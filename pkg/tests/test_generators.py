import pytest

from locgame.designs import incidence_graph, validate_bibd, validate_steiner
from locgame.errors import InvalidOrder, KTooLarge, NotAPlane, NotResolved, UnsupportedOrder
from locgame.fields import finite_field
from locgame.generators import (
    ResolvedDesign,
    affine_plane,
    bose_parallel_class,
    check_resolution,
    check_transversal,
    derive_td_from_affine,
    derive_td_from_pp,
    find_groups,
    find_resolution,
    projective_plane,
    sqs_boolean,
    sts,
    transversal_design,
)
from locgame.designs import Design


def params(d):
    p = validate_bibd(d)
    return (p.v, p.b, p.r, p.k, p.lam)


def test_field_of_order_four():
    f = finite_field(4)
    x = 2  # the class of x in GF(2)[x]/(1+x+x^2)
    assert f.mul[x, x] == f.add[x, 1]
    for a in f.elements:
        assert f.add[a, f.neg[a]] == 0
        if a:
            assert f.mul[a, f.inv[a]] == 1
        for b in f.elements:
            assert f.add[a, b] == f.add[b, a]
            assert f.mul[a, b] == f.mul[b, a]
            for c in f.elements:
                assert f.mul[a, f.add[b, c]] == f.add[f.mul[a, b], f.mul[a, c]]


def test_prime_field():
    f = finite_field(5)
    assert f.mul[3, 4] == 2
    assert f.add[3, 4] == 2
    assert f.sub(1, 3) == 3


def test_unsupported_field():
    with pytest.raises(UnsupportedOrder):
        finite_field(6)


@pytest.mark.parametrize("q", [2, 3, 4, 5])
def test_projective_planes(q):
    n = q * q + q + 1
    assert params(projective_plane(q)) == (n, n, q + 1, q + 1, 1)


@pytest.mark.parametrize("q", [3, 4, 5])
def test_affine_planes(q):
    ap = affine_plane(q)
    assert params(ap.design) == (q * q, q * q + q, q + 1, q, 1)
    assert len(ap.classes) == q + 1
    assert check_resolution(ap)


@pytest.mark.parametrize("v", [7, 9, 13, 15, 19, 21, 25, 27])
def test_sts(v):
    d = sts(v)
    assert params(d) == (v, v * (v - 1) // 6, (v - 1) // 2, 3, 1)


def test_sts_bad_order():
    with pytest.raises(InvalidOrder):
        sts(11)


def test_bose_class_is_parallel():
    d = sts(15)
    cls = bose_parallel_class(15)
    pts = sorted(p for j in cls for p in d.blocks[j])
    assert pts == list(range(15))


def test_sqs():
    d = sqs_boolean(3)
    assert (d.v, d.b) == (8, 14)
    assert validate_steiner(d, 3)
    assert sum(1 for blk in d.blocks if 0 in blk) == 7
    with pytest.raises(InvalidOrder):
        sqs_boolean(2)


@pytest.mark.parametrize("k,n", [(3, 3), (4, 5), (4, 4), (5, 7)])
def test_transversal(k, n):
    td = transversal_design(k, n)
    assert td.design.v == k * n and td.design.b == n * n
    assert td.k == k and td.n == n
    assert check_transversal(td)


def test_transversal_too_many_groups():
    with pytest.raises(KTooLarge):
        transversal_design(7, 5)


def test_derived_transversals():
    td = derive_td_from_pp(projective_plane(3), 0)
    assert (td.k, td.n, td.design.v, td.design.b) == (4, 3, 12, 9)
    td = derive_td_from_pp(projective_plane(2), 5)
    assert (td.k, td.n, td.design.v, td.design.b) == (3, 2, 6, 4)
    assert check_transversal(td)
    td = derive_td_from_affine(affine_plane(3), 0)
    assert (td.k, td.n) == (3, 3)
    td = derive_td_from_affine(affine_plane(4), 2)
    assert (td.k, td.n) == (4, 4)
    assert check_transversal(td)


def test_derivation_errors(fano):
    with pytest.raises(NotAPlane):
        derive_td_from_pp(Design(7, fano.blocks[1:]), 0)
    ap = affine_plane(3)
    bad = ResolvedDesign(ap.design, (ap.classes[0] + ap.classes[1][:1],) + ap.classes[1:])
    with pytest.raises(NotResolved):
        derive_td_from_affine(bad, 0)


def test_recovering_structure():
    assert find_resolution(affine_plane(3).design) is not None
    assert find_resolution(projective_plane(3)) is None
    td = find_groups(transversal_design(4, 3).design)
    assert td is not None and (td.k, td.n) == (4, 3)


@pytest.mark.parametrize("d", [projective_plane(3), affine_plane(4).design, sts(13)], ids=["pg3", "ag4", "sts13"])
def test_lambda_one_distances(d):
    g = incidence_graph(d)
    p = validate_bibd(d)
    pts = list(g.points)
    blks = list(g.block_vertices)
    assert {int(g.dist[a, b]) for a in pts for b in pts if a != b} == {2}
    assert {int(g.dist[a, b]) for a in blks for b in blks if a != b} <= {2, 4}
    assert g.girth() == 6
    assert {g.degree(x) for x in pts} == {p.r}
    assert {g.degree(x) for x in blks} == {p.k}
