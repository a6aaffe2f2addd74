from fractions import Fraction

import pytest

from conftest import FIG1_FIRST, FIG1_SECOND
from locgame.designs import Design, incidence_graph, validate_bibd
from locgame.errors import NotApplicable
from locgame.formats import parse_design
from locgame.game import PROVEN, SURVIVED, play, verify_strategy_exhaustive
from locgame.generators import (
    affine_plane,
    derive_td_from_affine,
    derive_td_from_pp,
    projective_plane,
    sqs_boolean,
    sts,
    transversal_design,
)
from locgame.strategies import (
    RandomPlacementStrategy,
    affine_strategy,
    bounds_report,
    exhaustive_invariant_check,
    f_of_design,
    f_partition,
    f_value,
    general_bibd_strategy,
    general_lower_d,
    general_robber,
    lower_bounds,
    max_partial_parallel_class,
    near_symmetric_strategy,
    sqs_strategy,
    steiner_matching_strategy,
    sts_half_strategy,
    sts_matching_strategy,
    symmetric_robber,
    symmetric_strategy,
    td_strategy,
    two_design_set,
    two_design_strategy,
)


def biplane11():
    diffs = (1, 3, 4, 5, 9)
    return Design(11, [tuple(sorted((i + d) % 11 for d in diffs)) for i in range(11)])


def proven(strategy, **kw):
    v = verify_strategy_exhaustive(strategy.graph, strategy, **kw)
    return v.status == PROVEN


# f-machinery

def test_f_values_of_figure_one():
    assert f_of_design(parse_design(FIG1_FIRST)) == 3
    assert f_of_design(parse_design(FIG1_SECOND)) == 1


def test_f_of_biplane_is_zero():
    d = biplane11()
    assert validate_bibd(d).lam == 2
    assert f_of_design(d) == 0


def test_f_on_fano(fano):
    assert all(f_value(fano, u) == 3 for u in range(7))


@pytest.mark.parametrize("d", [projective_plane(3), sts(13), affine_plane(4).design], ids=["pg3", "sts13", "ag4"])
def test_lambda_one_cells(d):
    p = validate_bibd(d)
    for u in range(d.v):
        fp = f_partition(d, u)
        assert len(fp.cells) == p.r
        assert {len(c) for c in fp.cells} == {p.k - 1}


def test_two_design_set_sizes(fano):
    assert len(two_design_set(fano, 0, 1)) == 5
    d = sts(13)
    assert len(two_design_set(d, 0, 1)) == 11
    assert two_design_strategy(d).k == 12


def test_two_design_needs_lambda_one():
    with pytest.raises(NotApplicable):
        two_design_strategy(biplane11())


def test_general_bibd_cops():
    assert general_bibd_strategy(parse_design(FIG1_SECOND)).k == 11
    assert general_bibd_strategy(parse_design(FIG1_FIRST)).k == 13


def test_general_bibd_needs_repeated_pairs(fano):
    with pytest.raises(NotApplicable):
        general_bibd_strategy(fano)


# plane strategies

def test_symmetric():
    assert proven(symmetric_strategy(projective_plane(4)))
    with pytest.raises(NotApplicable):
        symmetric_strategy(affine_plane(3).design)


def test_near_symmetric():
    s = near_symmetric_strategy(affine_plane(4).design)
    assert s.k == 5 and proven(s)
    with pytest.raises(NotApplicable):
        near_symmetric_strategy(projective_plane(3))


def test_affine():
    s = affine_strategy(affine_plane(5))
    assert s.k == 5 and proven(s)


# Steiner systems

@pytest.mark.parametrize("v", [7, 9, 15, 19, 21])
def test_sts_half(v):
    s = sts_half_strategy(sts(v))
    assert s.k == (v + 1) // 2 and proven(s)


def test_sts_half_rejects_sqs():
    with pytest.raises(NotApplicable):
        sts_half_strategy(sqs_boolean(3))


@pytest.mark.parametrize(
    "d,t,leftover",
    [(sts(7), 1, 4), (sts(15), 5, 0), (sts(13), 4, 1), (sts(25), 8, 1), (sqs_boolean(3), 2, 0), (affine_plane(4).design, 4, 0)],
    ids=["fano", "sts15", "sts13", "sts25", "sqs8", "ag4"],
)
def test_packings(d, t, leftover):
    pk = max_partial_parallel_class(d)
    assert pk.size == t
    assert len(pk.uncovered) == leftover
    used = [x for j in pk.blocks for x in d.blocks[j]]
    assert len(used) == len(set(used))


def test_sts_matching():
    s = sts_matching_strategy(sts(25))
    assert s.k == 10 and proven(s)
    with pytest.raises(NotApplicable):
        sts_matching_strategy(sts(13))


def test_steiner_matching():
    assert proven(steiner_matching_strategy(affine_plane(4).design))
    assert proven(steiner_matching_strategy(sqs_boolean(3)))
    with pytest.raises(NotApplicable):
        steiner_matching_strategy(parse_design(FIG1_FIRST))


def test_sqs():
    s = sqs_strategy(sqs_boolean(4))
    assert s.k == 13 and proven(s)
    with pytest.raises(NotApplicable):
        sqs_strategy(sts(9))


@pytest.mark.parametrize("k,n", [(4, 4), (5, 5), (4, 7)])
def test_td(k, n):
    s = td_strategy(transversal_design(k, n))
    assert s.k == n + k - 4 and proven(s)


def test_td_derived():
    assert proven(td_strategy(derive_td_from_pp(projective_plane(4), 3)))
    assert proven(td_strategy(derive_td_from_affine(affine_plane(5), 1)))
    with pytest.raises(NotApplicable):
        td_strategy(transversal_design(3, 3))


# robbers

def test_symmetric_robber_fixpoint(fano):
    ok, count = exhaustive_invariant_check(symmetric_robber(fano, 2), 2)
    assert ok and count > 1


def test_symmetric_robber_needs_fewer_cops(fano):
    with pytest.raises(NotApplicable):
        symmetric_robber(fano, 3)


def test_symmetric_robber_pg3():
    d = projective_plane(3)
    robber = symmetric_robber(d, 3)
    res = play(robber.graph, RandomPlacementStrategy(robber.graph, 3, seed=7), robber, round_budget=300)
    assert res.outcome == SURVIVED


def test_general_lower_d():
    assert general_lower_d(6, 3) == 1
    assert general_lower_d(12, 3) == 2
    assert general_lower_d(4, 3) == 2
    assert general_lower_d(5, 4) == 3


def test_general_robber_ag3():
    ap = affine_plane(3)
    ok, _ = exhaustive_invariant_check(general_robber(ap.design, 2), 2, depth=4)
    assert ok


def test_general_robber_sts25():
    robber = general_robber(sts(25), 2)
    res = play(robber.graph, RandomPlacementStrategy(robber.graph, 2, seed=1), robber, round_budget=200)
    assert res.outcome == SURVIVED


def test_general_robber_needs_k_below_r():
    with pytest.raises(NotApplicable):
        general_robber(projective_plane(3), 1)


# bounds

def test_lower_bounds_fano(fano):
    assert dict((tag, val) for val, tag in lower_bounds(fano)) == {"Thm2.5": 2, "Thm3.1": 3}


def test_lower_bounds_sts():
    assert dict((t, v) for v, t in lower_bounds(sts(13))) == {"Thm2.5": 2, "Thm2.6": 2, "Cor4.1": 2}
    assert dict((t, v) for v, t in lower_bounds(sts(25))) == {"Thm2.5": 2, "Thm2.6": 3, "Cor4.1": 3}


def test_report_plane():
    rep = bounds_report(projective_plane(2))
    assert rep.exact == 3
    rep = bounds_report(affine_plane(3).design)
    assert rep.exact == 3
    assert "LOWER 3 Thm2.6" in rep.to_text()


def test_report_sts13():
    text = bounds_report(sts(13)).to_text()
    assert "UPPER 7 Thm4.2" in text
    assert "UPPER 12 Cor2.5" in text
    assert "RANGE 2 7" in text


def test_report_json_is_stable():
    a = bounds_report(sts(9)).to_json()
    b = bounds_report(sts(9)).to_json()
    assert a == b
