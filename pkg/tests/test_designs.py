from fractions import Fraction

import pytest

from conftest import FIG1_FIRST, FANO_BLOCKS
from locgame.designs import Design, incidence_graph, repetition_number, validate_bibd, validate_steiner
from locgame.errors import EmptyDesign, NotUniform, PairCountViolation
from locgame.formats import parse_design
from locgame.generators import sqs_boolean


def test_fano_parameters(fano):
    p = validate_bibd(fano)
    assert (p.v, p.b, p.r, p.k, p.lam) == (7, 7, 3, 3, 1)
    assert p.symmetric
    assert str(p) == "BIBD(7,7,3,3,1)"


def test_figure_one_parameters():
    p = validate_bibd(parse_design(FIG1_FIRST))
    assert (p.v, p.b, p.r, p.k, p.lam) == (7, 21, 9, 3, 3)


def test_deleted_block_breaks_pair_counts():
    with pytest.raises(PairCountViolation):
        validate_bibd(Design(7, FANO_BLOCKS[1:]))


def test_mixed_block_sizes():
    with pytest.raises(NotUniform):
        validate_bibd(Design(4, [(0, 1, 2), (0, 3)]))


def test_empty():
    with pytest.raises(EmptyDesign):
        validate_bibd(Design(3, []))


def test_steiner_checks(fano):
    assert validate_steiner(fano, 2)
    assert not validate_steiner(fano, 3)
    assert validate_steiner(sqs_boolean(3), 3)


@pytest.mark.parametrize(
    "t,k,v,expected",
    [(2, 3, 7, Fraction(3)), (3, 4, 8, Fraction(7)), (2, 3, 8, Fraction(7, 2))],
)
def test_repetition_number(t, k, v, expected):
    assert repetition_number(t, k, v) == expected


def test_heawood_shape(heawood):
    assert heawood.n == 14
    assert {heawood.degree(x) for x in heawood.vertices} == {3}
    assert heawood.girth() == 6
    assert heawood.dist[0, 1] == 2


def test_single_block_is_a_star():
    g = incidence_graph(Design(3, [(0, 1, 2)]))
    assert g.n == 4
    assert g.degree(3) == 3
    assert g.dist[0, 2] == 2
