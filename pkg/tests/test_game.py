import pytest

from corpus import complete, path, star
from locgame.errors import NotDelayedResolving
from locgame.game import (
    CAPTURED,
    COUNTEREXAMPLE,
    ONGOING,
    PROVEN,
    SURVIVED,
    FirstCellAdversary,
    FixedStrategy,
    MaxCellAdversary,
    RandomAdversary,
    expand,
    is_delayed_resolving,
    parse_transcript,
    partition_by_probe,
    play,
    scanning_strategy,
    step,
    transcript_lines,
    verify_strategy_exhaustive,
)
from locgame.strategies import symmetric_strategy, two_design_set


def test_expand(heawood):
    assert expand(heawood, {0}) == frozenset({0, 7, 8, 9})
    assert expand(heawood, heawood.vertices) == frozenset(heawood.vertices)
    assert len(expand(heawood, {0, 7})) == 6


def test_partition_on_a_path():
    g = path(3)
    assert sorted(map(sorted, partition_by_probe(g, {0, 1, 2}, [1]))) == [[0, 2], [1]]
    assert sorted(map(sorted, partition_by_probe(g, {0, 1, 2}, [0]))) == [[0], [1], [2]]


def test_partition_points_by_a_pencil(heawood):
    pencil = sorted(heawood.adjacency[0])
    cells = partition_by_probe(heawood, range(7), pencil)
    assert sorted(len(c) for c in cells) == [1, 2, 2, 2]
    assert frozenset({0}) in cells


def test_step():
    g = path(3)
    outcome, nxt, rnd = step(g, {0, 1, 2}, [1], FirstCellAdversary())
    assert outcome == ONGOING
    assert rnd.cell == frozenset({0, 2})
    assert nxt == frozenset({0, 1, 2})
    outcome, nxt, _ = step(g, {0, 1, 2}, [0], FirstCellAdversary())
    assert outcome == CAPTURED and nxt is None


def test_step_on_pencil(heawood):
    _, nxt, rnd = step(heawood, range(7), sorted(heawood.adjacency[0]), MaxCellAdversary())
    assert len(rnd.cell) == 2
    assert len(nxt) >= 4


def test_play_on_an_edge():
    g = complete(2)
    res = play(g, FixedStrategy(g, [0]), FirstCellAdversary())
    assert res.outcome == CAPTURED and res.rounds == 1


def test_play_symmetric(fano, heawood):
    res = play(heawood, symmetric_strategy(fano), MaxCellAdversary())
    assert res.outcome == CAPTURED


def test_fixed_probe_is_escapable():
    g = path(3)
    res = play(g, FixedStrategy(g, [1]), FirstCellAdversary(), round_budget=50)
    assert res.outcome == SURVIVED


def test_transcript_round_trip(fano, heawood):
    res = play(heawood, symmetric_strategy(fano), RandomAdversary(3))
    lines = transcript_lines(res.transcript)
    again = parse_transcript(lines, heawood)
    assert transcript_lines(again) == lines


def test_verify_symmetric(fano, heawood):
    v = verify_strategy_exhaustive(heawood, symmetric_strategy(fano), round_budget=40)
    assert v.status == PROVEN and v.max_rounds >= 1


def test_verify_finds_counterexample(heawood):
    # two blocks are not delayed resolving; a short scan leaves the robber loose
    s = scanning_strategy(heawood, [7, 8], scan_order=[0, 1], check=False)
    v = verify_strategy_exhaustive(heawood, s, round_budget=40)
    assert v.status == COUNTEREXAMPLE
    assert v.transcript is not None


def test_delayed_resolving(fano, heawood):
    s = two_design_set(fano, 0, 1, heawood)
    assert len(s) == 5
    assert is_delayed_resolving(heawood, s)
    assert is_delayed_resolving(heawood, heawood.vertices)
    assert not is_delayed_resolving(heawood, [0])


def test_scanning_two_design_set(fano, heawood):
    s = scanning_strategy(heawood, two_design_set(fano, 0, 1, heawood))
    assert s.k == 6
    assert verify_strategy_exhaustive(heawood, s).status == PROVEN


def test_scanning_on_a_star():
    g = star(4)
    s = scanning_strategy(g, [1, 2, 3, 4])
    v = verify_strategy_exhaustive(g, s)
    assert v.status == PROVEN and v.max_rounds == 1


def test_scanning_needs_a_resolving_set(heawood):
    with pytest.raises(NotDelayedResolving):
        scanning_strategy(heawood, [])


def test_oversized_placement_is_rejected(heawood):
    s = FixedStrategy(heawood, [0, 1, 2], k=2)
    v = verify_strategy_exhaustive(heawood, s)
    assert v.status == COUNTEREXAMPLE
