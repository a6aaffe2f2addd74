"""Walk through the localization game on the Heawood graph.

The Fano plane's incidence graph has 14 vertices.  Three cops suffice and
two do not; this script shows a game, then the solver's verdicts.
"""
from locgame.designs import Design, incidence_graph
from locgame.game import MaxCellAdversary, play, transcript_lines
from locgame.solver import can_win, replay_certificate
from locgame.strategies import symmetric_strategy

fano = Design(7, [(0, 1, 2), (0, 3, 4), (0, 5, 6), (1, 3, 5), (1, 4, 6), (2, 3, 6), (2, 4, 5)])
g = incidence_graph(fano, name="heawood")
print(g, "girth", g.girth())

# vertices 0..6 are points, 7..13 are blocks
strategy = symmetric_strategy(fano)
game = play(g, strategy, MaxCellAdversary())
print(f"\n{strategy.k} cops vs the largest-cell robber: {game.outcome} after {game.rounds} rounds")
for line in transcript_lines(game.transcript)[1:]:
    print("  ", line)

# the exact solver settles both sides
for k in (2, 3):
    res = can_win(g, k)
    ok, msg = replay_certificate(g, res.certificate)
    print(f"\nk={k}: {res.summary()}")
    print(f"  certificate replay: {'PASS' if ok else 'FAIL'} ({msg})")
