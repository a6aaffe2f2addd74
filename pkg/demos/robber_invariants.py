"""Robber strategies that certify lower bounds.

A robber keeps an invariant about the cell it hides in.  If the invariant
survives every placement sequence, the cops lose.  For AG(2,3) the solver
closes the remaining gap between k and k+1.
"""
import time

from locgame.designs import incidence_graph
from locgame.game import play
from locgame.generators import affine_plane, projective_plane, sts
from locgame.solver import localization_number
from locgame.strategies import (
    RandomPlacementStrategy,
    exhaustive_invariant_check,
    general_lower_d,
    general_robber,
    symmetric_robber,
)

fano = projective_plane(2)
ok, seen = exhaustive_invariant_check(symmetric_robber(fano, 2), 2)
print(f"Heawood, 2 cops: invariant {ok} on all {seen} reachable territories")

pg3 = projective_plane(3)
robber = symmetric_robber(pg3, 3)
res = play(robber.graph, RandomPlacementStrategy(robber.graph, 3, seed=11), robber, 500)
print(f"PG(2,3), 3 random cops for 500 rounds: {res.outcome}")

# d cops are not enough when d satisfies the two inequalities
for v in (13, 25):
    d = general_lower_d((v - 1) // 2, 3)
    robber = general_robber(sts(v), d)
    res = play(robber.graph, RandomPlacementStrategy(robber.graph, d, seed=v), robber, 500)
    print(f"STS({v}): d={d}, random play {res.outcome}")

ap = affine_plane(3)
t = time.perf_counter()
lo, up, results = localization_number(incidence_graph(ap.design), 3)
print(f"\nAG(2,3) solver: zeta in [{lo},{up}] ({time.perf_counter() - t:.0f}s)")
for r in results:
    print("  ", r.summary())
