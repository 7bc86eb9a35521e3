"""
What interventions actually reveal
==================================

Intervening on a set I shows the direction of every edge crossing the
cut (I, V-I).  Meek's rules then propagate those directions through the
skeleton.  A design identifies the whole causal structure exactly when
it separates every edge, no matter which moral orientation is true.
"""

from causalsep import (
    Design,
    Label,
    build_graph,
    design_learns_all,
    enumerate_moral_orientations,
    meek_closure,
    random_moral_orientation,
    simulate_intervention,
)

# path 0-1-2 with a triangle 2-3-4 on the end
G = build_graph(5, [(0, 1), (1, 2), (2, 3), (2, 4), (3, 4)])
dags = enumerate_moral_orientations(G)
print("moral orientations of the skeleton:", len(dags))

truth = random_moral_orientation(G, seed=7)
print("hidden truth:", truth.arcs)

# one experiment intervening on {1, 3}
evidence = simulate_intervention(truth, [1, 3])
print("directions revealed by the cut:", sorted(evidence))

pdag = meek_closure(G, evidence)
print("after propagation:", sorted(pdag.directed))
print("fully identified:", pdag.is_fully_directed())

# a design separates iff it identifies every candidate truth; the report
# names a counterexample otherwise
half = Design(m=1, rows=(Label((0,)), Label((1,)), Label((0,)),
                         Label((1,)), Label((0,))))
rep = design_learns_all(G, half)
print("m=1 design learns all:", rep.learns_all)
if not rep.learns_all:
    dag, edge = rep.counterexample
    print("counterexample truth:", dag.arcs, "edge left undirected:", edge)

full = Design(m=2, rows=(Label((0, 0)), Label((0, 1)), Label((0, 0)),
                         Label((1, 0)), Label((0, 1))))
print("m=2 design learns all:", design_learns_all(G, full).learns_all)
