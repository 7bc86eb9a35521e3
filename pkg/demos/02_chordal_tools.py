"""
Chordal machinery: elimination orders, coloring, independent sets
=================================================================

Everything downstream rests on perfect elimination orderings.  An order
is perfect when each vertex's earlier neighbors form a clique; maximum
cardinality search finds one exactly when the graph is chordal.
"""

from causalsep import (
    NotChordal,
    build_graph,
    chromatic_number_chordal,
    greedy_color_chordal,
    is_chordal,
    max_weight_independent_set_frank,
    maximum_cardinality_search,
    set_weight,
)

# two triangles sharing an edge
G = build_graph(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)])
peo = maximum_cardinality_search(G)
print("PEO:", peo.order)

# chromatic number and an optimal coloring fall out of the same order
print("chromatic number:", chromatic_number_chordal(G, peo))
col = greedy_color_chordal(G, peo)
print("coloring:", col.class_of, "classes:", col.classes())

# weighted independent set in two linear sweeps
W = G.with_weights([2, 5, 5, 2])
S = max_weight_independent_set_frank(W, peo)
print("max-weight independent set:", S, "weight", set_weight(W, S))

# a 4-cycle is the smallest non-chordal graph; the error carries a witness
C4 = build_graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
print("C4 chordal:", is_chordal(C4))
try:
    maximum_cardinality_search(C4)
except NotChordal as e:
    print("witness chordless cycle:", e.cycle)
