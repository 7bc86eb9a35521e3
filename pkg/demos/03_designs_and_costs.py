"""
Intervention designs as binary matrices
=======================================

A design over m experiments assigns each vertex a row of m bits; bit j
says whether the vertex is intervened on in experiment j.  The design
separates the graph when the endpoints of every edge get distinct rows,
which is the same thing as the rows being a proper coloring by labels.
"""

from causalsep import (
    Design,
    Label,
    build_graph,
    design_to_coloring,
    design_cost,
    label_pool,
    min_separating_size,
    verify_graph_separating,
)

G = build_graph(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)])
print("minimum experiments needed:", min_separating_size(G))

# the triangle {0,1,2} forces three distinct rows, so m=1 cannot work
bad = Design(m=1, rows=(Label((0,)), Label((1,)), Label((0,)), Label((1,))))
report = verify_graph_separating(G, bad)
print("m=1 separating:", report.separating, "violations:", report.violations)

good = Design(m=2, rows=(Label((0, 0)), Label((0, 1)),
                         Label((1, 0)), Label((0, 0))))
print("m=2 separating:", verify_graph_separating(G, good).separating)

# cost = sum over vertices of (vertex cost) x (ones in its row);
# column view: each experiment pays for the vertices it touches
weights = [10, 1, 1, 10]
print("cost of the design:", design_cost(good, weights))
print("experiments:", good.interventions)

# a separating design groups vertices by row into a proper coloring
col = design_to_coloring(G, good)
print("classes:", col.classes())

# at most min(2^m, n) labels are ever useful; the pool lists them in
# order of increasing ones count, so cheap labels come first
print("pool for m=2:", [lab.bitstring() for lab in label_pool(2, G.n).labels])
