"""
Building graphs and moving them through JSON
============================================

Graphs are frozen: n vertices labeled 0..n-1, a canonical sorted edge
list, per-vertex intervention costs, and optional interval metadata.
"""

import json

from causalsep import build_graph, graph_from_dict, graph_to_dict, is_connected

# a 5-cycle with a chord, unit costs by default
G = build_graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (1, 3)])
print("n =", G.n)
print("edges:", G.edges)
print("neighbors of 1:", G.adjacency[1])
print("connected:", is_connected(G))

# costs can be ints, floats, or fractions.Fraction; total_weight sums them
H = G.with_weights([3, 1, 4, 1, 5])
print("total cost:", H.total_weight())

# round trip through plain JSON
payload = json.dumps(graph_to_dict(H))
back = graph_from_dict(json.loads(payload))
print("round trip equal:", back == H)

# interval graphs carry their interval representation along
I = build_graph(4, [(0, 1), (1, 2), (2, 3)],
                intervals=[(0, 2), (1, 3), (3, 5), (5, 6)])
print("intervals:", I.intervals)
