"""
Finding cheap separating designs
================================

Four solvers, trading optimality against budget and speed:

- design_unbounded_optimal: no cap on m; optimal cost is the total
  weight minus a maximum-weight independent set (that set rides free on
  the all-zeros row).
- design_greedy_chordal: budgeted m; peels heavy independent sets while
  more classes remain than the chromatic number requires.
- design_greedy_interval: same idea on interval graphs, but each round
  grabs a maximum-weight k-colorable subgraph via min-cost flow.
- design_exact: branch and bound over label assignments, optimal but
  exponential; fine up to a dozen vertices or so.
"""

from causalsep import (
    build_graph,
    design_exact,
    design_greedy_chordal,
    design_greedy_interval,
    design_unbounded_optimal,
    export_ilp,
    min_separating_size,
)

# two K4s sharing an edge plus a pendant; expensive hub vertices
G = build_graph(7, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3),
                    (2, 4), (3, 4), (2, 5), (3, 5), (4, 5), (5, 6)],
                weights=[1, 1, 9, 9, 1, 9, 1])
msize = min_separating_size(G)
print("chromatic lower bound on m:", msize)

free = design_unbounded_optimal(G)
print("unbounded:", free.algorithm, "m =", free.design.m,
      "cost", free.total_cost)

for m in range(msize, msize + 3):
    g = design_greedy_chordal(G, m=m)
    e = design_exact(G, m=m)
    print(f"m={m}: greedy {g.total_cost}  exact {e.total_cost}")

# interval graphs get the flow-based greedy as well
I = build_graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (1, 3)],
                weights=[2, 7, 3, 7, 2],
                intervals=[(0, 2), (1, 4), (3, 5), (4, 7), (6, 8)])
r = design_greedy_interval(I, m=2)
print("interval greedy cost:", r.total_cost,
      "rows:", [lab.bitstring() for lab in r.design.rows])

# the same problem exports as an LP-format integer program for external
# solvers: binary x_v_l picks label l for vertex v
print()
print(export_ilp(G, m=msize)[:400], "...")
