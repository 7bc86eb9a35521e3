"""Intervention-design constructions on chordal skeletons.

Four designers share one playbook: pick independent (or few-colorable) sets
for the cheap low-weight labels first, then color whatever is left with its
minimum number of colors and hand the leftover labels to the classes in
cost order.  All of them emit a verified separating design.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .chordal import (
    Coloring,
    Peo,
    chromatic_number_chordal,
    greedy_color_chordal,
    max_weight_independent_set_frank,
    max_weight_k_colorable_interval,
    maximum_cardinality_search,
)
from .errors import (
    BudgetExceeded,
    GraphError,
    InsufficientInterventions,
    NoIntervals,
)
from .graph import Cost, Graph, exact_sum, induced_subgraph
from .sepsys import (
    Design,
    Label,
    LabelPool,
    assign_labels_min_cost,
    design_cost,
    label_pool,
    verify_graph_separating,
)


@dataclass(frozen=True)
class DesignResult:
    design: Design
    total_cost: Cost
    algorithm: str
    optimal: bool = True
    diagnostics: tuple[dict, ...] = field(default_factory=tuple)


def _with_weights(G: Graph, weights: Sequence[Cost] | None) -> Graph:
    return G if weights is None else G.with_weights(weights)


def _finish(G: Graph, rows: Sequence[Label], m: int, algorithm: str,
            diagnostics: list[dict], optimal: bool = True) -> DesignResult:
    design = Design(m=m, rows=tuple(rows))
    report = verify_graph_separating(G, design)
    assert report.separating, f"{algorithm} produced a non-separating design"
    return DesignResult(design=design,
                        total_cost=design_cost(design, G.weights),
                        algorithm=algorithm,
                        optimal=optimal,
                        diagnostics=tuple(diagnostics))


def min_separating_size(G: Graph) -> int:
    """ceil(log2 chi): rows must be distinct across every edge, and a proper
    coloring needs chi distinct rows, so 2^m >= chi is forced and enough."""
    peo = maximum_cardinality_search(G)
    chi = chromatic_number_chordal(G, peo)
    return max(0, chi - 1).bit_length()


def design_unbounded_optimal(G: Graph,
                             weights: Sequence[Cost] | None = None) -> DesignResult:
    """Cheapest design with no bound on the number of interventions.

    The maximum-weight independent set S takes the all-zero row (never
    intervened on); the rest is colored with its minimum number of colors
    and class i takes unit vector e_i.  Total cost is w(V) - w(S), which no
    separating design can beat: rows equal within a class force classes to
    be independent sets, and only one class can have the zero row.
    """
    G = _with_weights(G, weights)
    peo = maximum_cardinality_search(G)
    S = max_weight_independent_set_frank(G, peo)
    rest = sorted(set(range(G.n)) - set(S))
    if rest:
        H, ids = induced_subgraph(G, rest)
        coloring = greedy_color_chordal(H, maximum_cardinality_search(H))
        c = coloring.num_classes
    else:
        ids, coloring, c = (), None, 0
    rows: list[Label | None] = [None] * G.n
    zero = Label((0,) * c)
    for v in S:
        rows[v] = zero
    if coloring is not None:
        for i, v in enumerate(ids):
            k = coloring.class_of[i]
            rows[v] = Label(1 if j == k else 0 for j in range(c))
    diags = [{
        "mwis": tuple(S),
        "mwis_weight": exact_sum(G.weights[v] for v in S),
        "residual_classes": c,
    }]
    return _finish(G, rows, c, "unbounded", diags)


def _check_budget(chi: int, m: int) -> None:
    need = max(0, chi - 1).bit_length()
    if m < need:
        raise InsufficientInterventions(
            f"chromatic number {chi} needs at least {need} interventions, got {m}")


def design_greedy_chordal(G: Graph, weights: Sequence[Cost] | None = None,
                          m: int = 0) -> DesignResult:
    """Greedy bounded-budget design for a chordal skeleton.

    With r = min(2^m, n) usable labels: while r exceeds the chromatic
    number, peel off a maximum-weight independent set of the residual graph
    and give it the lightest unused label, one label per step.  The residual
    is then colored minimally and the leftover labels go to its classes,
    heaviest class first.
    """
    G = _with_weights(G, weights)
    if G.n == 0:
        return _finish(G, (), m, "greedy-chordal", [])
    peo = maximum_cardinality_search(G)
    chi = chromatic_number_chordal(G, peo)
    _check_budget(chi, m)
    pool = label_pool(m, G.n)
    r = pool.t
    next_label = 0
    remaining = list(range(G.n))
    rows: list[Label | None] = [None] * G.n
    diags: list[dict] = []
    while r > chi and remaining:
        H, ids = induced_subgraph(G, remaining)
        S_local = max_weight_independent_set_frank(
            H, maximum_cardinality_search(H))
        S = tuple(ids[v] for v in S_local)
        lab = pool.labels[next_label]
        next_label += 1
        peeled = set(S)
        for v in S:
            rows[v] = lab
        remaining = [v for v in remaining if v not in peeled]
        r -= 1
        diags.append({"step": len(diags), "set": S, "label": lab.bitstring(),
                      "residual": len(remaining)})
    if not remaining and r > chi:
        diags.append({"event": "early-stop", "unused_labels": pool.t - next_label})
    if remaining:
        H, ids = induced_subgraph(G, remaining)
        coloring = greedy_color_chordal(H, maximum_cardinality_search(H))
        classes = [tuple(ids[v] for v in cl) for cl in coloring.classes()]
        costs = [exact_sum(G.weights[v] for v in cl) for cl in classes]
        assigned = assign_labels_min_cost(costs, pool.labels[next_label:])
        for cl, lab in zip(classes, assigned):
            for v in cl:
                rows[v] = lab
        diags.append({"final_classes": len(classes),
                      "labels_left": pool.t - next_label})
    return _finish(G, rows, m, "greedy-chordal", diags)


def design_greedy_interval(G: Graph, weights: Sequence[Cost] | None = None,
                           m: int = 0) -> DesignResult:
    """Greedy bounded-budget design for an interval skeleton.

    Steps through label weights t = 0, 1, ...: while the C(m,t) labels of
    weight t leave at least chi labels to spare, carve out the maximum-weight
    C(m,t)-colorable induced subgraph of the residual and give its classes
    those labels.  Finishes like the chordal greedy.
    """
    if G.intervals is None:
        raise NoIntervals("greedy interval designer needs interval data")
    G = _with_weights(G, weights)
    if G.n == 0:
        return _finish(G, (), m, "greedy-interval", [])
    peo = maximum_cardinality_search(G)
    chi = chromatic_number_chordal(G, peo)
    _check_budget(chi, m)
    pool = label_pool(m, G.n)
    r = pool.t
    next_label = 0
    tw = 0
    remaining = list(range(G.n))
    rows: list[Label | None] = [None] * G.n
    diags: list[dict] = []
    while remaining and r - math.comb(m, tw) >= chi:
        k = math.comb(m, tw)
        step_labels = pool.labels[next_label:next_label + k]
        assert len(step_labels) == k and all(l.weight == tw for l in step_labels)
        H, ids = induced_subgraph(G, remaining)
        chosen_local, classes_local = max_weight_k_colorable_interval(H, k)
        chosen = tuple(ids[v] for v in chosen_local)
        for j, cl in enumerate(classes_local):
            for v in cl:
                rows[ids[v]] = step_labels[j]
        peeled = set(chosen)
        remaining = [v for v in remaining if v not in peeled]
        r -= k
        next_label += k
        diags.append({"step": tw, "set": chosen,
                      "labels": [l.bitstring() for l in step_labels],
                      "residual": len(remaining)})
        tw += 1
    if not remaining and next_label < pool.t:
        diags.append({"event": "early-stop", "unused_labels": pool.t - next_label})
    if remaining:
        H, ids = induced_subgraph(G, remaining)
        coloring = greedy_color_chordal(H, maximum_cardinality_search(H))
        classes = [tuple(ids[v] for v in cl) for cl in coloring.classes()]
        costs = [exact_sum(G.weights[v] for v in cl) for cl in classes]
        assigned = assign_labels_min_cost(costs, pool.labels[next_label:])
        for cl, lab in zip(classes, assigned):
            for v in cl:
                rows[v] = lab
        diags.append({"final_classes": len(classes),
                      "labels_left": pool.t - next_label})
    return _finish(G, rows, m, "greedy-interval", diags)


# --- exact bounded-budget search ---------------------------------------------


def _canonical_rows(rows: Sequence[Label], pool: LabelPool) -> tuple[Label, ...]:
    """Relabel within each weight class so labels appear in pool order by
    first use along vertex ids; cost and separation are untouched."""
    by_weight: dict[int, list[Label]] = {}
    for lab in pool.labels:
        by_weight.setdefault(lab.weight, []).append(lab)
    remap: dict[Label, Label] = {}
    used_per_weight: dict[int, int] = {}
    for lab in rows:
        if lab not in remap:
            i = used_per_weight.get(lab.weight, 0)
            remap[lab] = by_weight[lab.weight][i]
            used_per_weight[lab.weight] = i + 1
    return tuple(remap[lab] for lab in rows)


def design_exact(G: Graph, weights: Sequence[Cost] | None = None, m: int = 0,
                 node_budget: int | None = None) -> DesignResult:
    """Minimum-cost design with at most m interventions, by branch and bound
    over proper label assignments.

    Vertices are placed in reverse elimination order; each takes either an
    already-used label or the first unused label of some weight (labels of
    equal weight are interchangeable, so other unused labels are symmetric
    copies).  A branch dies when the accumulated cost plus each remaining
    vertex's lightest non-conflicting label weight cannot beat the
    incumbent.  Cost ties resolve toward the lexicographically smallest
    canonical row matrix, so the result is deterministic.

    The greedy chordal design seeds the incumbent, so the answer never
    exceeds it even if the node budget runs out (BudgetExceeded then carries
    the best incumbent, flagged non-optimal).
    """
    G = _with_weights(G, weights)
    if G.n == 0:
        return _finish(G, (), m, "exact", [])
    peo = maximum_cardinality_search(G)
    chi = chromatic_number_chordal(G, peo)
    _check_budget(chi, m)
    pool = label_pool(m, G.n)
    weight_count: dict[int, int] = {}
    for lab in pool.labels:
        weight_count[lab.weight] = weight_count.get(lab.weight, 0) + 1

    order = tuple(reversed(peo.order))
    w = G.weights

    seed = design_greedy_chordal(G, m=m)
    inc_rows = _canonical_rows(seed.design.rows, pool)
    inc_key = tuple(lab.bits for lab in inc_rows)
    # accumulate like the search does so float comparisons stay consistent
    inc_cost: Cost = 0
    for v in order:
        inc_cost = inc_cost + w[v] * inc_rows[v].weight

    assigned: list[Label | None] = [None] * G.n
    used: dict[Label, int] = {}
    nodes = 0

    def remaining_bound(depth: int) -> Cost:
        total: Cost = 0
        for i in range(depth, G.n):
            v = order[i]
            nbr_labels = {assigned[u] for u in G.adjacency[v]
                          if assigned[u] is not None}
            nbr_per_weight: dict[int, int] = {}
            for lab in nbr_labels:
                nbr_per_weight[lab.weight] = nbr_per_weight.get(lab.weight, 0) + 1
            for wt in sorted(weight_count):
                if nbr_per_weight.get(wt, 0) < weight_count[wt]:
                    total += w[v] * wt
                    break
        return total

    def dfs(depth: int, cost: Cost) -> None:
        nonlocal nodes, inc_cost, inc_key, inc_rows
        if depth == G.n:
            key = tuple(lab.bits for lab in _canonical_rows(assigned, pool))
            if cost < inc_cost or (cost == inc_cost and key < inc_key):
                inc_cost = cost
                inc_key = key
                inc_rows = tuple(Label(b) for b in key)
            return
        if cost + remaining_bound(depth) > inc_cost:
            return
        v = order[depth]
        nbr_labels = {assigned[u] for u in G.adjacency[v]
                      if assigned[u] is not None}
        offered_weights: set[int] = set()
        for lab in pool.labels:
            if lab in used:
                if lab in nbr_labels:
                    continue
            else:
                if lab.weight in offered_weights:
                    continue
                offered_weights.add(lab.weight)
                if lab in nbr_labels:
                    continue
            nodes += 1
            if node_budget is not None and nodes > node_budget:
                incumbent = _finish(G, inc_rows, m, "exact", [
                    {"nodes": nodes, "budget": node_budget}], optimal=False)
                raise BudgetExceeded(
                    f"node budget {node_budget} exhausted", incumbent=incumbent)
            assigned[v] = lab
            used[lab] = used.get(lab, 0) + 1
            dfs(depth + 1, cost + w[v] * lab.weight)
            used[lab] -= 1
            if not used[lab]:
                del used[lab]
            assigned[v] = None

    dfs(0, 0)
    return _finish(G, inc_rows, m, "exact", [{"nodes": nodes}])


# --- LP export ----------------------------------------------------------------


def _fmt_coeff(x: Cost) -> str:
    if isinstance(x, Fraction):
        raise GraphError("cannot export Fraction weights; convert to float")
    if isinstance(x, float):
        return repr(x)
    return str(x)


def export_ilp(G: Graph, weights: Sequence[Cost] | None = None, m: int = 1) -> str:
    """Integer program for the bounded-budget problem, in LP file format.

    One binary variable x_i_k per (vertex, label); objective coefficient is
    w_i times the label weight b(k); every vertex picks exactly one label
    and adjacent vertices may not share one.  t = min(2^m, n) labels.
    """
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    G = _with_weights(G, weights)
    pool = label_pool(m, G.n)
    t = pool.t
    b = pool.b

    terms = [f"{_fmt_coeff(G.weights[i] * b[k])} x_{i}_{k}"
             for i in range(G.n) for k in range(t)
             if b[k] and G.weights[i]]
    lines = ["Minimize"]
    lines.append(" obj: " + (" + ".join(terms) if terms else "0 x_0_0"))
    lines.append("Subject To")
    for i in range(G.n):
        lhs = " + ".join(f"x_{i}_{k}" for k in range(t))
        lines.append(f" assign_{i}: {lhs} = 1")
    for u, v in G.edges:
        for k in range(t):
            lines.append(f" edge_{u}_{v}_{k}: x_{u}_{k} + x_{v}_{k} <= 1")
    lines.append("Binary")
    for i in range(G.n):
        for k in range(t):
            lines.append(f" x_{i}_{k}")
    lines.append("End")
    return "\n".join(lines) + "\n"
