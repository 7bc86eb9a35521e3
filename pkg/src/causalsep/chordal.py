"""Chordal-graph machinery: recognition, elimination orders, coloring,
maximum-weight independent sets, and k-colorable subgraphs of interval graphs.

Ordering convention used throughout: a perfect elimination ordering (PEO)
``v_1..v_n`` is one where each vertex's *earlier-in-order* neighbors form a
clique.  Maximum cardinality search emits its visit order, which has exactly
this property on chordal graphs.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

from .errors import InvalidK, InvalidPeo, NoIntervals, NotChordal
from .graph import Cost, Graph, exact_sum


@dataclass(frozen=True)
class Peo(object):
    """A vertex order whose earlier-in-order neighborhoods are cliques."""

    order: tuple[int, ...]

    @cached_property
    def position(self) -> tuple[int, ...]:
        pos = [0] * len(self.order)
        for i, v in enumerate(self.order):
            pos[v] = i
        return tuple(pos)

    def __len__(self) -> int:
        return len(self.order)


@dataclass(frozen=True)
class Coloring:
    """Proper coloring: ``class_of[v]`` is the color of vertex v, colors
    contiguous in ``[0, num_classes)``."""

    class_of: tuple[int, ...]
    num_classes: int

    def classes(self) -> tuple[tuple[int, ...], ...]:
        out: list[list[int]] = [[] for _ in range(self.num_classes)]
        for v, c in enumerate(self.class_of):
            out[c].append(v)
        return tuple(tuple(cl) for cl in out)


def is_proper(G: Graph, class_of: Sequence[int]) -> bool:
    return all(class_of[u] != class_of[v] for u, v in G.edges)


def find_peo_violation(G: Graph, order: Sequence[int]) -> tuple[int, int, int] | None:
    """A triple (v, u, w) where u, w are earlier-in-order neighbors of v yet
    not adjacent; None when the order is a valid PEO.

    Only each vertex's latest earlier neighbor u needs checking: if every
    other earlier neighbor of v is adjacent to u, earlier neighborhoods are
    cliques by induction along the order.
    """
    pos = {v: i for i, v in enumerate(order)}
    if len(pos) != G.n or set(pos) != set(range(G.n)):
        raise InvalidPeo(f"order is not a permutation of 0..{G.n - 1}")
    for i, v in enumerate(order):
        earlier = [u for u in G.adjacency[v] if pos[u] < i]
        if len(earlier) < 2:
            continue
        u = max(earlier, key=pos.__getitem__)
        adj_u = G.adjacency[u]
        for w in earlier:
            if w != u and w not in adj_u:
                return v, u, w
    return None


def is_peo(G: Graph, order: Sequence[int]) -> bool:
    return find_peo_violation(G, order) is None


def _require_peo(G: Graph, peo: Peo) -> None:
    bad = find_peo_violation(G, peo.order)
    if bad is not None:
        v, u, w = bad
        raise InvalidPeo(
            f"earlier neighbors {u},{w} of vertex {v} are not adjacent")


def _chordless_cycle_witness(G: Graph, v: int, u: int, w: int) -> tuple[int, ...] | None:
    """Chordless cycle through v given nonadjacent neighbors u, w of v.

    Looks for a shortest u-w path avoiding v and every other neighbor of v;
    shortest paths are induced, so v + path is a chordless cycle (len >= 4)
    whenever such a path exists.
    """
    blocked = (G.adjacency[v] - {u, w}) | {v}
    prev: dict[int, int | None] = {u: None}
    frontier = [u]
    while frontier and w not in prev:
        nxt: list[int] = []
        for x in frontier:
            for y in G.adjacency[x]:
                if y not in prev and y not in blocked:
                    prev[y] = x
                    nxt.append(y)
        frontier = nxt
    if w not in prev:
        return None
    path = [w]
    while prev[path[-1]] is not None:
        path.append(prev[path[-1]])  # type: ignore[arg-type]
    path.reverse()
    return (v, *path)


def maximum_cardinality_search(G: Graph) -> Peo:
    """Visit order of maximum cardinality search, verified to be a PEO.

    Ties on the visited-neighbor count go to the lowest vertex id, so the
    output is deterministic.  Raises NotChordal (with a chordless-cycle
    witness when one is found) on non-chordal input.
    """
    n = G.n
    label = [0] * n
    visited = [False] * n
    order: list[int] = []
    for _ in range(n):
        best = -1
        for v in range(n):
            if not visited[v] and (best < 0 or label[v] > label[best]):
                best = v
        visited[best] = True
        order.append(best)
        for u in G.adjacency[best]:
            if not visited[u]:
                label[u] += 1

    bad = find_peo_violation(G, order)
    if bad is not None:
        v, u, w = bad
        cycle = _chordless_cycle_witness(G, v, u, w)
        raise NotChordal(
            f"no chordal elimination order: earlier neighbors {u},{w} of "
            f"vertex {v} are not adjacent", vertex=v, cycle=cycle)
    return Peo(order=tuple(order))


def is_chordal(G: Graph) -> bool:
    try:
        maximum_cardinality_search(G)
        return True
    except NotChordal:
        return False


def chromatic_number_chordal(G: Graph, peo: Peo) -> int:
    """Chromatic number: 1 + the largest earlier-neighbor count along the
    PEO, which equals the maximum clique size."""
    _require_peo(G, peo)
    if G.n == 0:
        return 0
    pos = peo.position
    best = 0
    for i, v in enumerate(peo.order):
        back = sum(1 for u in G.adjacency[v] if pos[u] < i)
        best = max(best, back)
    return best + 1


def greedy_color_chordal(G: Graph, peo: Peo) -> Coloring:
    """Greedy coloring along the PEO, smallest free color first.

    Each vertex's earlier neighbors form a clique, so the color index never
    exceeds the maximum clique size minus one: the result uses exactly the
    chromatic number of colors.
    """
    _require_peo(G, peo)
    pos = peo.position
    color = [-1] * G.n
    for i, v in enumerate(peo.order):
        taken = {color[u] for u in G.adjacency[v] if pos[u] < i}
        c = 0
        while c in taken:
            c += 1
        color[v] = c
    num = max(color) + 1 if color else 0
    return Coloring(class_of=tuple(color), num_classes=num)


def max_weight_independent_set_frank(G: Graph, peo: Peo) -> tuple[int, ...]:
    """Maximum-weight independent set of a chordal graph.

    Two sweeps over the PEO: the first walks the order backwards keeping
    residual weights; a vertex with positive residual is marked as a
    candidate and its residual is charged to every earlier-in-order
    neighbor.  The second walks forwards and keeps a candidate iff none of
    its earlier-in-order neighbors was already kept.  Residuals are compared
    against zero exactly (no tolerance).
    """
    _require_peo(G, peo)
    pos = peo.position
    residual: list[Cost] = list(G.weights)
    candidate = [False] * G.n
    for i in range(G.n - 1, -1, -1):
        v = peo.order[i]
        if residual[v] > 0:
            candidate[v] = True
            r = residual[v]
            for u in G.adjacency[v]:
                if pos[u] < i:
                    residual[u] -= r
    chosen = [False] * G.n
    for i in range(G.n):
        v = peo.order[i]
        if candidate[v] and not any(
                chosen[u] for u in G.adjacency[v] if pos[u] < i):
            chosen[v] = True
    return tuple(v for v in range(G.n) if chosen[v])


def set_weight(G: Graph, vertices: Sequence[int]) -> Cost:
    return exact_sum(G.weights[v] for v in vertices)


# --- k-colorable induced subgraph of an interval graph ----------------------


def max_weight_k_colorable_interval(
        G: Graph, k: int) -> tuple[tuple[int, ...], tuple[tuple[int, ...], ...]]:
    """Maximum-weight vertex set of an interval graph whose induced subgraph
    is k-colorable, along with a proper coloring of it into <= k classes.

    A k-colorable set of intervals is a union of k chains (pairwise-disjoint
    interval sequences).  Build a line network over the sorted distinct
    endpoints: backbone arcs of capacity k and cost 0 between consecutive
    ranks, plus one arc per interval from rank(l) to rank(r)+1 of capacity 1
    and cost -w.  Closed intervals touching at a point overlap, and indeed
    cannot share a chain here since each interval arc occupies rank(r).
    Successive shortest augmenting paths, stopping as soon as the best path
    would add nonnegative cost; the flow then decomposes into at most k unit
    paths whose interval arcs are the color classes.

    Returns (sorted vertex tuple, tuple of color classes).
    """
    if k < 1:
        raise InvalidK(f"k must be >= 1, got {k}")
    if G.intervals is None:
        raise NoIntervals("graph has no interval data")
    if G.n == 0:
        return (), ()

    coords = sorted({x for iv in G.intervals for x in iv})
    rank = {x: i for i, x in enumerate(coords)}
    p = len(coords)
    num_nodes = p + 1  # node i sits before coordinate i; node p is the sink

    # arcs: (head, capacity, cost, vertex or None); residual via paired index
    arcs: list[list] = []
    adj: list[list[int]] = [[] for _ in range(num_nodes)]

    def add_arc(a: int, b: int, cap: int, cost: float, vertex: int | None) -> None:
        adj[a].append(len(arcs))
        arcs.append([b, cap, cost, vertex])
        adj[b].append(len(arcs))
        arcs.append([a, 0, -cost, None])

    for i in range(p):
        add_arc(i, i + 1, k, 0, None)
    for v in range(G.n):
        lo, hi = G.intervals[v]
        add_arc(rank[lo], rank[hi] + 1, 1, -G.weights[v], v)

    source, sink = 0, p
    for _ in range(min(k, G.n)):
        # Bellman-Ford over the residual network (negative arc costs); None
        # marks unreachable so exact weight types survive untouched
        dist: list[Cost | None] = [None] * num_nodes
        pred: list[int] = [-1] * num_nodes
        dist[source] = 0
        for _round in range(num_nodes):
            changed = False
            for a in range(num_nodes):
                da = dist[a]
                if da is None:
                    continue
                for idx in adj[a]:
                    head, cap, cost, _v = arcs[idx]
                    cand = da + cost
                    if cap > 0 and (dist[head] is None or cand < dist[head]):
                        dist[head] = cand
                        pred[head] = idx
                        changed = True
            if not changed:
                break
        if dist[sink] is None or dist[sink] >= 0:
            break
        node = sink
        while node != source:
            idx = pred[node]
            arcs[idx][1] -= 1
            arcs[idx ^ 1][1] += 1
            node = arcs[idx ^ 1][0]

    # decompose: each unit of flow from source is one chain / color class
    classes: list[tuple[int, ...]] = []
    flow_of = [arcs[i ^ 1][1] for i in range(0, len(arcs), 2)]
    while True:
        node = source
        chain: list[int] = []
        moved = False
        while node != sink:
            advanced = False
            for idx in adj[node]:
                if idx % 2 == 1:
                    continue
                if flow_of[idx // 2] > 0:
                    flow_of[idx // 2] -= 1
                    if arcs[idx][3] is not None:
                        chain.append(arcs[idx][3])
                    node = arcs[idx][0]
                    advanced = moved = True
                    break
            if not advanced:
                break
        if not moved:
            break
        if chain:
            classes.append(tuple(sorted(chain)))

    chosen = tuple(sorted(v for cl in classes for v in cl))
    return chosen, tuple(classes)
