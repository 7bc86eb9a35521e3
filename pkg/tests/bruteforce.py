"""Brute-force oracles used to pin expected values in the tests.

Everything here recomputes results from definitions (subset enumeration,
partition enumeration, permutation enumeration) rather than reusing the
package's algorithms, so a test comparing the two exercises genuinely
different code paths.  Sizes are small by design; nothing in this module is
meant to be fast.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, permutations
from typing import Iterable, Iterator, Sequence

from causalsep.graph import Graph, build_graph, exact_sum


# ---------------------------------------------------------------------------
# independent sets and colorings


def brute_mwis_weight(G: Graph):
    """Maximum-weight independent set weight by memoized subset recursion."""
    adj = [0] * G.n
    for u, v in G.edges:
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    w = G.weights

    @lru_cache(maxsize=None)
    def best(mask: int):
        if not mask:
            return 0
        v = (mask & -mask).bit_length() - 1
        skip = best(mask & ~(1 << v))
        take = w[v] + best(mask & ~((1 << v) | adj[v]))
        return take if take > skip else skip

    out = best((1 << G.n) - 1)
    best.cache_clear()
    return out


def _colorable(G: Graph, k: int) -> bool:
    """Backtracking proper-coloring test, canonical color introduction only."""
    n = G.n
    adj = G.adjacency
    order = sorted(range(n), key=lambda v: -len(adj[v]))
    color: dict[int, int] = {}

    def place(i: int) -> bool:
        if i == n:
            return True
        v = order[i]
        used = {color[u] for u in adj[v] if u in color}
        limit = min(k, (max(color.values()) + 2) if color else 1)
        for c in range(limit):
            if c in used:
                continue
            color[v] = c
            if place(i + 1):
                return True
            del color[v]
        return False

    return place(0)


def brute_chromatic(G: Graph) -> int:
    if G.n == 0:
        return 0
    for k in range(1, G.n + 1):
        if _colorable(G, k):
            return k
    raise AssertionError("unreachable: n colors always suffice")


def brute_max_weight_k_colorable(G: Graph, k: int):
    """Heaviest vertex subset whose induced subgraph is k-colorable, by
    trying every subset."""
    best = 0
    for mask in range(1 << G.n):
        verts = [v for v in range(G.n) if mask >> v & 1]
        sub = _induced(G, verts)
        if _colorable(sub, k):
            weight = exact_sum([G.weights[v] for v in verts])
            if weight > best:
                best = weight
    return best


def _induced(G: Graph, verts: Sequence[int]) -> Graph:
    idx = {v: i for i, v in enumerate(sorted(verts))}
    edges = [(idx[u], idx[v]) for u, v in G.edges if u in idx and v in idx]
    return build_graph(len(verts), edges,
                       weights=[G.weights[v] for v in sorted(verts)])


# ---------------------------------------------------------------------------
# chordality from the definition


def brute_is_chordal(G: Graph) -> bool:
    """No induced cycle of length >= 4, checked over every vertex subset.

    A subset induces a chordless cycle exactly when its induced subgraph is
    connected and 2-regular.
    """
    for size in range(4, G.n + 1):
        for verts in combinations(range(G.n), size):
            sub = _induced(G, verts)
            degs = [len(sub.adjacency[v]) for v in range(sub.n)]
            if all(d == 2 for d in degs) and _connected(sub):
                return False
    return True


def _connected(G: Graph) -> bool:
    if G.n == 0:
        return True
    seen = {0}
    frontier = [0]
    while frontier:
        v = frontier.pop()
        for u in G.adjacency[v]:
            if u not in seen:
                seen.add(u)
                frontier.append(u)
    return len(seen) == G.n


def all_graphs(n: int) -> Iterator[tuple[tuple[int, int], ...]]:
    """Edge lists of every labeled graph on n vertices."""
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield tuple(p for i, p in enumerate(pairs) if mask >> i & 1)


# ---------------------------------------------------------------------------
# design cost from partition enumeration


def proper_partitions(G: Graph, max_classes: int) -> Iterator[list[list[int]]]:
    """Every partition of the vertices into at most max_classes independent
    sets, one representative per set partition (restricted growth order)."""
    n = G.n
    adj = G.adjacency
    classes: list[list[int]] = []

    def extend(v: int) -> Iterator[list[list[int]]]:
        if v == n:
            yield [list(c) for c in classes]
            return
        opened = len(classes)
        for c in range(min(opened + 1, max_classes)):
            if c < opened and any(u in adj[v] for u in classes[c]):
                continue
            if c == opened:
                classes.append([])
            classes[c].append(v)
            yield from extend(v + 1)
            classes[c].pop()
            if c == opened:
                classes.pop()

    yield from extend(0)


def brute_min_design_cost(G: Graph, m: int):
    """Cheapest separating design with m interventions, by enumerating every
    proper vertex partition into at most 2^m classes and assigning the
    lightest labels to the heaviest classes (rearrangement pairing)."""
    label_weights = sorted(bin(x).count("1") for x in range(1 << m))
    best = None
    for classes in proper_partitions(G, 1 << m):
        cw = sorted((exact_sum([G.weights[v] for v in cl]) for cl in classes),
                    reverse=True)
        cost = exact_sum([cw[i] * label_weights[i] for i in range(len(cw))])
        if best is None or cost < best:
            best = cost
    return best


def brute_min_design_cost_by_rows(G: Graph, m: int):
    """Same minimum by assigning each vertex any of the 2^m labels directly.
    Exponential in n; only for validating brute_min_design_cost."""
    n = G.n
    labels = list(range(1 << m))
    best = None

    def extend(v: int, rows: list[int], cost):
        nonlocal best
        if best is not None and cost > best:
            return
        if v == n:
            if best is None or cost < best:
                best = cost
            return
        for lab in labels:
            if any(rows[u] == lab for u in G.adjacency[v] if u < v):
                continue
            rows.append(lab)
            extend(v + 1, rows, cost + G.weights[v] * bin(lab).count("1"))
            rows.pop()

    extend(0, [], 0)
    return best


# ---------------------------------------------------------------------------
# orientations, evidence, learnability


def orientation_from_order(G: Graph, order: Sequence[int]) -> tuple[tuple[int, int], ...]:
    pos = {v: i for i, v in enumerate(order)}
    return tuple((u, v) if pos[u] < pos[v] else (v, u) for u, v in G.edges)


def _arcs_moral(G: Graph, arcs: Iterable[tuple[int, int]]) -> bool:
    parents: list[list[int]] = [[] for _ in range(G.n)]
    for a, b in arcs:
        parents[b].append(a)
    for ps in parents:
        for a, b in combinations(ps, 2):
            if not G.has_edge(a, b):
                return False
    return True


def brute_moral_orientations(G: Graph) -> list[tuple[tuple[int, int], ...]]:
    """Every acyclic orientation without an immorality, via all vertex
    orders (each DAG appears for its topological orders; first one kept)."""
    seen: set[tuple[tuple[int, int], ...]] = set()
    out: list[tuple[tuple[int, int], ...]] = []
    for order in permutations(range(G.n)):
        arcs = orientation_from_order(G, order)
        if arcs in seen:
            continue
        seen.add(arcs)
        if _arcs_moral(G, arcs):
            out.append(arcs)
    return out


def cut_evidence(G: Graph, arcs: Sequence[tuple[int, int]],
                 interventions: Iterable[Iterable[int]]) -> set[tuple[int, int]]:
    """Arcs whose endpoints are split by at least one intervention set."""
    out: set[tuple[int, int]] = set()
    for inter in interventions:
        s = set(inter)
        for a, b in arcs:
            if (a in s) != (b in s):
                out.add((a, b))
    return out


def consistent_orientations(G: Graph, evidence: Iterable[tuple[int, int]],
                            orientations=None) -> list[tuple[tuple[int, int], ...]]:
    ev = set(evidence)
    pool = brute_moral_orientations(G) if orientations is None else orientations
    return [arcs for arcs in pool if ev <= set(arcs)]


def intersection_closure(G: Graph, evidence: Iterable[tuple[int, int]],
                         orientations=None) -> set[tuple[int, int]] | None:
    """Arcs directed the same way in every moral orientation consistent with
    the evidence; None when nothing is consistent."""
    cands = consistent_orientations(G, evidence, orientations)
    if not cands:
        return None
    common = set(cands[0])
    for arcs in cands[1:]:
        common &= set(arcs)
    return common


def brute_learns_all(G: Graph, true_arcs: tuple[tuple[int, int], ...],
                     interventions: Iterable[Iterable[int]],
                     orientations=None) -> bool:
    """True when the cut evidence from the true DAG is compatible with no
    other moral orientation."""
    ev = cut_evidence(G, true_arcs, interventions)
    return consistent_orientations(G, ev, orientations) == [true_arcs]
