"""Immutable undirected graphs with vertex costs and optional interval data.

Vertices are dense 0-based integers.  Edges are stored canonically as
``(u, v)`` with ``u < v``, sorted.  A graph may carry a closed interval
``[l_i, r_i]`` per vertex; in that case the edge set must equal the
interval-overlap graph (touching endpoints count as overlap).
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

from .errors import (
    DuplicateEdge,
    GraphError,
    IntervalMismatch,
    InvalidWeight,
    NegativeWeight,
    SelfLoop,
    VertexOutOfRange,
    WeightLengthMismatch,
)

Cost = int | float | Fraction
Edge = tuple[int, int]
Interval = tuple[Cost, Cost]


def intervals_overlap(a: Interval, b: Interval) -> bool:
    """Closed-interval overlap; single-point touching counts."""
    return a[0] <= b[1] and b[0] <= a[1]


@dataclass(frozen=True)
class Graph:
    """Undirected graph with per-vertex costs.

    Instances are immutable after construction and safe to share across
    workers.  Use :func:`build_graph` rather than the constructor; it
    canonicalizes and validates.
    """

    n: int
    edges: tuple[Edge, ...]
    weights: tuple[Cost, ...]
    intervals: tuple[Interval, ...] | None = None
    names: tuple[str, ...] | None = None

    @cached_property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        adj: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return tuple(frozenset(s) for s in adj)

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adjacency[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def total_weight(self) -> Cost:
        return exact_sum(self.weights)

    def with_weights(self, weights: Sequence[Cost]) -> "Graph":
        """Copy of this graph with replaced vertex costs."""
        return build_graph(self.n, self.edges, weights=weights,
                           intervals=self.intervals, names=self.names)


def exact_sum(values: Iterable[Cost]) -> Cost:
    """Sum that is order-independent for floats (math.fsum) and exact for
    int/Fraction inputs."""
    vals = list(values)
    if not vals:
        return 0
    if any(isinstance(v, Fraction) for v in vals):
        total: Cost = 0
        for v in vals:
            total += v
        return total
    if all(isinstance(v, int) for v in vals):
        return sum(vals)
    return math.fsum(vals)


def build_graph(n: int,
                edges: Iterable[Sequence[int]] = (),
                weights: Sequence[Cost] | None = None,
                intervals: Sequence[Sequence[Cost]] | None = None,
                names: Sequence[str] | None = None) -> Graph:
    """Construct a validated, canonicalized :class:`Graph`.

    ``weights`` defaults to all ones.  If ``intervals`` are given, the
    pairwise-overlap graph they induce must equal ``edges``.
    """
    if n < 0:
        raise GraphError(f"vertex count must be >= 0, got {n}")

    canon: list[Edge] = []
    seen: set[Edge] = set()
    for e in edges:
        u, v = int(e[0]), int(e[1])
        if u == v:
            raise SelfLoop(f"self-loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise VertexOutOfRange(f"edge ({u},{v}) outside 0..{n - 1}")
        if u > v:
            u, v = v, u
        if (u, v) in seen:
            raise DuplicateEdge(f"duplicate edge ({u},{v})")
        seen.add((u, v))
        canon.append((u, v))
    canon.sort()

    if weights is None:
        wts: tuple[Cost, ...] = tuple(1 for _ in range(n))
    else:
        wts = tuple(weights)
        if len(wts) != n:
            raise WeightLengthMismatch(
                f"expected {n} weights, got {len(wts)}")
        for i, w in enumerate(wts):
            if isinstance(w, float) and not math.isfinite(w):
                raise InvalidWeight(f"weight of vertex {i} is not finite: {w}")
            if w < 0:
                raise NegativeWeight(f"negative weight at vertex {i}: {w}")

    ivs: tuple[Interval, ...] | None = None
    if intervals is not None:
        ivs = tuple((iv[0], iv[1]) for iv in intervals)
        if len(ivs) != n:
            raise IntervalMismatch(
                f"expected {n} intervals, got {len(ivs)}")
        for i, (lo, hi) in enumerate(ivs):
            if lo > hi:
                raise IntervalMismatch(f"interval of vertex {i} has l > r")
        derived = {(u, v)
                   for u in range(n) for v in range(u + 1, n)
                   if intervals_overlap(ivs[u], ivs[v])}
        if derived != seen:
            extra = sorted(derived - seen)
            missing = sorted(seen - derived)
            raise IntervalMismatch(
                "interval overlap graph differs from supplied edges; "
                f"overlap-only pairs {extra[:5]}, edge-only pairs {missing[:5]}")

    nms: tuple[str, ...] | None = None
    if names is not None:
        nms = tuple(str(x) for x in names)
        if len(nms) != n:
            raise GraphError(f"expected {n} names, got {len(nms)}")
        if len(set(nms)) != n:
            raise GraphError("vertex names must be distinct")

    return Graph(n=n, edges=tuple(canon), weights=wts, intervals=ivs, names=nms)


def induced_subgraph(G: Graph, vertices: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Induced subgraph on ``vertices``, relabeled to ``0..|S|-1``.

    Returns ``(H, ids)`` where ``ids[i]`` is the original id of the new
    vertex ``i`` (ids preserve ascending order).
    """
    ids = tuple(sorted(set(int(v) for v in vertices)))
    for v in ids:
        if not (0 <= v < G.n):
            raise VertexOutOfRange(f"vertex {v} outside 0..{G.n - 1}")
    new_id = {v: i for i, v in enumerate(ids)}
    sub_edges = [(new_id[u], new_id[v]) for u, v in G.edges
                 if u in new_id and v in new_id]
    sub_w = [G.weights[v] for v in ids]
    sub_iv = None if G.intervals is None else [G.intervals[v] for v in ids]
    sub_names = None if G.names is None else [G.names[v] for v in ids]
    H = build_graph(len(ids), sub_edges, weights=sub_w, intervals=sub_iv,
                    names=sub_names)
    return H, ids


def is_connected(G: Graph) -> bool:
    if G.n <= 1:
        return True
    seen = {0}
    stack = [0]
    while stack:
        v = stack.pop()
        for u in G.adjacency[v]:
            if u not in seen:
                seen.add(u)
                stack.append(u)
    return len(seen) == G.n


# --- JSON interface ---------------------------------------------------------
#
# {"n": int, "edges": [[u, v], ...], "weights": [...],
#  "intervals": [[l, r], ...]?, "names": [...]?}
#
# Weights and interval endpoints must be JSON numbers; Fractions are an
# in-memory convenience only and are rejected here.


def graph_to_dict(G: Graph) -> dict:
    for w in G.weights:
        if isinstance(w, Fraction):
            raise GraphError("cannot serialize Fraction weights to JSON; "
                             "convert to float first")
    d: dict = {
        "n": G.n,
        "edges": [[u, v] for u, v in G.edges],
        "weights": list(G.weights),
    }
    if G.intervals is not None:
        d["intervals"] = [[lo, hi] for lo, hi in G.intervals]
    if G.names is not None:
        d["names"] = list(G.names)
    return d


def _json_int(value, what: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise GraphError(f"{what} must be an integer, got {value!r}")
    return value


def _json_number(value, what: str):
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise GraphError(f"{what} must be a number, got {value!r}")
    return value


def _json_pairs(value, what: str, element) -> list:
    if not isinstance(value, (list, tuple)):
        raise GraphError(f"{what} must be a list of pairs")
    out = []
    for item in value:
        if not isinstance(item, (list, tuple)) or len(item) != 2:
            raise GraphError(f"{what} entries must be pairs, got {item!r}")
        out.append((element(item[0], what), element(item[1], what)))
    return out


def graph_from_dict(d: dict) -> Graph:
    if not isinstance(d, dict) or "n" not in d:
        raise GraphError("malformed graph object: missing 'n'")
    n = _json_int(d["n"], "n")
    edges = _json_pairs(d.get("edges", []), "edges", _json_int)
    weights = d.get("weights")
    if weights is not None:
        if not isinstance(weights, (list, tuple)):
            raise GraphError("weights must be a list of numbers")
        weights = [_json_number(w, "weight") for w in weights]
    intervals = d.get("intervals")
    if intervals is not None:
        intervals = _json_pairs(intervals, "intervals", _json_number)
    names = d.get("names")
    if names is not None:
        if (not isinstance(names, (list, tuple))
                or not all(isinstance(s, str) for s in names)):
            raise GraphError("names must be a list of strings")
    return build_graph(n, edges, weights=weights, intervals=intervals,
                       names=names)


def graph_to_json(G: Graph, **extra) -> str:
    d = graph_to_dict(G)
    d.update(extra)
    return json.dumps(d, indent=2)


def graph_from_json(text: str) -> Graph:
    return graph_from_dict(json.loads(text))
