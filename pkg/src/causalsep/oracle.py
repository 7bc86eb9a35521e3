"""Ground-truth causal-learning simulation.

A skeleton's candidate truths are its moral orientations: acyclic
orientations with no induced a->c<-b over nonadjacent a, b.  For a chordal
skeleton these are exactly the orientations along its perfect elimination
orderings (each vertex's parents are its earlier neighbors, which form a
clique, so no immorality can arise).  Intervening on a set I reveals the
true direction of every edge crossing I; the rest must be inferred by
orientation-propagation rules.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations

import numpy as np

from .chordal import maximum_cardinality_search
from .errors import InconsistentEvidence, NotChordal, TooLarge
from .graph import Graph
from .sepsys import Design

Arc = tuple[int, int]

ENUMERATION_LIMIT = 8


@dataclass(frozen=True)
class Dag:
    """Orientation of a skeleton; arcs align with the skeleton's edge list."""

    n: int
    arcs: tuple[Arc, ...]

    def parents(self, v: int) -> tuple[int, ...]:
        return tuple(a for a, b in self.arcs if b == v)

    def direction(self, u: int, v: int) -> Arc:
        """The oriented version of skeleton edge (u, v)."""
        for arc in self.arcs:
            if arc == (u, v) or arc == (v, u):
                return arc
        raise KeyError(f"({u},{v}) is not an edge of this dag")


@dataclass(frozen=True)
class Pdag:
    """Partially oriented skeleton: ``directed`` holds (tail, head) arcs for
    the oriented subset; the remaining edges are undirected."""

    n: int
    edges: tuple[tuple[int, int], ...]
    directed: frozenset[Arc]

    def is_fully_directed(self) -> bool:
        return len(self.directed) == len(self.edges)

    def undirected(self) -> tuple[tuple[int, int], ...]:
        return tuple((u, v) for u, v in self.edges
                     if (u, v) not in self.directed
                     and (v, u) not in self.directed)


def dag_from_order(G: Graph, order: tuple[int, ...] | list[int]) -> Dag:
    pos = {v: i for i, v in enumerate(order)}
    arcs = tuple((u, v) if pos[u] < pos[v] else (v, u) for u, v in G.edges)
    return Dag(n=G.n, arcs=arcs)


def is_moral(G: Graph, dag: Dag) -> bool:
    """No immorality: every two parents of a common child are adjacent."""
    for v in range(G.n):
        ps = dag.parents(v)
        for i in range(len(ps)):
            for j in range(i + 1, len(ps)):
                if not G.has_edge(ps[i], ps[j]):
                    return False
    return True


@lru_cache(maxsize=256)
def _moral_orientations(G: Graph) -> tuple[Dag, ...]:
    if G.n > ENUMERATION_LIMIT:
        raise TooLarge(
            f"orientation enumeration is limited to n <= {ENUMERATION_LIMIT}, "
            f"got n = {G.n}")
    seen: set[tuple[Arc, ...]] = set()
    out: list[Dag] = []
    for perm in permutations(range(G.n)):
        dag = dag_from_order(G, perm)
        if dag.arcs in seen:
            continue
        seen.add(dag.arcs)
        if is_moral(G, dag):
            out.append(dag)
    return tuple(out)


def enumerate_moral_orientations(G: Graph) -> list[Dag]:
    """All acyclic, immorality-free orientations of G (n <= 8 guard).

    Every DAG is the orientation along one of its topological orders, so
    orienting along each vertex permutation and filtering covers everything;
    duplicates are dropped keeping first occurrence, which makes the output
    order deterministic.
    """
    return list(_moral_orientations(G))


def random_moral_orientation(G: Graph, seed) -> Dag:
    """Seeded random moral orientation of a chordal skeleton.

    Small graphs draw uniformly from the full enumeration; larger ones
    orient along a randomized maximum-cardinality-search order (random
    tie-breaking), which is always a perfect elimination ordering and hence
    yields no immoralities.
    """
    maximum_cardinality_search(G)  # chordality gate, raises NotChordal
    rng = np.random.default_rng(np.random.SeedSequence(seed))
    if G.n <= ENUMERATION_LIMIT:
        dags = enumerate_moral_orientations(G)
        return dags[int(rng.integers(len(dags)))]
    label = [0] * G.n
    visited = [False] * G.n
    order: list[int] = []
    for _ in range(G.n):
        best = max(l for l, v in zip(label, visited) if not v)
        ties = [u for u in range(G.n) if not visited[u] and label[u] == best]
        v = ties[int(rng.integers(len(ties)))]
        visited[v] = True
        order.append(v)
        for u in G.adjacency[v]:
            if not visited[u]:
                label[u] += 1
    return dag_from_order(G, order)


def simulate_intervention(dag: Dag, I) -> frozenset[Arc]:
    """True directions of the edges cut by intervention set I: exactly the
    skeleton edges with one endpoint inside I."""
    inside = set(I)
    return frozenset(arc for arc in dag.arcs
                     if (arc[0] in inside) != (arc[1] in inside))


def meek_closure(G: Graph, evidence) -> Pdag:
    """Close an evidence set under the four orientation-propagation rules.

    R1: a->b, b-c, a and c nonadjacent        => b->c
    R2: a->c, c->b, a-b                        => a->b
    R3: a-b, a-c, a-d, c->b, d->b, c,d nonadj  => a->b
    R4: a-b, a-d, d->c, c->b, b,d nonadjacent,
        a and c adjacent                       => a->b

    The fixpoint does not depend on rule application order.
    """
    directed: set[Arc] = set()
    for a, b in evidence:
        if not G.has_edge(a, b):
            raise InconsistentEvidence(f"({a},{b}) is not a skeleton edge")
        if (b, a) in directed:
            raise InconsistentEvidence(f"edge ({a},{b}) oriented both ways")
        directed.add((a, b))

    def orient(a: int, b: int) -> bool:
        if (a, b) in directed:
            return False
        if (b, a) in directed:
            raise InconsistentEvidence(
                f"rules force edge ({a},{b}) both ways")
        directed.add((a, b))
        return True

    def undirected(a: int, b: int) -> bool:
        return (G.has_edge(a, b) and (a, b) not in directed
                and (b, a) not in directed)

    changed = True
    while changed:
        changed = False
        for b in range(G.n):
            for c in G.adjacency[b]:
                if not undirected(b, c):
                    continue
                # R1
                if any((a, b) in directed and not G.has_edge(a, c) and a != c
                       for a in G.adjacency[b]):
                    changed |= orient(b, c)
                    continue
                # R2 with (a, b) := (b, c): b->x->c and b-c
                if any((b, x) in directed and (x, c) in directed
                       for x in G.adjacency[b]):
                    changed |= orient(b, c)
                    continue
                # R3 with (a, b) := (b, c): b-d1, b-d2, d1->c, d2->c
                ins = [d for d in G.adjacency[b]
                       if undirected(b, d) and (d, c) in directed]
                if any(not G.has_edge(d1, d2)
                       for i, d1 in enumerate(ins) for d2 in ins[i + 1:]):
                    changed |= orient(b, c)
                    continue
                # R4 with (a, b) := (b, c): b-d, d->x, x->c, c,d nonadjacent,
                # b,x adjacent
                fired = False
                for d in G.adjacency[b]:
                    if fired or not undirected(b, d) or G.has_edge(c, d) or c == d:
                        continue
                    for x in G.adjacency[d]:
                        if ((d, x) in directed and (x, c) in directed
                                and G.has_edge(b, x)):
                            changed |= orient(b, c)
                            fired = True
                            break

    _reject_unextendable(G, directed)
    return Pdag(n=G.n, edges=G.edges, directed=frozenset(directed))


def _reject_unextendable(G: Graph, directed: set[Arc]) -> None:
    """Evidence whose directed part is cyclic or forms an immorality admits
    no moral orientation at all; the rules alone cannot always notice."""
    parents: list[list[int]] = [[] for _ in range(G.n)]
    for a, b in directed:
        parents[b].append(a)
    for b in range(G.n):
        ps = parents[b]
        for i, a in enumerate(ps):
            for c in ps[i + 1:]:
                if not G.has_edge(a, c):
                    raise InconsistentEvidence(
                        f"evidence makes {a}->{b}<-{c} an immorality")
    indeg = {v: len(parents[v]) for v in range(G.n)}
    ready = [v for v in range(G.n) if indeg[v] == 0]
    seen = 0
    while ready:
        v = ready.pop()
        seen += 1
        for a, b in directed:
            if a == v:
                indeg[b] -= 1
                if indeg[b] == 0:
                    ready.append(b)
    if seen != G.n:
        raise InconsistentEvidence("evidence directs a cycle")


@dataclass(frozen=True)
class LearnReport:
    learns_all: bool
    counterexample: tuple[Dag, tuple[int, int]] | None


def design_learns_all(G: Graph, design: Design) -> LearnReport:
    """Whether the design identifies every moral orientation of G.

    For each candidate truth: pool the cut evidence from all interventions,
    close under the rules, and demand every edge oriented.  Returns the
    first failing (dag, still-undirected edge) otherwise.
    """
    dags = _moral_orientations(G)
    for dag in dags:
        evidence: set[Arc] = set()
        for I in design.interventions:
            evidence |= simulate_intervention(dag, I)
        pdag = meek_closure(G, evidence)
        if not pdag.is_fully_directed():
            return LearnReport(False, (dag, pdag.undirected()[0]))
    return LearnReport(True, None)
