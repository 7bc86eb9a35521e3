"""Random chordal graphs and i.i.d. vertex costs.

The sampler draws a random vertex order, wires each vertex to earlier ones
with probability min(1, (d/i)^(2/3)) where i is its 1-based position, forces
one earlier neighbor when the coin flips all miss (keeping the graph
connected), and then completes every earlier-neighborhood into a clique so
the drawn order is a perfect elimination ordering of the output.

RNG: PCG64 (numpy default_rng) seeded through SeedSequence with one spawned
substream per vertex position plus one for the permutation and one for the
costs, so outputs are reproducible across platforms and insensitive to
evaluation order.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graph import Graph, build_graph

GENERATOR_NAME = "pcg64"

COST_DISTS = ("exp_mean1", "uniform_0_2", "ones")


@dataclass(frozen=True)
class GenConfig:
    n: int
    d: float
    seed: object = 0
    cost_dist: str = "ones"
    always_force_parent: bool = False

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"n must be >= 1, got {self.n}")
        if not self.d > 0:
            raise ValueError(f"d must be > 0, got {self.d}")
        if self.cost_dist not in COST_DISTS:
            raise ValueError(
                f"cost_dist must be one of {COST_DISTS}, got {self.cost_dist!r}")


def _draw_costs(rng: np.random.Generator, n: int, dist: str) -> tuple[float, ...]:
    if dist == "exp_mean1":
        vals = rng.exponential(1.0, size=n)
    elif dist == "uniform_0_2":
        vals = rng.uniform(0.0, 2.0, size=n)
    elif dist == "ones":
        vals = np.ones(n)
    else:
        raise ValueError(f"unknown cost distribution {dist!r}")
    return tuple(float(x) for x in vals)


def sample_costs(n: int, dist: str, seed) -> tuple[float, ...]:
    """n i.i.d. costs; every supported distribution has mean 1."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    rng = np.random.default_rng(np.random.SeedSequence(seed))
    return _draw_costs(rng, n, dist)


def sample_chordal(cfg: GenConfig) -> Graph:
    """Random connected chordal graph with costs drawn per cfg.cost_dist.

    Substream layout under SeedSequence(cfg.seed).spawn(n + 1): child 0
    drives the vertex permutation, child i (1 <= i <= n-1) the edge coins of
    the vertex in position i+1, child n the costs.
    """
    n = cfg.n
    root = np.random.SeedSequence(cfg.seed)
    children = root.spawn(n + 1)
    rng_perm = np.random.default_rng(children[0])
    sigma = [int(v) for v in rng_perm.permutation(n)]

    nbrs: list[set[int]] = [set() for _ in range(n)]

    def connect(a: int, b: int) -> None:
        nbrs[a].add(b)
        nbrs[b].add(a)

    for k in range(1, n):  # position i = k + 1, 1-based
        i = k + 1
        v = sigma[k]
        rng = np.random.default_rng(children[k])
        p = min(1.0, (cfg.d / i) ** (2.0 / 3.0))
        coins = rng.random(k) < p
        picked = [sigma[j] for j in range(k) if coins[j]]
        if cfg.always_force_parent or not picked:
            extra = sigma[int(rng.integers(k))]
            if extra not in picked:
                picked.append(extra)
        for u in picked:
            connect(u, v)

    # clique-complete every earlier-neighborhood, walking positions from the
    # back so a processed vertex's earlier-neighborhood never changes again
    pos = {v: k for k, v in enumerate(sigma)}
    for k in range(n - 1, 0, -1):
        v = sigma[k]
        earlier = [u for u in nbrs[v] if pos[u] < k]
        for a in range(len(earlier)):
            for b in range(a + 1, len(earlier)):
                connect(earlier[a], earlier[b])

    weights = _draw_costs(np.random.default_rng(children[n]), n, cfg.cost_dist)
    edges = [(u, v) for u in range(n) for v in nbrs[u] if u < v]
    return build_graph(n, edges, weights=weights)


def sampler_meta(cfg: GenConfig) -> dict:
    """Provenance block for emitted graph files."""
    clamped = any(min(1.0, (cfg.d / i) ** (2.0 / 3.0)) >= 1.0
                  for i in range(2, cfg.n + 1))
    return {
        "generator": GENERATOR_NAME,
        "n": cfg.n,
        "d": cfg.d,
        "seed": cfg.seed if isinstance(cfg.seed, int) else list(cfg.seed),
        "cost_dist": cfg.cost_dist,
        "always_force_parent": cfg.always_force_parent,
        "prob_clamped": clamped,
    }
