import random
from fractions import Fraction
from itertools import combinations

import pytest

from bruteforce import (
    all_graphs,
    brute_chromatic,
    brute_is_chordal,
    brute_max_weight_k_colorable,
    brute_mwis_weight,
)
from causalsep import (
    InvalidK,
    InvalidPeo,
    NoIntervals,
    NotChordal,
    Peo,
    build_graph,
    chromatic_number_chordal,
    find_peo_violation,
    greedy_color_chordal,
    is_chordal,
    is_peo,
    is_proper,
    max_weight_independent_set_frank,
    max_weight_k_colorable_interval,
    maximum_cardinality_search,
    set_weight,
)
from causalsep.randgen import GenConfig, sample_chordal


def pairwise_peo_violation(G, order):
    """Quadratic reference check: every pair of earlier neighbors must be
    adjacent."""
    pos = {v: i for i, v in enumerate(order)}
    for v in order:
        earlier = sorted((u for u in G.adjacency[v] if pos[u] < pos[v]),
                         key=pos.get)
        for a, b in combinations(earlier, 2):
            if not G.has_edge(a, b):
                return v, a, b
    return None


def test_peo_check_matches_pairwise_reference():
    rng = random.Random(5)
    for _ in range(300):
        n = rng.randint(1, 8)
        pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
        edges = [p for p in pairs if rng.random() < 0.45]
        G = build_graph(n, edges)
        order = list(range(n))
        rng.shuffle(order)
        got = find_peo_violation(G, order)
        want = pairwise_peo_violation(G, order)
        assert (got is None) == (want is None)
        if got is not None:
            v, u, w = got
            pos = {x: i for i, x in enumerate(order)}
            assert u in G.adjacency[v] and w in G.adjacency[v]
            assert pos[u] < pos[v] and pos[w] < pos[v]
            assert not G.has_edge(u, w)


def test_is_peo_knowns():
    P3 = build_graph(3, [(0, 1), (1, 2)])
    # vertex 1 last would need its two nonadjacent neighbors to be a clique
    assert not is_peo(P3, [0, 2, 1])
    assert is_peo(P3, [0, 1, 2])
    assert is_peo(P3, [1, 0, 2])
    K3 = build_graph(3, [(0, 1), (1, 2), (0, 2)])
    assert is_peo(K3, [2, 1, 0])
    C4 = build_graph(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
    assert not any(is_peo(C4, list(p))
                   for p in __import__("itertools").permutations(range(4)))


def test_is_peo_requires_permutation():
    G = build_graph(3, [(0, 1)])
    with pytest.raises(InvalidPeo):
        is_peo(G, [0, 1])
    with pytest.raises(InvalidPeo):
        is_peo(G, [0, 1, 1])


def test_mcs_emits_valid_peo_on_chordal_families():
    graphs = [
        build_graph(1, []),
        build_graph(5, [(0, 1), (1, 2), (2, 3), (3, 4)]),
        build_graph(5, [(0, 1), (0, 2), (0, 3), (0, 4)]),
        build_graph(4, [(u, v) for u in range(4) for v in range(u + 1, 4)]),
        build_graph(6, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4), (4, 5)]),
    ]
    for G in graphs:
        peo = maximum_cardinality_search(G)
        assert find_peo_violation(G, peo.order) is None


def test_mcs_deterministic_lowest_id_ties():
    G = build_graph(4, [])
    assert maximum_cardinality_search(G).order == (0, 1, 2, 3)


def test_not_chordal_carries_chordless_cycle_witness():
    for G in (build_graph(4, [(0, 1), (1, 2), (2, 3), (0, 3)]),
              build_graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]),
              build_graph(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (0, 5),
                              (1, 4)])):
        with pytest.raises(NotChordal) as exc:
            maximum_cardinality_search(G)
        cyc = exc.value.cycle
        assert cyc is not None and len(cyc) >= 4
        k = len(cyc)
        for i in range(k):
            assert G.has_edge(cyc[i], cyc[(i + 1) % k])
        for i, j in combinations(range(k), 2):
            if (j - i) % k not in (1, k - 1):
                assert not G.has_edge(cyc[i], cyc[j])


def test_is_chordal_matches_definition_exhaustively():
    for n in range(1, 6):
        for edges in all_graphs(n):
            G = build_graph(n, list(edges))
            assert is_chordal(G) == brute_is_chordal(G), edges


def test_chromatic_number_matches_brute_force():
    rng = random.Random(11)
    for _ in range(60):
        n = rng.randint(2, 9)
        G = sample_chordal(GenConfig(n=n, d=rng.choice([1, 2, 3]),
                                     seed=rng.randrange(10**6)))
        peo = maximum_cardinality_search(G)
        assert chromatic_number_chordal(G, peo) == brute_chromatic(G)


def test_greedy_coloring_is_proper_and_optimal():
    rng = random.Random(13)
    for _ in range(60):
        n = rng.randint(1, 10)
        G = sample_chordal(GenConfig(n=n, d=rng.choice([1, 2, 3]),
                                     seed=rng.randrange(10**6)))
        peo = maximum_cardinality_search(G)
        col = greedy_color_chordal(G, peo)
        assert is_proper(G, col.class_of)
        assert col.num_classes == chromatic_number_chordal(G, peo)
        assert sorted(set(col.class_of)) == list(range(col.num_classes))


def test_coloring_rejects_invalid_peo():
    G = build_graph(3, [(0, 1), (1, 2), (0, 2)])
    with pytest.raises(InvalidPeo):
        greedy_color_chordal(G, Peo(order=(0, 1)))
    C4 = build_graph(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
    with pytest.raises(InvalidPeo):
        chromatic_number_chordal(C4, Peo(order=(0, 1, 2, 3)))


def test_frank_mwis_hand_cases():
    path = build_graph(3, [(0, 1), (1, 2)], weights=[1, 3, 1])
    peo = maximum_cardinality_search(path)
    assert max_weight_independent_set_frank(path, peo) == (1,)

    tri = build_graph(3, [(0, 1), (1, 2), (0, 2)], weights=[3, 2, 1])
    assert max_weight_independent_set_frank(
        tri, maximum_cardinality_search(tri)) == (0,)

    star = build_graph(4, [(0, 1), (0, 2), (0, 3)], weights=[5, 2, 2, 2])
    got = max_weight_independent_set_frank(star, maximum_cardinality_search(star))
    assert sorted(got) == [1, 2, 3]


def test_frank_mwis_matches_brute_force_exact_types():
    rng = random.Random(17)
    for trial in range(120):
        n = rng.randint(1, 12)
        G = sample_chordal(GenConfig(n=n, d=rng.choice([1, 2, 3, 4]),
                                     seed=(17, trial)))
        if trial % 2:
            w = [rng.randint(0, 50) for _ in range(n)]
        else:
            w = [Fraction(rng.randint(0, 99), rng.randint(1, 9))
                 for _ in range(n)]
        G = G.with_weights(w)
        peo = maximum_cardinality_search(G)
        S = max_weight_independent_set_frank(G, peo)
        for a, b in combinations(sorted(S), 2):
            assert not G.has_edge(a, b)
        assert set_weight(G, S) == brute_mwis_weight(G)


def test_frank_mwis_zero_weights_give_empty_or_zero_value():
    G = build_graph(3, [(0, 1), (1, 2)], weights=[0, 0, 0])
    S = max_weight_independent_set_frank(G, maximum_cardinality_search(G))
    assert set_weight(G, S) == 0


def interval_graph(intervals, weights):
    n = len(intervals)
    edges = [(i, j) for i in range(n) for j in range(i + 1, n)
             if max(intervals[i][0], intervals[j][0])
             <= min(intervals[i][1], intervals[j][1])]
    return build_graph(n, edges, weights=weights, intervals=intervals)


def test_interval_k_colorable_hand_case():
    # three mutually overlapping intervals plus one off to the side
    G = interval_graph([(0, 4), (1, 5), (2, 6), (7, 8)], [3, 5, 4, 1])
    verts, classes = max_weight_k_colorable_interval(G, 1)
    assert set_weight(G, verts) == 6  # {1, 3}
    verts2, _ = max_weight_k_colorable_interval(G, 2)
    assert set_weight(G, verts2) == 10
    verts3, _ = max_weight_k_colorable_interval(G, 3)
    assert set_weight(G, verts3) == 13
    assert sorted(verts3) == [0, 1, 2, 3]


def test_interval_k_colorable_matches_brute_force():
    rng = random.Random(23)
    for trial in range(40):
        n = rng.randint(1, 9)
        ivs = []
        for _ in range(n):
            a = rng.randint(0, 12)
            ivs.append((a, a + rng.randint(0, 6)))
        if trial % 2:
            w = [rng.randint(0, 20) for _ in range(n)]
        else:
            w = [Fraction(rng.randint(0, 30), rng.randint(1, 5))
                 for _ in range(n)]
        G = interval_graph(ivs, w)
        for k in (1, 2, 3):
            verts, classes = max_weight_k_colorable_interval(G, k)
            assert len(classes) <= k
            seen = set()
            for cls in classes:
                for i, j in combinations(sorted(cls), 2):
                    assert not G.has_edge(i, j)
                seen.update(cls)
            assert seen == set(verts)
            assert set_weight(G, verts) == brute_max_weight_k_colorable(G, k)


def test_interval_k_colorable_argument_errors():
    G = interval_graph([(0, 1), (2, 3)], [1, 1])
    with pytest.raises(InvalidK):
        max_weight_k_colorable_interval(G, 0)
    bare = build_graph(2, [(0, 1)])
    with pytest.raises(NoIntervals):
        max_weight_k_colorable_interval(bare, 1)
