import json
import math
from fractions import Fraction

import pytest

from causalsep import (
    DuplicateEdge,
    GraphError,
    IntervalMismatch,
    InvalidWeight,
    NegativeWeight,
    SelfLoop,
    VertexOutOfRange,
    WeightLengthMismatch,
    build_graph,
    graph_from_dict,
    graph_from_json,
    graph_to_dict,
    graph_to_json,
    induced_subgraph,
    is_connected,
)
from causalsep.graph import exact_sum


def test_edges_canonicalized_and_sorted():
    G = build_graph(4, [(2, 1), (3, 0), (0, 1)])
    assert G.edges == ((0, 1), (0, 3), (1, 2))
    assert G.adjacency[1] == frozenset({0, 2})
    assert G.has_edge(1, 2) and G.has_edge(2, 1)
    assert not G.has_edge(0, 2)
    assert G.degree(0) == 2 and G.degree(2) == 1


def test_default_weights_are_unit():
    G = build_graph(3, [(0, 1)])
    assert G.weights == (1, 1, 1)
    assert G.total_weight() == 3


def test_with_weights_replaces_only_weights():
    G = build_graph(3, [(0, 1), (1, 2)])
    H = G.with_weights([5, 1, 2])
    assert H.weights == (5, 1, 2)
    assert H.edges == G.edges


def test_self_loop_rejected():
    with pytest.raises(SelfLoop):
        build_graph(3, [(1, 1)])


def test_vertex_out_of_range_rejected():
    with pytest.raises(VertexOutOfRange):
        build_graph(3, [(0, 3)])
    with pytest.raises(VertexOutOfRange):
        build_graph(2, [(-1, 0)])


def test_duplicate_edge_rejected_both_orders():
    with pytest.raises(DuplicateEdge):
        build_graph(3, [(0, 1), (0, 1)])
    with pytest.raises(DuplicateEdge):
        build_graph(3, [(0, 1), (1, 0)])


def test_weight_validation():
    with pytest.raises(WeightLengthMismatch):
        build_graph(3, [(0, 1)], weights=[1, 2])
    with pytest.raises(NegativeWeight):
        build_graph(2, [(0, 1)], weights=[1, -3])
    with pytest.raises(InvalidWeight):
        build_graph(2, [(0, 1)], weights=[1.0, float("nan")])
    with pytest.raises(InvalidWeight):
        build_graph(2, [(0, 1)], weights=[float("inf"), 1.0])


def test_zero_weight_allowed():
    G = build_graph(2, [(0, 1)], weights=[0, 4])
    assert G.weights == (0, 4)


def test_intervals_must_match_edges():
    # [0,2],[1,3] overlap; [5,6] is disjoint from both
    G = build_graph(3, [(0, 1)], intervals=[(0, 2), (1, 3), (5, 6)])
    assert G.intervals == ((0, 2), (1, 3), (5, 6))
    with pytest.raises(IntervalMismatch):
        build_graph(3, [(0, 1), (0, 2)], intervals=[(0, 2), (1, 3), (5, 6)])
    with pytest.raises(IntervalMismatch):
        build_graph(2, [], intervals=[(0, 2), (1, 3)])


def test_touching_intervals_count_as_overlap():
    build_graph(2, [(0, 1)], intervals=[(0, 1), (1, 2)])
    with pytest.raises(IntervalMismatch):
        build_graph(2, [], intervals=[(0, 1), (1, 2)])


def test_interval_bounds_validated():
    with pytest.raises(GraphError):
        build_graph(1, [], intervals=[(2, 1)])


def test_names_validated():
    G = build_graph(2, [(0, 1)], names=["a", "b"])
    assert G.names == ("a", "b")
    with pytest.raises(GraphError):
        build_graph(2, [], names=["a"])
    with pytest.raises(GraphError):
        build_graph(2, [], names=["a", "a"])


def test_induced_subgraph_relabels():
    G = build_graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (1, 3)],
                    weights=[10, 20, 30, 40, 50])
    H, ids = induced_subgraph(G, [3, 1, 4])
    assert ids == (1, 3, 4)
    assert H.n == 3
    assert H.edges == ((0, 1), (1, 2))
    assert H.weights == (20, 40, 50)


def test_is_connected():
    assert is_connected(build_graph(1, []))
    assert is_connected(build_graph(3, [(0, 1), (1, 2)]))
    assert not is_connected(build_graph(3, [(0, 1)]))
    assert not is_connected(build_graph(2, []))


def test_exact_sum_int_stays_int():
    s = exact_sum([1, 2, 3])
    assert s == 6 and isinstance(s, int)


def test_exact_sum_fraction_exact():
    vals = [Fraction(1, 3)] * 3
    assert exact_sum(vals) == 1


def test_exact_sum_float_is_order_free():
    vals = [1e16, 1.0, -1e16, 1.0]
    assert exact_sum(vals) == 2.0
    assert exact_sum(reversed(vals)) == 2.0
    assert exact_sum(vals) == math.fsum(vals)


def test_json_round_trip_plain():
    G = build_graph(4, [(0, 1), (2, 3)], weights=[1.5, 2.0, 3.0, 4.0])
    H = graph_from_json(graph_to_json(G))
    assert H == G


def test_json_round_trip_full():
    G = build_graph(3, [(0, 1), (1, 2)], weights=[1, 2, 3],
                    intervals=[(0, 2), (1, 3), (3, 5)], names=["x", "y", "z"])
    H = graph_from_json(graph_to_json(G))
    assert H == G


def test_json_extra_metadata_preserved_in_text():
    G = build_graph(2, [(0, 1)])
    text = graph_to_json(G, meta={"origin": "test"})
    payload = json.loads(text)
    assert payload["meta"] == {"origin": "test"}
    assert graph_from_json(text) == G


def test_json_rejects_fraction_weights():
    G = build_graph(2, [(0, 1)], weights=[Fraction(1, 3), 1])
    with pytest.raises(GraphError):
        graph_to_json(G)


def test_dict_round_trip_and_validation():
    G = build_graph(2, [(0, 1)])
    d = graph_to_dict(G)
    assert graph_from_dict(d) == G
    bad = dict(d)
    bad["n"] = "two"
    with pytest.raises(GraphError):
        graph_from_dict(bad)
    with pytest.raises(GraphError):
        graph_from_dict({"edges": []})


def test_json_rejects_malformed_payloads():
    with pytest.raises(GraphError):
        graph_from_json('{"n": 2, "edges": [[0, 1, 2]]}')
    with pytest.raises(GraphError):
        graph_from_json('{"n": 2, "edges": "nope"}')
