from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from clusterdel import (
    EdgeListParseError,
    Graph,
    enumerate_open_wedges,
    er_graph,
    pack_edge,
    parse_edge_list,
    serialize_edge_list,
    unpack_edge,
)
from helpers import brute_force_wedges


@given(st.integers(0, 2**31 - 1), st.integers(0, 2**31 - 1))
def test_pack_unpack_roundtrip(u, v):
    if u == v:
        v += 1
    key = pack_edge(u, v)
    assert key == pack_edge(v, u)
    assert unpack_edge(key) == (min(u, v), max(u, v))


def test_parse_collapses_duplicates_and_self_loops():
    g = parse_edge_list("1 2\n2 1\n1 1\n")
    assert g.n == 2
    assert g.m == 1
    assert g.labels == [1, 2]
    assert g.has_edge(0, 1)


def test_parse_self_loop_registers_isolated_node():
    g = parse_edge_list("5 5\n1 2\n")
    assert g.n == 3
    assert g.m == 1
    assert g.label_of(0) == 5
    assert g.degree(0) == 0


def test_parse_comments_and_blank_lines():
    text = "# header\n\n1 2  # trailing\n   \n2 3\n"
    g = parse_edge_list(text)
    assert g.n == 3
    assert g.m == 2


def test_parse_accepts_bytes_and_line_iterables():
    text = "1 2\n2 3\n"
    for source in (text, text.encode(), text.splitlines(), iter(text.splitlines())):
        g = parse_edge_list(source)
        assert (g.n, g.m) == (3, 2)


@pytest.mark.parametrize("text,lineno", [
    ("1 2 3\n", 1),
    ("1 2\n7\n", 2),
    ("1 2\n\na b\n", 3),
    ("1 2.5\n", 1),
])
def test_parse_errors_carry_line_numbers(text, lineno):
    with pytest.raises(EdgeListParseError) as exc:
        parse_edge_list(text)
    assert exc.value.lineno == lineno
    assert f"line {lineno}:" in str(exc.value)


def test_labels_compact_in_first_appearance_order():
    g = parse_edge_list("10 30\n20 10\n")
    assert g.labels == [10, 30, 20]
    assert g.id_map == {10: 0, 30: 1, 20: 2}
    assert g.label_of(2) == 20


def test_from_edges_rejects_out_of_range():
    with pytest.raises(ValueError):
        Graph.from_edges(3, [(0, 3)])
    with pytest.raises(ValueError):
        Graph.from_edges(3, [(-1, 0)])


def test_from_edges_drops_self_loops_and_duplicates():
    g = Graph.from_edges(4, [(0, 1), (1, 0), (2, 2), (1, 2)])
    assert g.m == 2
    assert not g.has_edge(2, 2)


def test_adjacency_accessors():
    g = Graph.from_edges(5, [(0, 1), (0, 3), (0, 2), (2, 3)])
    assert g.neighbors(0).tolist() == [1, 2, 3]
    assert g.degree(0) == 3
    assert g.degree(4) == 0
    assert g.has_edge(3, 0)
    assert not g.has_edge(1, 2)
    assert list(g.edges()) == [(0, 1), (0, 3), (0, 2), (2, 3)]


def test_edge_ids_follow_first_appearance():
    g = Graph.from_edges(4, [(2, 3), (0, 1), (3, 2)])
    assert g.edge_id(2, 3) == 0
    assert g.edge_id(1, 0) == 1
    with pytest.raises(KeyError):
        g.edge_id(0, 2)
    assert g.packed_edges() == [pack_edge(2, 3), pack_edge(0, 1)]


def test_drop_edges_returns_pruned_copy():
    g = parse_edge_list("1 2\n2 3\n3 1\n")
    g2 = g.drop_edges({pack_edge(0, 1)})
    assert g2.m == 2 and g.m == 3
    assert not g2.has_edge(0, 1)
    assert g2.has_edge(1, 2) and g2.has_edge(0, 2)
    assert g2.labels == g.labels


@pytest.mark.parametrize("seed", range(8))
def test_serialize_roundtrip_preserves_ids(seed):
    g = er_graph(12, 0.3, seed=seed)
    g2 = parse_edge_list(serialize_edge_list(g))
    assert g2.n == g.n and g2.m == g.m
    assert [g2.label_of(v) for v in range(g2.n)] == list(range(g.n))
    assert g2.packed_edges() == g.packed_edges()


def test_serialize_roundtrip_keeps_isolated_nodes():
    g = parse_edge_list("7 7\n1 2\n")
    g2 = parse_edge_list(serialize_edge_list(g))
    assert g2.n == 3
    assert g2.labels == g.labels


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 16), st.floats(0.0, 1.0), st.integers(0, 10**6))
def test_wedge_enumeration_matches_brute_force(n, p, seed):
    g = er_graph(n, p, seed=seed)
    seen: list[tuple[int, int, int]] = []
    count = enumerate_open_wedges(g, lambda i, j, k: seen.append((i, j, k)))
    assert count == len(seen)
    assert seen == brute_force_wedges(g)


def test_wedge_enumeration_canonical_form():
    g = Graph.from_edges(3, [(0, 1), (1, 2)])
    triples: list[tuple[int, int, int]] = []
    enumerate_open_wedges(g, lambda i, j, k: triples.append((i, j, k)))
    assert triples == [(0, 2, 1)]


def test_empty_graph_edge_cases():
    g = Graph.from_edges(0, [])
    assert g.n == 0 and g.m == 0
    assert enumerate_open_wedges(g) == 0
    assert serialize_edge_list(g) == ""
    g1 = parse_edge_list("")
    assert g1.n == 0 and g1.m == 0
