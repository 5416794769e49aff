from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from clusterdel import FlowNetwork, max_flow_min_cut
from helpers import edmonds_karp


def build(num_nodes, source, sink, arcs):
    net = FlowNetwork(num_nodes, source, sink)
    for u, v, c in arcs:
        net.add_arc(u, v, c)
    return net


def test_single_arc():
    res = max_flow_min_cut(build(2, 0, 1, [(0, 1, 5)]))
    assert res.flow_value == 5
    assert res.source_side == {0}


def test_no_arcs():
    res = max_flow_min_cut(build(2, 0, 1, []))
    assert res.flow_value == 0
    assert res.source_side == {0}


def test_parallel_arcs_add_up():
    res = max_flow_min_cut(build(2, 0, 1, [(0, 1, 3), (0, 1, 4)]))
    assert res.flow_value == 7


def test_zero_capacity_arcs_are_inert():
    res = max_flow_min_cut(build(3, 0, 2, [(0, 1, 0), (1, 2, 4)]))
    assert res.flow_value == 0
    assert res.source_side == {0}


def test_bottleneck_path():
    arcs = [(0, 1, 9), (1, 2, 2), (2, 3, 9)]
    res = max_flow_min_cut(build(4, 0, 3, arcs))
    assert res.flow_value == 2
    assert res.source_side == {0, 1}


def test_diamond():
    # both source arcs saturate; 1->2 reroutes the unit that 1->3 cannot take
    arcs = [(0, 1, 3), (0, 2, 2), (1, 3, 2), (2, 3, 3), (1, 2, 1)]
    res = max_flow_min_cut(build(4, 0, 3, arcs))
    assert res.flow_value == 5


def test_clrs_example():
    # the textbook 6-node instance; max flow 23
    arcs = [(0, 1, 16), (0, 2, 13), (1, 3, 12), (2, 1, 4), (2, 4, 14),
            (3, 2, 9), (3, 5, 20), (4, 3, 7), (4, 5, 4)]
    res = max_flow_min_cut(build(6, 0, 5, arcs))
    assert res.flow_value == 23


def test_source_side_is_minimal():
    # two cuts of equal weight; the residual side keeps only the source
    arcs = [(0, 1, 1), (1, 2, 1)]
    res = max_flow_min_cut(build(3, 0, 2, arcs))
    assert res.flow_value == 1
    assert res.source_side == {0}


def test_result_is_cached():
    net = build(2, 0, 1, [(0, 1, 2)])
    assert max_flow_min_cut(net) is max_flow_min_cut(net)


def test_add_arc_after_solve_is_rejected():
    net = build(2, 0, 1, [(0, 1, 2)])
    max_flow_min_cut(net)
    with pytest.raises(RuntimeError):
        net.add_arc(0, 1, 1)


def test_constructor_validation():
    with pytest.raises(ValueError):
        FlowNetwork(1, 0, 0)
    with pytest.raises(ValueError):
        FlowNetwork(3, 2, 2)
    with pytest.raises(ValueError):
        FlowNetwork(3, 0, 3)


def test_add_arc_validation():
    net = FlowNetwork(3, 0, 2)
    with pytest.raises(ValueError):
        net.add_arc(0, 1, -1)
    with pytest.raises(ValueError):
        net.add_arc(0, 3, 1)
    assert net.arc_count == 0
    net.add_arc(0, 1, 1)
    assert net.arc_count == 1


def random_network(trial: int, max_nodes: int = 12, max_arcs: int = 40,
                   max_cap: int = 12):
    rng = random.Random(trial)
    n = rng.randrange(2, max_nodes + 1)
    arcs = []
    for _ in range(rng.randrange(0, max_arcs)):
        u = rng.randrange(n)
        v = rng.randrange(n)
        if u != v:
            arcs.append((u, v, rng.randrange(0, max_cap)))
    return n, 0, n - 1, arcs


@pytest.mark.parametrize("trial", range(60))
def test_matches_edmonds_karp(trial):
    n, s, t, arcs = random_network(trial)
    res = max_flow_min_cut(build(n, s, t, arcs))
    value, side = edmonds_karp(n, s, t, arcs)
    assert res.flow_value == value
    assert res.source_side == side


@settings(max_examples=60, deadline=None)
@given(st.integers(1000, 10**6))
def test_matches_edmonds_karp_hypothesis(trial):
    n, s, t, arcs = random_network(trial)
    res = max_flow_min_cut(build(n, s, t, arcs))
    value, side = edmonds_karp(n, s, t, arcs)
    assert res.flow_value == value
    assert res.source_side == side


@pytest.mark.parametrize("trial", range(6))
def test_matches_edmonds_karp_wider(trial):
    rng = random.Random(900 + trial)
    n = 50
    arcs = []
    for _ in range(400):
        u = rng.randrange(n)
        v = rng.randrange(n)
        if u != v:
            arcs.append((u, v, rng.randrange(0, 20)))
    res = max_flow_min_cut(build(n, 0, n - 1, arcs))
    value, side = edmonds_karp(n, 0, n - 1, arcs)
    assert res.flow_value == value
    assert res.source_side == side


def test_bipartite_matching_instance():
    # 3x3 bipartite unit network: perfect matching exists
    arcs = [(6, 0, 1), (6, 1, 1), (6, 2, 1), (3, 7, 1), (4, 7, 1), (5, 7, 1),
            (0, 3, 1), (0, 4, 1), (1, 4, 1), (1, 5, 1), (2, 5, 1), (2, 3, 1)]
    res = max_flow_min_cut(build(8, 6, 7, arcs))
    assert res.flow_value == 3
