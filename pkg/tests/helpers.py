"""Independent reference implementations used to cross-check the package.

Everything here is written for clarity, not speed: dense-matrix
Edmonds-Karp, cubic wedge enumeration, Bell-number partition search.
None of it shares code with src/.
"""
from __future__ import annotations

import random
from collections import deque

from clusterdel import Graph, er_graph


def edmonds_karp(num_nodes: int, source: int, sink: int,
                 arcs: list[tuple[int, int, int]]) -> tuple[int, set[int]]:
    """Max flow plus the residual-reachable source side, BFS augmenting."""
    cap = [[0] * num_nodes for _ in range(num_nodes)]
    for u, v, c in arcs:
        cap[u][v] += c
    flow = 0
    while True:
        parent = [-1] * num_nodes
        parent[source] = source
        queue = deque([source])
        while queue:
            u = queue.popleft()
            for v in range(num_nodes):
                if parent[v] < 0 and cap[u][v] > 0:
                    parent[v] = u
                    queue.append(v)
        if parent[sink] < 0:
            break
        path = []
        v = sink
        while v != source:
            path.append((parent[v], v))
            v = parent[v]
        push = min(cap[u][v] for u, v in path)
        for u, v in path:
            cap[u][v] -= push
            cap[v][u] += push
        flow += push
    side = {source}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for v in range(num_nodes):
            if v not in side and cap[u][v] > 0:
                side.add(v)
                queue.append(v)
    return flow, side


def brute_force_wedges(g: Graph) -> list[tuple[int, int, int]]:
    """All open wedges (i, j, k), i < j, center k, by cubic scan."""
    out = []
    for k in range(g.n):
        nbrs = sorted(g.neighbors(k).tolist())
        for a in range(len(nbrs)):
            for b in range(a + 1, len(nbrs)):
                if not g.has_edge(nbrs[a], nbrs[b]):
                    out.append((nbrs[a], nbrs[b], k))
    return out


def triangle_count(g: Graph) -> int:
    total = 0
    for u, v in g.edges():
        nu = set(g.neighbors(u).tolist())
        for w in g.neighbors(v).tolist():
            if w in nu:
                total += 1
    return total // 3


def brute_force_cluster_deletion(g: Graph) -> int:
    """Minimum deletions over every partition of V into cliques.

    Enumerates set partitions recursively, so keep n <= 8 or so.
    """
    best = [g.m]

    def recurse(v: int, blocks: list[list[int]], kept: int) -> None:
        if v == g.n:
            best[0] = min(best[0], g.m - kept)
            return
        for block in blocks:
            if all(g.has_edge(v, u) for u in block):
                block.append(v)
                recurse(v + 1, blocks, kept + len(block) - 1)
                block.pop()
        blocks.append([v])
        recurse(v + 1, blocks, kept)
        blocks.pop()

    recurse(0, [], 0)
    return best[0]


def clusters_are_cliques(g: Graph, clusters: list[list[int]]) -> bool:
    for members in clusters:
        for a in range(len(members)):
            for b in range(a + 1, len(members)):
                if not g.has_edge(members[a], members[b]):
                    return False
    return True


def cut_deletions(g: Graph, assignment: list[int]) -> int:
    return sum(1 for u, v in g.edges() if assignment[u] != assignment[v])


def small_graph(trial: int, n_lo: int = 3, n_hi: int = 10,
                ps: tuple[float, ...] = (0.2, 0.4, 0.6, 0.8)) -> Graph:
    """Deterministic small test graph number ``trial``."""
    rng = random.Random(trial)
    n = rng.randrange(n_lo, n_hi + 1)
    return er_graph(n, rng.choice(ps), seed=trial)


def disjoint_paths(k: int) -> Graph:
    """k disjoint copies of P3: the canonical unique-wedge-set family."""
    edges = []
    for i in range(k):
        base = 3 * i
        edges.append((base, base + 1))
        edges.append((base + 1, base + 2))
    return Graph.from_edges(3 * k, edges)
