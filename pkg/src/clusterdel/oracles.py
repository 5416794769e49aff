"""Exact reference solvers, exponential-time, for testing on small inputs.

Each solver is written against the problem definition directly and
independently of the approximation pipeline, so agreement between the two
is meaningful evidence.  Guards reject inputs past the practical size.
"""

from __future__ import annotations

from .graph import Graph, enumerate_open_wedges


def exact_cluster_deletion(g: Graph, max_n: int = 14
                           ) -> tuple[int, list[list[int]]]:
    """Minimum deletions turning g into disjoint cliques, plus a witness.

    Dynamic program over node subsets: the lowest node of a subset joins
    some clique inside it, so maximize kept edges over those cliques.
    """
    n = g.n
    if n > max_n:
        raise ValueError(f"exact cluster deletion limited to n <= {max_n}")
    adj = [0] * n
    for u, v in g.edges():
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    memo: dict[int, int] = {0: 0}
    choice: dict[int, int] = {}

    def best(mask: int) -> int:
        val = memo.get(mask)
        if val is not None:
            return val
        v = (mask & -mask).bit_length() - 1
        best_val = -1
        best_clique = 0

        def extend(clique: int, size: int, cand: int) -> None:
            nonlocal best_val, best_clique
            val = size * (size - 1) // 2 + best(mask & ~clique)
            if val > best_val:
                best_val = val
                best_clique = clique
            c = cand
            while c:
                low = c & -c
                u = low.bit_length() - 1
                c ^= low
                extend(clique | low, size + 1, c & adj[u])

        extend(1 << v, 1, adj[v] & mask)
        memo[mask] = best_val
        choice[mask] = best_clique
        return best_val

    full = (1 << n) - 1
    kept = best(full)
    clusters = []
    mask = full
    while mask:
        clique = choice[mask]
        clusters.append([v for v in range(n) if clique >> v & 1])
        mask &= ~clique
    return g.m - kept, clusters


def exact_min_stc(g: Graph, max_m: int = 24) -> int:
    """Minimum weak edges so every open wedge has a weak leg.

    Branch and bound on the wedge constraints: take the first uncovered
    wedge and branch on which leg goes weak.
    """
    if g.m > max_m:
        raise ValueError(f"exact STC limited to m <= {max_m}")
    constraints: list[tuple[int, int]] = []
    enumerate_open_wedges(
        g, lambda i, j, k: constraints.append((g.edge_id(i, k),
                                               g.edge_id(j, k))))
    weak = bytearray(g.m)
    best = [g.m]

    def bb(idx: int, count: int) -> None:
        if count >= best[0]:
            return
        while idx < len(constraints):
            e, f = constraints[idx]
            if not (weak[e] or weak[f]):
                break
            idx += 1
        else:
            best[0] = count
            return
        for pick in (e, f):
            weak[pick] = 1
            bb(idx + 1, count + 1)
            weak[pick] = 0

    bb(0, 0)
    return best[0]


def min_vertex_cover(h: Graph, max_n: int = 24) -> int:
    """Minimum vertex cover by branch and bound on uncovered edges."""
    if h.n > max_n:
        raise ValueError(f"exact vertex cover limited to n <= {max_n}")
    edges = list(h.edges())
    picked = bytearray(h.n)
    best = [h.n]

    def bb(idx: int, count: int) -> None:
        if count >= best[0]:
            return
        while idx < len(edges):
            u, v = edges[idx]
            if not (picked[u] or picked[v]):
                break
            idx += 1
        else:
            best[0] = count
            return
        for pick in (u, v):
            picked[pick] = 1
            bb(idx + 1, count + 1)
            picked[pick] = 0

    bb(0, 0)
    return best[0]


def gallai_graph(g: Graph) -> Graph:
    """Line-graph restriction whose nodes are g's edges and whose edges
    join the two legs of each open wedge; vertex covers of it are exactly
    valid weak-edge sets of g."""
    pairs: list[tuple[int, int]] = []
    enumerate_open_wedges(
        g, lambda i, j, k: pairs.append((g.edge_id(i, k),
                                         g.edge_id(j, k))))
    return Graph.from_edges(g.m, pairs)


def exact_stc_lp(g: Graph, max_m: int = 12) -> int:
    """Optimal value of the STC relaxation in half-units, by backtracking
    over per-edge values in {0, 1, 2} with branch-and-bound pruning."""
    if g.m > max_m:
        raise ValueError(f"exact relaxation limited to m <= {max_m}")
    by_later: list[list[int]] = [[] for _ in range(g.m)]
    involved: set[int] = set()

    def sink_wedge(i: int, j: int, k: int) -> None:
        a = g.edge_id(i, k)
        b = g.edge_id(j, k)
        by_later[max(a, b)].append(min(a, b))
        involved.add(a)
        involved.add(b)

    enumerate_open_wedges(g, sink_wedge)
    order = sorted(involved)
    vals = [0] * g.m
    best = [len(order)]  # all-halves is feasible

    def bt(pos: int, total: int) -> None:
        if total >= best[0]:
            return
        if pos == len(order):
            best[0] = total
            return
        e = order[pos]
        partners = by_later[e]
        for v in (0, 1, 2):
            if total + v >= best[0]:
                break
            if all(vals[f] + v >= 2 for f in partners):
                vals[e] = v
                bt(pos + 1, total + v)
        vals[e] = 0

    bt(0, 0)
    return best[0]
