"""Integer max-flow and minimum s-t cut on explicit arc lists.

Push-relabel with highest-label selection, the gap heuristic, and periodic
global relabeling.  A second phase drains leftover excess back to the
source, so the final residual state belongs to a feasible maximum flow;
the reported cut side is then the set of nodes reachable from the source
in that residual network, which is the unique inclusion-minimal minimum
cut and therefore independent of tie-breaking inside the solver.

Arcs live in slot pairs: slot 2a is the forward arc, slot 2a ^ 1 its
reverse, and the tail of slot x is heads[x ^ 1].  Capacities are Python
ints, so accounting never overflows.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class CutResult:
    flow_value: int
    source_side: set[int]


class FlowNetwork:
    """Directed network with nonnegative integer capacities.

    Parallel arcs are allowed and behave additively.  After the network
    has been solved it is frozen: add_arc raises.
    """

    def __init__(self, num_nodes: int, source: int, sink: int):
        if num_nodes < 2:
            raise ValueError("network needs at least two nodes")
        if not (0 <= source < num_nodes and 0 <= sink < num_nodes):
            raise ValueError("source/sink out of range")
        if source == sink:
            raise ValueError("source and sink must differ")
        self.num_nodes = num_nodes
        self.source = source
        self.sink = sink
        self._heads: list[int] = []
        self._caps: list[int] = []
        self._result: CutResult | None = None

    @property
    def arc_count(self) -> int:
        return len(self._heads) // 2

    def add_arc(self, tail: int, head: int, capacity: int) -> int:
        """Add arc tail->head; returns its even slot id."""
        if self._result is not None:
            raise RuntimeError("cannot add arcs after the network is solved")
        if capacity < 0:
            raise ValueError(f"negative capacity {capacity}")
        if not (0 <= tail < self.num_nodes and 0 <= head < self.num_nodes):
            raise ValueError(f"arc ({tail}, {head}) out of range")
        slot = len(self._heads)
        self._heads.append(head)
        self._caps.append(capacity)
        self._heads.append(tail)
        self._caps.append(0)
        return slot


def max_flow_min_cut(net: FlowNetwork) -> CutResult:
    """Solve the network; repeated calls return the cached result."""
    if net._result is not None:
        return net._result
    n = net.num_nodes
    s = net.source
    t = net.sink
    heads = net._heads
    orig = net._caps
    caps = list(orig)
    nslots = len(heads)

    # incidence CSR: slots grouped by tail, in insertion order
    start = [0] * (n + 1)
    for x in range(nslots):
        start[heads[x ^ 1] + 1] += 1
    for v in range(n):
        start[v + 1] += start[v]
    adj = [0] * nslots
    fill = start[:-1]
    for x in range(nslots):
        u = heads[x ^ 1]
        adj[fill[u]] = x
        fill[u] += 1

    height = [0] * n
    excess = [0] * n
    cur = start[:-1]
    limit_1 = n           # phase 1: nodes at height >= n are dormant
    limit_2 = 2 * n + 1   # phase 2 bound; sentinel heights sit above it
    buckets: list[list[int]] = [[] for _ in range(limit_2 + 1)]
    occ = [0] * (n + 1)
    by_height: list[set[int]] = [set() for _ in range(n + 1)]

    def bfs_dist(root: int) -> list[int]:
        # distance to root along arcs that have residual capacity INTO the
        # BFS tree: slot y in w's incidence has head(y ^ 1) == w, so
        # caps[y ^ 1] > 0 means heads[y] can still send toward w.
        dist = [-1] * n
        dist[root] = 0
        order = [root]
        qi = 0
        while qi < len(order):
            w = order[qi]
            qi += 1
            dw = dist[w] + 1
            for xi in range(start[w], start[w + 1]):
                y = adj[xi]
                if caps[y ^ 1] > 0:
                    u = heads[y]
                    if dist[u] < 0:
                        dist[u] = dw
                        order.append(u)
        return dist

    def global_relabel(phase: int) -> None:
        # Reassign heights from residual distances; never lowers a height
        # below its valid floor, so the labeling stays valid.
        if phase == 1:
            dist = bfs_dist(t)
            for v in range(n):
                if v == s:
                    continue
                d = dist[v]
                height[v] = d if 0 <= d < limit_1 else max(height[v], limit_1)
            height[s] = n
        else:
            dist = bfs_dist(s)
            for v in range(n):
                if v == s or v == t:
                    continue
                d = dist[v]
                height[v] = n + d if d >= 0 else max(height[v], limit_2 + 1)
            height[s] = n

    def rebuild(phase_limit: int, gap: bool) -> int:
        for b in buckets:
            del b[:]
        hi = -1
        for v in range(n):
            if v != s and v != t and excess[v] > 0 and height[v] < phase_limit:
                h = height[v]
                buckets[h].append(v)
                if h > hi:
                    hi = h
        cur[:] = start[:-1]
        if gap:
            for g_ in by_height:
                g_.clear()
            for i in range(n + 1):
                occ[i] = 0
            for v in range(n):
                if v != s and height[v] < n:
                    occ[height[v]] += 1
                    by_height[height[v]].add(v)
        return hi

    gr_budget = 4 * nslots + 16 * n + 1024
    work = 0

    def run(phase: int) -> None:
        nonlocal work
        phase_limit = limit_1 if phase == 1 else limit_2
        gap = phase == 1
        hi = rebuild(phase_limit, gap)
        while hi >= 0:
            if work > gr_budget:
                work = 0
                global_relabel(phase)
                hi = rebuild(phase_limit, gap)
                continue
            bucket = buckets[hi]
            if not bucket:
                hi -= 1
                continue
            u = bucket.pop()
            if excess[u] <= 0 or height[u] != hi:
                continue
            # discharge u completely (or until it goes dormant)
            hu = hi
            e = excess[u]
            p = cur[u]
            stop = start[u + 1]
            work += 6
            while True:
                if p == stop:
                    # relabel: height strictly increases
                    work += stop - start[u]
                    new_h = limit_2 + 2
                    for xi in range(start[u], stop):
                        y = adj[xi]
                        if caps[y] > 0:
                            hv = height[heads[y]]
                            if hv < new_h:
                                new_h = hv
                    new_h += 1
                    if gap:
                        occ[hu] -= 1
                        by_height[hu].discard(u)
                        if occ[hu] == 0 and hu < n:
                            # gap: heights (hu, n) are unreachable; park them
                            for hh in range(hu + 1, n):
                                for v in by_height[hh]:
                                    height[v] = n
                                occ[hh] = 0
                                by_height[hh].clear()
                            height[u] = new_h if new_h >= n else n
                            new_h = height[u]
                        if new_h < n:
                            occ[new_h] += 1
                            by_height[new_h].add(u)
                    height[u] = new_h
                    hu = new_h
                    p = start[u]
                    if hu >= phase_limit:
                        break
                    continue
                y = adj[p]
                c = caps[y]
                if c > 0:
                    v = heads[y]
                    if hu == height[v] + 1:
                        delta = e if e < c else c
                        caps[y] = c - delta
                        caps[y ^ 1] += delta
                        work += 2
                        if v != s and v != t:
                            if excess[v] == 0:
                                buckets[height[v]].append(v)
                            excess[v] += delta
                        else:
                            excess[v] += delta
                        e -= delta
                        if e == 0:
                            break
                p += 1
            excess[u] = e
            cur[u] = p if p != stop else start[u]
            # relabels during the discharge may have parked push receivers
            # above the current scan level
            top = hu if hu < phase_limit else phase_limit
            if top - 1 > hi:
                hi = top - 1

    # saturate the source's outgoing arcs
    height[s] = n
    for xi in range(start[s], start[s + 1]):
        y = adj[xi]
        c = caps[y]
        if c > 0:
            v = heads[y]
            caps[y] = 0
            caps[y ^ 1] += c
            excess[v] += c
            excess[s] -= c
    global_relabel(1)
    run(1)
    flow_value = excess[t]
    global_relabel(2)
    run(2)

    # the preflow is now a flow; sanity-check conservation and the cut
    assert excess[s] == -flow_value and excess[t] == flow_value
    for v in range(n):
        assert v in (s, t) or excess[v] == 0, f"leftover excess at {v}"
    seen = bytearray(n)
    seen[s] = 1
    order = [s]
    qi = 0
    while qi < len(order):
        w = order[qi]
        qi += 1
        for xi in range(start[w], start[w + 1]):
            y = adj[xi]
            if caps[y] > 0:
                v = heads[y]
                if not seen[v]:
                    seen[v] = 1
                    order.append(v)
    assert not seen[t], "residual path from source to sink after solve"
    cut_cap = 0
    for w in order:
        for xi in range(start[w], start[w + 1]):
            y = adj[xi]
            if not seen[heads[y]]:
                cut_cap += orig[y]
    assert cut_cap == flow_value, f"cut {cut_cap} != flow {flow_value}"
    net._result = CutResult(flow_value, set(order))
    return net._result
