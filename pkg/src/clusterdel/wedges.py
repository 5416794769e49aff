"""Maximal edge-disjoint sets of open wedges.

Two matchers produce a maximal set W of open wedges no two of which share
an edge: a simple greedy over the full wedge enumeration, and a faster
skip-list sweep that touches each neighbor pair at most once per center.
The two edges of every matched wedge form the weak set E_W; maximality
means every open wedge of the graph loses at least one edge to E_W.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, NamedTuple

from .graph import Graph, enumerate_open_wedges, pack_edge, unpack_edge


class OpenWedge(NamedTuple):
    """Open wedge (i, j, k): edges (i,k), (j,k) present, (i,j) absent, i < j."""

    i: int
    j: int
    k: int


@dataclass
class WedgeSet:
    """Edge-disjoint open wedges plus their weak edges (packed pair keys)."""

    wedges: list[OpenWedge]
    weak_edges: set[int]
    inspections: int = 0

    @property
    def weak_count(self) -> int:
        return len(self.weak_edges)

    def iter_weak_pairs(self) -> Iterator[tuple[int, int]]:
        for key in self.weak_edges:
            yield unpack_edge(key)


class FastMatchCursor:
    """Skip-list cursor over one center's array of live neighbors.

    ``next_idx[t]`` is the index after position t (NIL past the end);
    positions i < j hold the pair under inspection and ``j_prev`` satisfies
    next_idx[j_prev] == j.  ``advance_keep`` steps past an adjacent pair;
    ``advance_drop`` splices out position j and moves i, consuming both
    edges of a matched wedge.
    """

    NIL = -1

    def __init__(self, items: list[int]):
        if len(items) < 2:
            raise ValueError("cursor needs at least two items")
        self.items = items
        self.next_idx = list(range(1, len(items))) + [self.NIL]
        self.i = 0
        self.j = 1
        self.j_prev = 0
        self.finished = False

    def pair(self) -> tuple[int, int]:
        return self.items[self.i], self.items[self.j]

    def advance_keep(self) -> None:
        nxt = self.next_idx
        if nxt[self.j] != self.NIL:
            self.j_prev = self.j
            self.j = nxt[self.j]
        elif nxt[self.i] != self.j:
            self.i = nxt[self.i]
            self.j = nxt[self.i]
            self.j_prev = self.i
        else:
            self.finished = True

    def advance_drop(self) -> None:
        nxt = self.next_idx
        nxt[self.j_prev] = nxt[self.j]
        self.i = nxt[self.i]
        if self.i == self.NIL or nxt[self.i] == self.NIL:
            self.finished = True
        else:
            self.j = nxt[self.i]
            self.j_prev = self.i


def maximal_wedge_set_simple(g: Graph) -> WedgeSet:
    """Greedy matcher over the full wedge enumeration."""
    weak: set[int] = set()
    wedges: list[OpenWedge] = []
    inspections = 0

    def sink(i: int, j: int, k: int) -> None:
        nonlocal inspections
        inspections += 1
        e1 = pack_edge(i, k)
        if e1 in weak:
            return
        e2 = pack_edge(j, k)
        if e2 in weak:
            return
        weak.add(e1)
        weak.add(e2)
        wedges.append(OpenWedge(i, j, k))

    enumerate_open_wedges(g, sink)
    return WedgeSet(wedges, weak, inspections)


def maximal_wedge_set_fast(g: Graph) -> WedgeSet:
    """Skip-list matcher: per center, sweep live-neighbor pairs once.

    Every inspection either matches a wedge (at most m/2 overall, the pair
    leaves the sweep) or certifies a triangle (each triangle inspected at
    most once per corner), so inspections are O(min(m^1.5, m + T)).
    """
    weak: set[int] = set()
    wedges: list[OpenWedge] = []
    inspections = 0
    indptr = g._indptr
    nbrs = g._nbrs
    for v in range(g.n):
        lo = indptr[v]
        hi = indptr[v + 1]
        if hi - lo < 2:
            continue
        vbase = v << 32
        live = [u for u in nbrs[lo:hi].tolist()
                if ((vbase | u) if v < u else ((u << 32) | v)) not in weak]
        if len(live) < 2:
            continue
        cur = FastMatchCursor(live)
        while not cur.finished:
            u, w = cur.pair()
            inspections += 1
            if g.has_edge(u, w):
                cur.advance_keep()
            else:
                weak.add(pack_edge(v, u))
                weak.add(pack_edge(v, w))
                wedges.append(OpenWedge(u, w, v))
                cur.advance_drop()
    return WedgeSet(wedges, weak, inspections)


def verify_wedge_set(g: Graph, ws: WedgeSet) -> None:
    """Raise ValueError unless ws is a valid maximal edge-disjoint wedge set."""
    used: set[int] = set()
    for wdg in ws.wedges:
        i, j, k = wdg
        if not i < j:
            raise ValueError(f"wedge {wdg} not canonical")
        if not (g.has_edge(i, k) and g.has_edge(j, k)):
            raise ValueError(f"wedge {wdg} legs missing from graph")
        if g.has_edge(i, j):
            raise ValueError(f"wedge {wdg} is closed")
        for key in (pack_edge(i, k), pack_edge(j, k)):
            if key in used:
                raise ValueError(f"edge {unpack_edge(key)} shared by two wedges")
            used.add(key)
    if used != ws.weak_edges:
        raise ValueError("weak_edges does not match the union of wedge legs")
    violations: list[tuple[int, int, int]] = []

    def sink(i: int, j: int, k: int) -> None:
        if pack_edge(i, k) not in used and pack_edge(j, k) not in used:
            violations.append((i, j, k))

    enumerate_open_wedges(g, sink)
    if violations:
        raise ValueError(f"wedge set not maximal: {violations[0]} untouched")


def wedge_set_lines(ws: WedgeSet) -> list[str]:
    """Debug dump, one 'i j k' line per wedge."""
    return [f"{w.i} {w.j} {w.k}" for w in ws.wedges]
