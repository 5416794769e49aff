"""Undirected simple graphs backed by CSR adjacency arrays.

Graphs are read from whitespace-separated edge lists (SNAP style) or built
from explicit edge iterables.  Node labels are compacted to dense internal
ids in first-appearance order; original labels are kept so clusterings can
be written back in terms of the input file.  Edges get dense ids 0..m-1 in
first-appearance order, which the LP machinery uses to index per-edge
values.
"""

from __future__ import annotations

from typing import Callable, Iterable, Iterator

import numpy as np

_SHIFT = 32
_MASK = (1 << _SHIFT) - 1


def pack_edge(u: int, v: int) -> int:
    """Canonical integer key for the unordered pair {u, v}."""
    return (u << _SHIFT) | v if u < v else (v << _SHIFT) | u


def unpack_edge(key: int) -> tuple[int, int]:
    return key >> _SHIFT, key & _MASK


class EdgeListParseError(ValueError):
    """Malformed edge-list input.  Carries the 1-based line number."""

    def __init__(self, message: str, lineno: int):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


class Graph:
    """Immutable undirected simple graph with sorted CSR adjacency.

    ``labels`` maps internal id -> original label and ``id_map`` the other
    way; both are None for graphs whose nodes are already dense ints.
    """

    __slots__ = ("n", "m", "labels", "id_map", "_indptr", "_nbrs",
                 "_edge_u", "_edge_v", "_edge_ids")

    def __init__(self, n: int, edge_u: np.ndarray, edge_v: np.ndarray,
                 labels: list[int] | None = None,
                 id_map: dict[int, int] | None = None):
        # edge_u/edge_v must already be canonical (u < v), deduplicated,
        # self-loop free, in edge-id order.  Use from_edges/parse_edge_list.
        self.n = n
        self.m = int(len(edge_u))
        self.labels = labels
        self.id_map = id_map
        self._edge_u = edge_u
        self._edge_v = edge_v
        self._indptr = np.zeros(n + 1, dtype=np.int64)
        if self.m:
            rows = np.concatenate([edge_u, edge_v])
            cols = np.concatenate([edge_v, edge_u])
            order = np.lexsort((cols, rows))
            self._nbrs = cols[order]
            counts = np.bincount(rows, minlength=n)
            np.cumsum(counts, out=self._indptr[1:])
        else:
            self._nbrs = np.zeros(0, dtype=np.int64)
        packed = ((edge_u << _SHIFT) | edge_v).tolist()
        self._edge_ids = {key: idx for idx, key in enumerate(packed)}

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]],
                   labels: list[int] | None = None,
                   id_map: dict[int, int] | None = None) -> "Graph":
        """Build a graph on nodes 0..n-1; drops self-loops and duplicates."""
        seen: dict[int, None] = {}
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                continue
            seen.setdefault(pack_edge(u, v), None)
        m = len(seen)
        edge_u = np.fromiter((k >> _SHIFT for k in seen), dtype=np.int64, count=m)
        edge_v = np.fromiter((k & _MASK for k in seen), dtype=np.int64, count=m)
        return cls(n, edge_u, edge_v, labels=labels, id_map=id_map)

    def neighbors(self, v: int) -> np.ndarray:
        """Sorted array of neighbor ids (a view; do not mutate)."""
        return self._nbrs[self._indptr[v]:self._indptr[v + 1]]

    def degree(self, v: int) -> int:
        return int(self._indptr[v + 1] - self._indptr[v])

    def has_edge(self, u: int, v: int) -> bool:
        if u == v:
            return False
        return pack_edge(u, v) in self._edge_ids

    def edge_id(self, u: int, v: int) -> int:
        """Dense id of edge {u, v}; KeyError if absent."""
        return self._edge_ids[pack_edge(u, v)]

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges as (u, v) with u < v, in edge-id order."""
        return zip(self._edge_u.tolist(), self._edge_v.tolist())

    def packed_edges(self) -> list[int]:
        return ((self._edge_u << _SHIFT) | self._edge_v).tolist()

    def label_of(self, v: int) -> int:
        return self.labels[v] if self.labels is not None else v

    def drop_edges(self, packed_keys: set[int]) -> "Graph":
        """Copy of the graph without the given edges (packed keys)."""
        eu = self._edge_u.tolist()
        ev = self._edge_v.tolist()
        keep = [i for i in range(self.m)
                if ((eu[i] << _SHIFT) | ev[i]) not in packed_keys]
        return Graph(self.n, self._edge_u[keep], self._edge_v[keep],
                     labels=self.labels, id_map=self.id_map)


def parse_edge_list(source) -> Graph:
    """Parse a whitespace-separated edge list into a Graph.

    ``source`` may be a str, bytes, or an iterable of lines (e.g. an open
    file).  ``#`` starts a comment (full-line or trailing).  Each remaining
    line must hold exactly two integer tokens.  Duplicate edges in either
    orientation collapse to one; self-loops are dropped but still register
    the label, so a node can exist with degree 0.  Labels are compacted to
    0..n-1 in first-appearance order.
    """
    if isinstance(source, bytes):
        lines: Iterable = source.decode("utf-8").splitlines()
    elif isinstance(source, str):
        lines = source.splitlines()
    else:
        lines = source
    id_map: dict[int, int] = {}
    labels: list[int] = []
    seen: dict[int, None] = {}
    for lineno, raw in enumerate(lines, start=1):
        if isinstance(raw, bytes):
            raw = raw.decode("utf-8")
        line = raw
        if "#" in line:
            line = line[:line.index("#")]
        parts = line.split()
        if not parts:
            continue
        if len(parts) != 2:
            raise EdgeListParseError(
                f"expected two integer tokens, got {len(parts)}", lineno)
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError:
            raise EdgeListParseError(
                f"non-integer token in {parts!r}", lineno) from None
        ia = id_map.get(a)
        if ia is None:
            ia = id_map[a] = len(labels)
            labels.append(a)
        ib = id_map.get(b)
        if ib is None:
            ib = id_map[b] = len(labels)
            labels.append(b)
        if ia == ib:
            continue
        seen.setdefault(pack_edge(ia, ib), None)
    m = len(seen)
    edge_u = np.fromiter((k >> _SHIFT for k in seen), dtype=np.int64, count=m)
    edge_v = np.fromiter((k & _MASK for k in seen), dtype=np.int64, count=m)
    return Graph(len(labels), edge_u, edge_v, labels=labels, id_map=id_map)


def serialize_edge_list(g: Graph) -> str:
    """Edge-list text that reparses to an identical graph.

    Leads with one self-loop line per node in id order: the parser registers
    labels from dropped self-loops, so the reparse reproduces internal ids
    exactly (including isolated nodes).
    """
    out = []
    for v in range(g.n):
        lab = g.label_of(v)
        out.append(f"{lab} {lab}")
    for u, v in g.edges():
        out.append(f"{g.label_of(u)} {g.label_of(v)}")
    return "\n".join(out) + ("\n" if out else "")


def enumerate_open_wedges(g: Graph,
                          sink: Callable[[int, int, int], None] | None = None
                          ) -> int:
    """Stream every open wedge of g; return the count.

    A wedge is reported in canonical form (i, j, k) with i < j, where
    (i, k) and (j, k) are edges and (i, j) is not.  Wedges are grouped by
    center k.  ``sink`` receives each wedge; pass None to just count.
    """
    count = 0
    indptr = g._indptr
    nbrs = g._nbrs
    eset = g._edge_ids
    for k in range(g.n):
        lo = indptr[k]
        hi = indptr[k + 1]
        if hi - lo < 2:
            continue
        nb = nbrs[lo:hi].tolist()
        d = len(nb)
        for ai in range(d - 1):
            a = nb[ai]
            base = a << _SHIFT
            for bi in range(ai + 1, d):
                b = nb[bi]
                if (base | b) not in eset:
                    count += 1
                    if sink is not None:
                        sink(a, b, k)
    return count
