"""End-to-end cluster deletion pipelines with certified lower bounds.

Both pipelines compute a weak edge set E_W, strip it, and pivot the
remaining graph.  Maximality of E_W guarantees every cluster is a clique
of the original graph, so the solution deletes exactly the edges between
clusters.

match-flip-pivot ("mfp"): E_W holds the two legs of each wedge in a
maximal edge-disjoint set W of open wedges.  Any valid solution deletes
at least one edge per matched wedge, so |W| lower-bounds the optimum and
the pivot accounting bounds deletions by 3|W|.

lp rounding ("stclp"): E_W holds the edges at weakness >= 1/2 in the
half-integral STC relaxation; half the relaxation value lower-bounds the
optimum and deletions stay within 3x of it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from time import perf_counter

from .graph import Graph
from .pivoting import Clustering, PivotAudit, PivotStrategy, pivot
from .stc import DEFAULT_ARC_BUDGET, labeling_from_lp, solve_stc_lp
from .wedges import (WedgeSet, maximal_wedge_set_fast,
                     maximal_wedge_set_simple)

_JSON_KEYS = ("algorithm", "strategy", "seed", "n", "m", "wedges",
              "weak_edges", "lp_value_half_units", "deletions",
              "lower_bound_half_units", "ratio", "m_W", "m_S", "m_1",
              "b_half", "n_half", "boundary_edges", "internal_nonedges",
              "clusters", "merged", "runtime_ms")


@dataclass
class CDResult:
    """One pipeline run.  boundary_edges / internal_nonedges audit the
    pivot stage and are not recomputed after merging."""

    algorithm: str
    strategy: str
    seed: int | None
    n: int
    m: int
    wedges: int | None
    weak_edges: int
    lp_value_half_units: int | None
    deletions: int
    lower_bound_half_units: int
    ratio: Fraction | None
    m_w: int
    m_s: int
    m_1: int | None
    b_half: int | None
    n_half: int | None
    boundary_edges: int
    internal_nonedges: int
    clustering: Clustering
    audit: PivotAudit
    merged: bool
    runtime_ms: dict[str, float | None]
    weak_set: set[int] = field(repr=False, default_factory=set)
    values: list[int] | None = field(repr=False, default=None)

    def to_json_dict(self) -> dict:
        if self.ratio is None:
            ratio = None
        else:
            ratio = {"num": self.ratio.numerator,
                     "den": self.ratio.denominator,
                     "float": float(self.ratio)}
        vals = {"algorithm": self.algorithm, "strategy": self.strategy,
                "seed": self.seed, "n": self.n, "m": self.m,
                "wedges": self.wedges, "weak_edges": self.weak_edges,
                "lp_value_half_units": self.lp_value_half_units,
                "deletions": self.deletions,
                "lower_bound_half_units": self.lower_bound_half_units,
                "ratio": ratio, "m_W": self.m_w, "m_S": self.m_s,
                "m_1": self.m_1, "b_half": self.b_half,
                "n_half": self.n_half,
                "boundary_edges": self.boundary_edges,
                "internal_nonedges": self.internal_nonedges,
                "clusters": self.clustering.num_clusters,
                "merged": self.merged,
                "runtime_ms": dict(self.runtime_ms)}
        return {k: vals[k] for k in _JSON_KEYS}


@dataclass
class _Prep:
    """Stage-1 artifacts shared across pivot runs."""

    algorithm: str
    wedges: int | None
    weak: set[int]
    values: list[int] | None
    lp_half: int | None
    lower_bound_half: int
    ghat: Graph
    lb_ms: float


def _prepare_mfp(g: Graph, matcher: str = "fast",
                 wedge_set: WedgeSet | None = None) -> _Prep:
    t0 = perf_counter()
    if wedge_set is not None:
        ws = wedge_set
    elif matcher == "fast":
        ws = maximal_wedge_set_fast(g)
    elif matcher == "simple":
        ws = maximal_wedge_set_simple(g)
    else:
        raise ValueError(f"unknown matcher {matcher!r}")
    ghat = g.drop_edges(ws.weak_edges)
    lb_ms = (perf_counter() - t0) * 1000.0
    return _Prep("mfp", len(ws.wedges), set(ws.weak_edges), None, None,
                 2 * len(ws.wedges), ghat, lb_ms)


def _prepare_stclp(g: Graph, arc_budget: int = DEFAULT_ARC_BUDGET) -> _Prep:
    t0 = perf_counter()
    sol = solve_stc_lp(g, arc_budget)
    weak = labeling_from_lp(sol)
    ghat = g.drop_edges(weak)
    lb_ms = (perf_counter() - t0) * 1000.0
    return _Prep("stclp", None, weak, sol.values, sol.objective_half_units,
                 sol.objective_half_units, ghat, lb_ms)


def _score(g: Graph, prep: _Prep, clustering: Clustering,
           audit: PivotAudit, strategy: PivotStrategy,
           merged: bool, runtime_ms: dict[str, float | None]) -> CDResult:
    assignment = clustering.assignment
    weak = prep.weak
    values = prep.values
    deletions = m_w = m_s = 0
    m_1 = b_half = n_half = 0
    eu = g._edge_u.tolist()
    ev = g._edge_v.tolist()
    for e in range(g.m):
        u = eu[e]
        v = ev[e]
        is_weak = ((u << 32) | v) in weak
        if assignment[u] != assignment[v]:
            deletions += 1
            if is_weak:
                m_w += 1
                if values is not None:
                    if values[e] == 2:
                        m_1 += 1
                    else:
                        b_half += 1
            else:
                m_s += 1
        elif is_weak and values is not None and values[e] == 1:
            n_half += 1
    # every cluster must be a clique of g
    internal_pairs = sum(len(c) * (len(c) - 1) // 2
                         for c in clustering.clusters)
    assert internal_pairs == g.m - deletions, "non-clique cluster"
    if not merged:
        # strong deletions are exactly the audited boundary edges, and
        # kept weak edges are exactly the audited internal non-edges
        assert m_s == audit.boundary_edges
        assert len(weak) - m_w == audit.internal_nonedges
    lb = prep.lower_bound_half
    ratio = Fraction(2 * deletions, lb) if lb > 0 else None
    return CDResult(
        algorithm=prep.algorithm, strategy=strategy.kind,
        seed=strategy.seed, n=g.n, m=g.m, wedges=prep.wedges,
        weak_edges=len(weak), lp_value_half_units=prep.lp_half,
        deletions=deletions, lower_bound_half_units=lb, ratio=ratio,
        m_w=m_w, m_s=m_s,
        m_1=m_1 if values is not None else None,
        b_half=b_half if values is not None else None,
        n_half=n_half if values is not None else None,
        boundary_edges=audit.boundary_edges,
        internal_nonedges=audit.internal_nonedges,
        clustering=clustering, audit=audit, merged=merged,
        runtime_ms=runtime_ms, weak_set=weak, values=values)


def _finish(g: Graph, prep: _Prep, strategy: PivotStrategy) -> CDResult:
    t0 = perf_counter()
    clustering, audit = pivot(prep.ghat, strategy)
    pivot_ms = (perf_counter() - t0) * 1000.0
    runtime_ms = {"lower_bound": prep.lb_ms, "pivot": pivot_ms,
                  "merge": None}
    return _score(g, prep, clustering, audit, strategy, False, runtime_ms)


def match_flip_pivot(g: Graph, strategy: PivotStrategy,
                     matcher: str = "fast",
                     wedge_set: WedgeSet | None = None) -> CDResult:
    """Match a maximal wedge set, strip its legs, pivot.  An explicit
    wedge_set overrides the matcher (for tests and experiments)."""
    return _finish(g, _prepare_mfp(g, matcher, wedge_set), strategy)


def stc_lp_round(g: Graph, strategy: PivotStrategy,
                 arc_budget: int = DEFAULT_ARC_BUDGET) -> CDResult:
    """Solve the STC relaxation, strip edges at weakness >= 1/2, pivot."""
    return _finish(g, _prepare_stclp(g, arc_budget), strategy)


def best_of_random(g: Graph, trials: int, base_seed: int = 0,
                   algorithm: str = "mfp", matcher: str = "fast",
                   arc_budget: int = DEFAULT_ARC_BUDGET
                   ) -> tuple[CDResult, dict]:
    """Run the random strategy with seeds base_seed..base_seed+trials-1
    over a single stage-1 preparation; returns the best run (fewest
    deletions, earliest seed on ties) and summary statistics."""
    if trials < 1:
        raise ValueError("trials must be positive")
    if algorithm == "mfp":
        prep = _prepare_mfp(g, matcher)
    elif algorithm == "stclp":
        prep = _prepare_stclp(g, arc_budget)
    else:
        raise ValueError(f"unknown algorithm {algorithm!r}")
    best: CDResult | None = None
    total_deletions = 0
    total_ratio = 0.0
    for i in range(trials):
        res = _finish(g, prep, PivotStrategy.random(base_seed + i))
        total_deletions += res.deletions
        if res.ratio is not None:
            total_ratio += float(res.ratio)
        if best is None or res.deletions < best.deletions:
            best = res
    summary = {"trials": trials,
               "mean_deletions": total_deletions / trials,
               "mean_ratio": (total_ratio / trials
                              if best.ratio is not None else None)}
    return best, summary


def merge_clusters(g: Graph, clustering: Clustering,
                   max_passes: int | None = None,
                   budget_ms: float | None = None) -> Clustering:
    """Greedily merge cluster pairs whose union is still a clique.

    Pairs are scanned largest-first (ties by cluster id), restarting until
    a full pass makes no merge or a budget runs out.  Deletions never
    increase, so stopping early is always safe.  The scan is quadratic in
    the number of clusters; pass budget_ms on large instances.
    """
    clusters = [list(c) for c in clustering.clusters]
    dead = [False] * len(clusters)
    deadline = (perf_counter() + budget_ms / 1000.0
                if budget_ms is not None else None)
    passes = 0
    out_of_time = False
    while not out_of_time and (max_passes is None or passes < max_passes):
        passes += 1
        order = sorted((c for c in range(len(clusters)) if not dead[c]),
                       key=lambda c: (-len(clusters[c]), c))
        merged_any = False
        for ai, a in enumerate(order):
            if dead[a]:
                continue
            for b in order[ai + 1:]:
                if dead[b] or dead[a]:
                    continue
                if deadline is not None and perf_counter() > deadline:
                    out_of_time = True
                    break
                if _mergeable(g, clusters[a], clusters[b]):
                    clusters[a] = sorted(clusters[a] + clusters[b])
                    dead[b] = True
                    merged_any = True
            if out_of_time:
                break
        if not merged_any:
            break
    survivors = [clusters[c] for c in range(len(clusters)) if not dead[c]]
    assignment = [-1] * g.n
    for cid, members in enumerate(survivors):
        for v in members:
            assignment[v] = cid
    return Clustering(assignment, survivors)


def _mergeable(g: Graph, c1: list[int], c2: list[int]) -> bool:
    for u in c1:
        for v in c2:
            if not g.has_edge(u, v):
                return False
    return True


def apply_merge(g: Graph, result: CDResult,
                max_passes: int | None = None,
                budget_ms: float | None = None) -> CDResult:
    """Post-process a pipeline result with clique-preserving merges and
    rescore it; the pivot-stage audit fields carry over unchanged."""
    t0 = perf_counter()
    merged = merge_clusters(g, result.clustering, max_passes, budget_ms)
    merge_ms = (perf_counter() - t0) * 1000.0
    prep = _Prep(result.algorithm, result.wedges, result.weak_set,
                 result.values, result.lp_value_half_units,
                 result.lower_bound_half_units, g, 0.0)
    runtime_ms = dict(result.runtime_ms)
    runtime_ms["merge"] = merge_ms
    strategy = (PivotStrategy.random(result.seed)
                if result.strategy == "random"
                else PivotStrategy(result.strategy))
    out = _score(g, prep, merged, result.audit, strategy, True, runtime_ms)
    assert out.deletions <= result.deletions, "merge increased deletions"
    return out
