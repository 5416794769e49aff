"""Half-integral relaxation of strong triadic closure via one min s-t cut.

The relaxation assigns each edge a weakness x in {0, 1/2, 1} such that the
two legs of every open wedge carry total weakness >= 1, minimizing the sum.
Values are kept in half-units (0, 1, 2) so all arithmetic is integral.

Construction: each edge e gets two flow nodes, an intake fed from the
source and an outlet feeding the sink, both through arcs of weight 1 (the
objective is doubled, so one unit = one half).  An open wedge (i, j, k)
adds intake(ik) -> outlet(jk) and intake(jk) -> outlet(ik) with weight
m + 1, which no minimum cut ever pays: cutting all m source arcs is
feasible and costs m.  With S the source side of the minimum cut,
lo(e) = [intake(e) in S], hi(e) = [outlet(e) in S], and the edge's
weakness in half-units is hi - lo + 1; the cut pays hi + (1 - lo) per
edge, so the cut value equals the summed objective exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .flow import FlowNetwork, max_flow_min_cut
from .graph import Graph, enumerate_open_wedges, pack_edge

DEFAULT_ARC_BUDGET = 5_000_000


class ArcBudgetError(RuntimeError):
    """The cut network would exceed the configured arc budget."""

    def __init__(self, needed: int, budget: int):
        super().__init__(
            f"cut network needs more than {needed} arcs (budget {budget})")
        self.needed = needed
        self.budget = budget


@dataclass(frozen=True)
class StcCutMap:
    """Per-edge flow node ids inside the cut network."""

    intake: list[int]
    outlet: list[int]
    source: int
    sink: int


@dataclass
class HalfIntegralSolution:
    """Optimal weakness values in half-units (0, 1, or 2), by edge id."""

    graph: Graph
    values: list[int]
    objective_half_units: int

    def value_of(self, u: int, v: int) -> int:
        return self.values[self.graph.edge_id(u, v)]


@dataclass
class CutLabels:
    """Binary split of a half-integral solution: per edge, hi = weakness
    at least one half, lo = weakness at most one half."""

    hi: list[int]
    lo: list[int]


def build_cut_network(g: Graph,
                      arc_budget: int = DEFAULT_ARC_BUDGET
                      ) -> tuple[FlowNetwork, StcCutMap]:
    """Build the doubled-weight cut network for g's relaxation.

    Raises ArcBudgetError if more than arc_budget arcs would be created
    (2 per edge plus 2 per open wedge).
    """
    m = g.m
    if 2 * m > arc_budget:
        raise ArcBudgetError(2 * m, arc_budget)
    s = 2 * m
    t = 2 * m + 1
    net = FlowNetwork(2 * m + 2, s, t)
    for e in range(m):
        net.add_arc(s, 2 * e, 1)
        net.add_arc(2 * e + 1, t, 1)
    big = m + 1
    state = {"arcs": 2 * m}

    def sink_wedge(i: int, j: int, k: int) -> None:
        state["arcs"] += 2
        if state["arcs"] > arc_budget:
            raise ArcBudgetError(state["arcs"], arc_budget)
        eik = g.edge_id(i, k)
        ejk = g.edge_id(j, k)
        net.add_arc(2 * eik, 2 * ejk + 1, big)
        net.add_arc(2 * ejk, 2 * eik + 1, big)

    enumerate_open_wedges(g, sink_wedge)
    cmap = StcCutMap([2 * e for e in range(m)],
                     [2 * e + 1 for e in range(m)], s, t)
    return net, cmap


def solve_stc_lp(g: Graph,
                 arc_budget: int = DEFAULT_ARC_BUDGET) -> HalfIntegralSolution:
    """Solve the relaxation exactly; objective equals the cut value."""
    net, cmap = build_cut_network(g, arc_budget)
    cut = max_flow_min_cut(net)
    side = cut.source_side
    values = []
    for e in range(g.m):
        hi = 1 if cmap.outlet[e] in side else 0
        lo = 1 if cmap.intake[e] in side else 0
        values.append(hi - lo + 1)
    objective = sum(values)
    assert objective == cut.flow_value, "objective must equal the cut value"
    return HalfIntegralSolution(g, values, objective)


def labeling_from_lp(sol: HalfIntegralSolution) -> set[int]:
    """Weak-edge set (packed pair keys): edges with weakness >= one half."""
    weak = set()
    eu_ev = sol.graph.packed_edges()
    for e, val in enumerate(sol.values):
        if val >= 1:
            weak.add(eu_ev[e])
    return weak


def verify_stc_feasible(g: Graph, values: Sequence[int]) -> bool:
    """Check every open wedge carries total weakness >= 2 half-units."""
    ok = [True]

    def sink_wedge(i: int, j: int, k: int) -> None:
        if values[g.edge_id(i, k)] + values[g.edge_id(j, k)] < 2:
            ok[0] = False

    enumerate_open_wedges(g, sink_wedge)
    return ok[0]


def labels_from_values(values: Sequence[int]) -> CutLabels:
    return CutLabels([1 if v >= 1 else 0 for v in values],
                     [1 if v <= 1 else 0 for v in values])


def values_from_labels(labels: CutLabels) -> list[int]:
    return [h - l + 1 for h, l in zip(labels.hi, labels.lo)]


def labels_feasible(g: Graph, labels: CutLabels) -> bool:
    """Check the binary form of the wedge constraints: for every open
    wedge, lo of one leg is at most hi of the other."""
    ok = [True]

    def sink_wedge(i: int, j: int, k: int) -> None:
        eik = g.edge_id(i, k)
        ejk = g.edge_id(j, k)
        if labels.lo[eik] > labels.hi[ejk] or labels.lo[ejk] > labels.hi[eik]:
            ok[0] = False

    enumerate_open_wedges(g, sink_wedge)
    return ok[0]


def solution_lines(sol: HalfIntegralSolution) -> list[str]:
    """Debug dump, one 'u v value_half_units' line per edge."""
    g = sol.graph
    return [f"{g.label_of(u)} {g.label_of(v)} {sol.values[e]}"
            for e, (u, v) in enumerate(g.edges())]
