"""Dominating and vertex-edge dominating sets; exact γ and γ_ve.

Domination needs no distances, so these operations accept disconnected
graphs. A vertex w ve-dominates edge uv exactly when its distance to uv is
at most 1, which is the same as w lying in N[u] ∪ N[v].
"""

import logging
from collections.abc import Sequence
from dataclasses import dataclass

from src.graph_core import (
    DistanceMatrix,
    Graph,
    GraphError,
    require_order_within,
    vertex_edge_matrix,
)
from src.models import ParamResult, Parameter
from src.resolvability import LandmarkSet, TwinKind, find_twins
from src.search import SearchSettings, VertexSet, minimal_monotone_set

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DominatingPredicate:
    """Closed-neighbourhood bitmask cover test."""

    closed_masks: tuple[int, ...]
    full: int

    @classmethod
    def from_graph(cls, g: Graph) -> "DominatingPredicate":
        masks = tuple(
            sum(1 << u for u in g.closed_neighborhood(v)) for v in range(g.n)
        )
        return cls(masks, (1 << g.n) - 1)

    def __call__(self, vertices: VertexSet) -> bool:
        covered = 0
        for v in vertices:
            covered |= self.closed_masks[v]
        return covered == self.full


@dataclass(frozen=True)
class VeDominatingPredicate:
    """Edge-coverage bitmask test; bit j of coverage[w] marks edge j within distance 1."""

    coverage: tuple[int, ...]
    full: int

    @classmethod
    def from_graph(
        cls, g: Graph, dm: DistanceMatrix | None = None
    ) -> "VeDominatingPredicate":
        if dm is not None:
            near = (vertex_edge_matrix(g, dm) <= 1).tolist()
            coverage = tuple(
                sum(1 << j for j, hit in enumerate(row) if hit) for row in near
            )
        else:
            coverage = tuple(
                sum(
                    1 << j
                    for j, (a, b) in enumerate(g.edges)
                    if w in g.closed_neighborhood(a) or w in g.closed_neighborhood(b)
                )
                for w in range(g.n)
            )
        return cls(coverage, (1 << g.m) - 1)

    def __call__(self, vertices: VertexSet) -> bool:
        covered = 0
        for w in vertices:
            covered |= self.coverage[w]
        return covered == self.full


def _members(g: Graph, vertices: Sequence[int] | LandmarkSet) -> VertexSet:
    chosen = LandmarkSet.of(vertices)
    chosen.check_range(g.n)
    return chosen.vertices


def is_dominating(g: Graph, vertices: Sequence[int] | LandmarkSet) -> bool:
    """True iff every vertex is in the set or adjacent to a member."""
    return DominatingPredicate.from_graph(g)(_members(g, vertices))


def is_ve_dominating(
    g: Graph,
    vertices: Sequence[int] | LandmarkSet,
    dm: DistanceMatrix | None = None,
) -> bool:
    """True iff every edge is within vertex-edge distance 1 of some member."""
    if g.m == 0:
        raise GraphError("ve-domination needs at least one edge")
    return VeDominatingPredicate.from_graph(g, dm)(_members(g, vertices))


def ve_dominates_by_clauses(g: Graph, w: int, edge: tuple[int, int]) -> bool:
    """Incidence/adjacency definition: w is an endpoint, or wx or wy is an edge."""
    x, y = edge
    if w in (x, y):
        return True
    return g.has_edge(w, x) or g.has_edge(w, y)


def is_ve_dominating_by_clauses(g: Graph, vertices: Sequence[int]) -> bool:
    """Reference check of ve-domination written straight from the clauses."""
    return all(
        any(ve_dominates_by_clauses(g, w, edge) for w in vertices) for edge in g.edges
    )


def domination_number(
    g: Graph, settings: SearchSettings | None = None
) -> ParamResult:
    """Compute γ with its lexicographically first minimum dominating set."""
    settings = settings or SearchSettings()
    require_order_within(g, settings.max_vertices)
    return minimal_monotone_set(
        g.n,
        DominatingPredicate.from_graph(g),
        lower_bound=1,
        settings=settings,
        parameter=Parameter.GAMMA,
    )


def ve_domination_number(
    g: Graph,
    settings: SearchSettings | None = None,
    dm: DistanceMatrix | None = None,
) -> ParamResult:
    """Compute γ_ve with its lexicographically first minimum ve-dominating set."""
    settings = settings or SearchSettings()
    require_order_within(g, settings.max_vertices)
    if g.m == 0:
        raise GraphError("ve-domination number needs at least one edge")
    return minimal_monotone_set(
        g.n,
        VeDominatingPredicate.from_graph(g, dm),
        lower_bound=1,
        settings=settings,
        parameter=Parameter.GAMMA_VE,
    )


def drop_false_twins(g: Graph, vertices: Sequence[int]) -> tuple[int, ...]:
    """Remove the larger vertex of every false-twin pair inside the set.

    False twins ve-dominate exactly the same edges, so the result is
    ve-dominating whenever the input is.
    """
    kept = set(vertices)
    for twin in find_twins(g):
        if twin.kind is TwinKind.FALSE_TWIN and twin.u in kept and twin.v in kept:
            kept.discard(twin.v)
    return tuple(sorted(kept))
