"""Vertex and edge codes, resolving predicates, β and β_e."""

import logging
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
try:
    from enum import StrEnum
except ImportError:  # Python < 3.11
    from enum import Enum

    class StrEnum(str, Enum):
        def __str__(self) -> str:
            return str(self.value)

from src.graph_core import (
    DistanceMatrix,
    EdgeRef,
    Graph,
    GraphError,
    all_pairs_distances,
    require_connected,
    require_order_within,
    vertex_edge_distance,
    vertex_edge_matrix,
)
from src.models import ParamResult, Parameter
from src.search import SearchSettings, VertexSet, minimal_monotone_set

logger = logging.getLogger(__name__)

Code = tuple[int, ...]


@dataclass(frozen=True)
class LandmarkSet:
    """Nonempty strictly increasing tuple of vertex indices."""

    vertices: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.vertices:
            raise ValueError("landmark set must be nonempty")
        if any(v < 0 for v in self.vertices):
            raise ValueError(f"negative vertex in landmark set {self.vertices}")
        if any(a >= b for a, b in zip(self.vertices, self.vertices[1:], strict=False)):
            raise ValueError(
                f"landmark set must be strictly increasing, got {self.vertices}"
            )

    @classmethod
    def of(cls, vertices: Iterable[int]) -> "LandmarkSet":
        """Build from any iterable of distinct vertices."""
        ordered = sorted(vertices)
        if len(set(ordered)) != len(ordered):
            raise ValueError(f"duplicate vertex in landmark set {ordered}")
        return cls(tuple(ordered))

    def check_range(self, n: int) -> None:
        if self.vertices[-1] >= n:
            raise ValueError(
                f"landmark {self.vertices[-1]} out of range for {n} vertices"
            )

    def __iter__(self):
        return iter(self.vertices)

    def __len__(self) -> int:
        return len(self.vertices)


class TwinKind(StrEnum):
    TRUE_TWIN = "true-twin"
    FALSE_TWIN = "false-twin"


@dataclass(frozen=True)
class Twin:
    u: int
    v: int
    kind: TwinKind


def vertex_code(dm: DistanceMatrix, y: int, landmarks: Sequence[int] | LandmarkSet) -> Code:
    """Distances from y to each landmark, in landmark order."""
    return tuple(dm[y, w] for w in landmarks)


def edge_code(
    g: Graph,
    dm: DistanceMatrix,
    e: EdgeRef | int,
    landmarks: Sequence[int] | LandmarkSet,
) -> Code:
    """Vertex-edge distances from each landmark to e, in landmark order."""
    ref = g.edge_ref(e) if isinstance(e, int) else e
    return tuple(vertex_edge_distance(dm, w, ref) for w in landmarks)


@dataclass(frozen=True)
class ResolvingPredicate:
    """Tests whether a vertex set gives every vertex a distinct code.

    columns[w] is the tuple of distances from landmark w to all vertices.
    """

    columns: tuple[tuple[int, ...], ...]

    @classmethod
    def from_distances(cls, dm: DistanceMatrix) -> "ResolvingPredicate":
        return cls(tuple(tuple(row) for row in dm.d.tolist()))

    def __call__(self, vertices: VertexSet) -> bool:
        size = len(self.columns)
        return len(set(zip(*(self.columns[w] for w in vertices), strict=True))) == size


@dataclass(frozen=True)
class EdgeResolvingPredicate:
    """Tests whether a vertex set gives every edge a distinct code.

    rows[w] is the tuple of vertex-edge distances from w to all edges.
    """

    rows: tuple[tuple[int, ...], ...]
    edge_count: int

    @classmethod
    def from_graph(cls, g: Graph, dm: DistanceMatrix) -> "EdgeResolvingPredicate":
        matrix = vertex_edge_matrix(g, dm)
        return cls(tuple(tuple(row) for row in matrix.tolist()), g.m)

    def __call__(self, vertices: VertexSet) -> bool:
        codes = set(zip(*(self.rows[w] for w in vertices), strict=True))
        return len(codes) == self.edge_count


def _landmark_tuple(g: Graph, landmarks: Sequence[int] | LandmarkSet) -> VertexSet:
    chosen = LandmarkSet.of(landmarks)
    chosen.check_range(g.n)
    return chosen.vertices


def is_resolving(
    g: Graph, dm: DistanceMatrix, landmarks: Sequence[int] | LandmarkSet
) -> bool:
    """True iff all n vertex codes with respect to landmarks are distinct."""
    require_connected(g)
    return ResolvingPredicate.from_distances(dm)(_landmark_tuple(g, landmarks))


def is_edge_resolving(
    g: Graph, dm: DistanceMatrix, landmarks: Sequence[int] | LandmarkSet
) -> bool:
    """True iff all m edge codes with respect to landmarks are distinct."""
    require_connected(g)
    if g.m == 0:
        raise GraphError("edge resolvability needs at least one edge")
    return EdgeResolvingPredicate.from_graph(g, dm)(_landmark_tuple(g, landmarks))


def metric_dimension(
    g: Graph,
    settings: SearchSettings | None = None,
    dm: DistanceMatrix | None = None,
) -> ParamResult:
    """Compute β with its lexicographically first metric basis.

    Raises:
        DisconnectedGraphError: If g is not connected
        GraphError: If g has fewer than two vertices
        SizeCapExceededError: If g exceeds the vertex cap
        BudgetExceededError: If the time budget runs out
    """
    settings = settings or SearchSettings()
    require_order_within(g, settings.max_vertices)
    require_connected(g)
    if g.n < 2:
        raise GraphError("metric dimension needs at least two vertices")
    dm = dm or all_pairs_distances(g)
    return minimal_monotone_set(
        g.n,
        ResolvingPredicate.from_distances(dm),
        lower_bound=1,
        settings=settings,
        parameter=Parameter.BETA,
    )


def edge_metric_dimension(
    g: Graph,
    settings: SearchSettings | None = None,
    dm: DistanceMatrix | None = None,
) -> ParamResult:
    """Compute β_e with its lexicographically first edge metric basis."""
    settings = settings or SearchSettings()
    require_order_within(g, settings.max_vertices)
    require_connected(g)
    if g.m == 0:
        raise GraphError("edge metric dimension needs at least one edge")
    dm = dm or all_pairs_distances(g)
    return minimal_monotone_set(
        g.n,
        EdgeResolvingPredicate.from_graph(g, dm),
        lower_bound=1,
        settings=settings,
        parameter=Parameter.BETA_E,
    )


def find_twins(g: Graph) -> list[Twin]:
    """All unordered twin pairs: equal closed (true) or open (false) neighbourhoods."""
    twins = []
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if g.has_edge(u, v):
                if g.closed_neighborhood(u) == g.closed_neighborhood(v):
                    twins.append(Twin(u, v, TwinKind.TRUE_TWIN))
            elif g.adjacency[u] == g.adjacency[v]:
                twins.append(Twin(u, v, TwinKind.FALSE_TWIN))
    return twins
