"""The combined parameters γ_md and γ_emd, plus one-call computation of all six.

γ_md is the minimum size of a set that dominates and resolves; γ_emd is
the minimum size of a set that ve-dominates and edge-resolves. Both are
searched with the shared engine starting from the larger of the two
component minima, which no combined set can undercut.
"""

import logging
from collections.abc import Iterable, Mapping, Sequence

from src.domination import (
    DominatingPredicate,
    VeDominatingPredicate,
    domination_number,
    ve_domination_number,
)
from src.graph_core import (
    DistanceMatrix,
    Graph,
    GraphError,
    all_pairs_distances,
    require_connected,
    require_order_within,
)
from src.models import PARAMETER_ORDER, ParamResult, Parameter
from src.resolvability import (
    EdgeResolvingPredicate,
    LandmarkSet,
    ResolvingPredicate,
    edge_metric_dimension,
    metric_dimension,
)
from src.search import (
    AllOf,
    BudgetExceededError,
    SearchError,
    SearchSettings,
    minimal_monotone_set,
)

logger = logging.getLogger(__name__)

_METRIC_PARAMETERS = frozenset(
    {Parameter.BETA, Parameter.BETA_E, Parameter.GAMMA_MD, Parameter.GAMMA_EMD}
)

__all__ = [
    "BudgetExceededError",
    "SearchError",
    "SearchSettings",
    "applicable_parameters",
    "compute_parameters",
    "dominant_metric_dimension",
    "is_dominant_resolving",
    "is_ve_dominant_edge_resolving",
    "minimal_monotone_set",
    "ve_dominant_edge_metric_dimension",
]


def dominant_resolving_predicate(g: Graph, dm: DistanceMatrix) -> AllOf:
    return AllOf((DominatingPredicate.from_graph(g), ResolvingPredicate.from_distances(dm)))


def ve_dominant_edge_resolving_predicate(g: Graph, dm: DistanceMatrix) -> AllOf:
    return AllOf(
        (VeDominatingPredicate.from_graph(g, dm), EdgeResolvingPredicate.from_graph(g, dm))
    )


def _members(g: Graph, vertices: Sequence[int] | LandmarkSet) -> tuple[int, ...]:
    chosen = LandmarkSet.of(vertices)
    chosen.check_range(g.n)
    return chosen.vertices


def is_dominant_resolving(
    g: Graph, dm: DistanceMatrix, vertices: Sequence[int] | LandmarkSet
) -> bool:
    """True iff the set is both dominating and resolving."""
    require_connected(g)
    return dominant_resolving_predicate(g, dm)(_members(g, vertices))


def is_ve_dominant_edge_resolving(
    g: Graph, dm: DistanceMatrix, vertices: Sequence[int] | LandmarkSet
) -> bool:
    """True iff the set is both ve-dominating and edge resolving."""
    require_connected(g)
    if g.m == 0:
        raise GraphError("ve-dominant edge resolving sets need at least one edge")
    return ve_dominant_edge_resolving_predicate(g, dm)(_members(g, vertices))


def dominant_metric_dimension(
    g: Graph,
    settings: SearchSettings | None = None,
    dm: DistanceMatrix | None = None,
    known: Mapping[Parameter, ParamResult] | None = None,
) -> ParamResult:
    """Compute γ_md.

    Args:
        g: Connected graph with at least two vertices
        settings: Search limits
        dm: Precomputed distances of g
        known: Already computed results; when both γ and β are present the
            search starts at max(γ, β), otherwise at 1

    Returns:
        ParamResult for γ_md
    """
    settings = (settings or SearchSettings()).with_deadline()
    require_order_within(g, settings.max_vertices)
    require_connected(g)
    if g.n < 2:
        raise GraphError("dominant metric dimension needs at least two vertices")
    dm = dm or all_pairs_distances(g)
    known = known or {}

    lower_bound = 1
    if Parameter.GAMMA in known and Parameter.BETA in known:
        lower_bound = max(known[Parameter.GAMMA].value, known[Parameter.BETA].value)

    return minimal_monotone_set(
        g.n,
        dominant_resolving_predicate(g, dm),
        lower_bound=lower_bound,
        settings=settings,
        parameter=Parameter.GAMMA_MD,
    )


def ve_dominant_edge_metric_dimension(
    g: Graph,
    settings: SearchSettings | None = None,
    dm: DistanceMatrix | None = None,
    known: Mapping[Parameter, ParamResult] | None = None,
) -> ParamResult:
    """Compute γ_emd.

    The exact γ_ve and β_e are computed first (or taken from known) and the
    search starts at their maximum.

    Args:
        g: Connected graph with at least one edge
        settings: Search limits
        dm: Precomputed distances of g
        known: Already computed results to reuse

    Returns:
        ParamResult for γ_emd
    """
    settings = (settings or SearchSettings()).with_deadline()
    require_order_within(g, settings.max_vertices)
    require_connected(g)
    if g.m == 0:
        raise GraphError("γ_emd needs at least one edge")
    dm = dm or all_pairs_distances(g)
    known = known or {}

    gamma_ve = known.get(Parameter.GAMMA_VE) or ve_domination_number(g, settings, dm)
    beta_e = known.get(Parameter.BETA_E) or edge_metric_dimension(g, settings, dm)
    lower_bound = max(gamma_ve.value, beta_e.value)

    return minimal_monotone_set(
        g.n,
        ve_dominant_edge_resolving_predicate(g, dm),
        lower_bound=lower_bound,
        settings=settings,
        parameter=Parameter.GAMMA_EMD,
    )


def applicable_parameters(g: Graph) -> list[Parameter]:
    """Parameters defined on g: edge parameters need an edge, β and γ_md two vertices."""
    applicable = []
    for parameter in PARAMETER_ORDER:
        if parameter.uses_edges and g.m == 0:
            continue
        if parameter in (Parameter.BETA, Parameter.GAMMA_MD) and g.n < 2:
            continue
        applicable.append(parameter)
    return applicable


def compute_parameters(
    g: Graph,
    parameters: Iterable[Parameter],
    settings: SearchSettings | None = None,
) -> dict[Parameter, ParamResult]:
    """Compute the requested parameters, sharing distances and sub-results.

    Results come back in canonical parameter order. Sub-results needed for
    lower bounds (γ_ve and β_e for γ_emd, γ and β for γ_md) are computed
    when the combined parameter is requested but returned only if requested.
    All searches of one call share a single deadline, so the time budget
    bounds the whole call.

    Raises:
        GraphError: If g is disconnected or a parameter is undefined on g
        BudgetExceededError: If any search exceeds the time budget
    """
    settings = (settings or SearchSettings()).with_deadline()
    requested = set(parameters)
    require_order_within(g, settings.max_vertices)

    needed = set(requested)
    if Parameter.GAMMA_EMD in requested:
        needed |= {Parameter.GAMMA_VE, Parameter.BETA_E}
    if Parameter.GAMMA_MD in requested:
        needed |= {Parameter.GAMMA, Parameter.BETA}

    undefined = needed - set(applicable_parameters(g))
    if undefined:
        names = ", ".join(sorted(str(p) for p in undefined))
        raise GraphError(f"{names} undefined on a graph with n={g.n}, m={g.m}")

    dm = all_pairs_distances(g) if needed & _METRIC_PARAMETERS or g.connected else None
    results: dict[Parameter, ParamResult] = {}
    for parameter in PARAMETER_ORDER:
        if parameter not in needed:
            continue
        if parameter is Parameter.BETA:
            results[parameter] = metric_dimension(g, settings, dm)
        elif parameter is Parameter.BETA_E:
            results[parameter] = edge_metric_dimension(g, settings, dm)
        elif parameter is Parameter.GAMMA:
            results[parameter] = domination_number(g, settings)
        elif parameter is Parameter.GAMMA_VE:
            results[parameter] = ve_domination_number(g, settings, dm)
        elif parameter is Parameter.GAMMA_MD:
            results[parameter] = dominant_metric_dimension(g, settings, dm, results)
        else:
            results[parameter] = ve_dominant_edge_metric_dimension(
                g, settings, dm, results
            )
        logger.info(
            "Computed %s = %d",
            parameter,
            results[parameter].value,
            extra={
                "parameter": str(parameter),
                "value": results[parameter].value,
                "combinations": results[parameter].stats.combinations_examined,
            },
        )

    return {p: results[p] for p in PARAMETER_ORDER if p in requested}
