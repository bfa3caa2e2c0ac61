"""Closed-form predictions, the tree legs formula and the bound suite.

Every prediction arm carries its range of validity; a query outside that
range returns OutOfDomain instead of extrapolating. The exact solvers are
the ground truth these predictions are compared against.
"""

import logging
from collections.abc import Callable, Mapping
from dataclasses import dataclass
from itertools import combinations

import networkx as nx

from src.families import FamilyKind, FamilySpec, generate
from src.graph_core import DistanceMatrix, Graph, all_pairs_distances
from src.models import BoundCheck, Parameter
from src.utils import ceil_div, ceil_log2

logger = logging.getLogger(__name__)


class TreeShapeError(ValueError):
    """Raised when the legs formula receives a path or a non-tree."""


@dataclass(frozen=True)
class Prediction:
    """A closed-form value together with where it comes from.

    Attributes:
        parameter: Predicted parameter
        family: Family instance the value is claimed for
        value: Claimed value
        validity: Range of n for which the claim is stated
        source: Short name of the claim
    """

    parameter: Parameter
    family: FamilySpec
    value: int
    validity: str
    source: str


@dataclass(frozen=True)
class OutOfDomain:
    """No closed form is claimed for this (parameter, family) pair."""

    parameter: Parameter
    family: FamilySpec
    reason: str


# Parameters with a published closed form, per family.
THEOREM_PARAMETERS: dict[FamilyKind, tuple[Parameter, ...]] = {
    FamilyKind.PATH: (
        Parameter.BETA,
        Parameter.BETA_E,
        Parameter.GAMMA,
        Parameter.GAMMA_VE,
        Parameter.GAMMA_MD,
        Parameter.GAMMA_EMD,
    ),
    FamilyKind.CYCLE: (
        Parameter.BETA,
        Parameter.BETA_E,
        Parameter.GAMMA,
        Parameter.GAMMA_VE,
        Parameter.GAMMA_MD,
        Parameter.GAMMA_EMD,
    ),
    FamilyKind.COMPLETE: (
        Parameter.BETA,
        Parameter.BETA_E,
        Parameter.GAMMA_VE,
        Parameter.GAMMA_MD,
        Parameter.GAMMA_EMD,
    ),
    FamilyKind.COMPLETE_BIPARTITE: (
        Parameter.BETA,
        Parameter.BETA_E,
        Parameter.GAMMA_VE,
        Parameter.GAMMA_MD,
        Parameter.GAMMA_EMD,
    ),
    FamilyKind.STAR: (
        Parameter.BETA,
        Parameter.BETA_E,
        Parameter.GAMMA,
        Parameter.GAMMA_VE,
        Parameter.GAMMA_MD,
        Parameter.GAMMA_EMD,
    ),
    FamilyKind.WHEEL: (
        Parameter.BETA,
        Parameter.BETA_E,
        Parameter.GAMMA,
        Parameter.GAMMA_VE,
        Parameter.GAMMA_MD,
        Parameter.GAMMA_EMD,
    ),
    FamilyKind.FAN: (
        Parameter.BETA,
        Parameter.BETA_E,
        Parameter.GAMMA,
        Parameter.GAMMA_VE,
        Parameter.GAMMA_MD,
        Parameter.GAMMA_EMD,
    ),
    FamilyKind.GRID2: (Parameter.BETA_E, Parameter.GAMMA_VE, Parameter.GAMMA_EMD),
    FamilyKind.PRISM2: (Parameter.BETA_E, Parameter.GAMMA_VE, Parameter.GAMMA_EMD),
    FamilyKind.CORONA: (Parameter.BETA_E, Parameter.GAMMA_VE, Parameter.GAMMA_EMD),
    FamilyKind.JOIN: (Parameter.BETA_E, Parameter.GAMMA_VE, Parameter.GAMMA_EMD),
    FamilyKind.TREE: (Parameter.BETA, Parameter.BETA_E),
}

_FAMILY_NAMES = {
    FamilyKind.COMPLETE_BIPARTITE: "complete-bipartite",
}


def theorem_id(parameter: Parameter, family: FamilySpec) -> str:
    """Stable check identifier such as "cycle-gamma-emd"."""
    family_name = _FAMILY_NAMES.get(family.kind, str(family.kind))
    return f"{family_name}-{parameter.value.replace('_', '-')}"


# An arm returns (value, validity, source) or None when n is outside validity.
Arm = tuple[int, str, str] | None


def _path(parameter: Parameter, n: int) -> Arm:
    if parameter is Parameter.GAMMA:
        return ceil_div(n, 3), "n>=1", "path domination"
    if n < 2:
        return None
    if parameter in (Parameter.BETA, Parameter.BETA_E):
        return 1, "n>=2", "path metric dimensions"
    if parameter is Parameter.GAMMA_VE:
        return (n + 2) // 4, "n>=2", "path ve-domination"
    if parameter is Parameter.GAMMA_MD:
        if n <= 4:
            return {2: 1, 3: 2, 4: 2}[n], "2<=n<=4", "path dominant metric dimension"
        return ceil_div(n, 3), "n>4", "path dominant metric dimension"
    if n <= 3:
        return 1, "n=2,3", "path gamma_emd"
    if n <= 5:
        return 2, "n=4,5", "path gamma_emd"
    return (n + 2) // 4, "n>=6", "path gamma_emd"


def _cycle(parameter: Parameter, n: int) -> Arm:
    if parameter is Parameter.GAMMA:
        return ceil_div(n, 3), "n>=3", "cycle domination"
    if parameter in (Parameter.BETA, Parameter.BETA_E):
        return 2, "n>=3", "cycle metric dimensions"
    if parameter is Parameter.GAMMA_VE:
        return (n + 3) // 4, "n>=3", "cycle ve-domination"
    if parameter is Parameter.GAMMA_MD:
        if n <= 5:
            return 2, "3<=n<=5", "cycle dominant metric dimension"
        if n <= 7:
            return 3, "n=6,7", "cycle dominant metric dimension"
        return ceil_div(n, 3), "n>=8", "cycle dominant metric dimension"
    if n <= 7:
        return 2, "3<=n<=7", "cycle gamma_emd"
    if n == 8:
        return 3, "n=8", "cycle gamma_emd"
    return (n + 3) // 4, "n>=9", "cycle gamma_emd"


def _complete(parameter: Parameter, n: int) -> Arm:
    if n < 2:
        return None
    if parameter is Parameter.GAMMA_VE:
        return 1, "n>=2", "complete ve-domination"
    if parameter is Parameter.GAMMA:
        return None
    return n - 1, "n>=2", f"complete {parameter}"


def _complete_bipartite(parameter: Parameter, n: int, m: int) -> Arm:
    if parameter is Parameter.GAMMA_VE:
        return 1, "n,m>=1", "complete bipartite ve-domination"
    if parameter is Parameter.GAMMA or n < 2 or m < 2:
        return None
    return n + m - 2, "n,m>=2", f"complete bipartite {parameter}"


def _star(parameter: Parameter, n: int) -> Arm:
    if parameter in (Parameter.GAMMA, Parameter.GAMMA_VE):
        return 1, "n>=1", f"star {parameter}"
    if parameter is Parameter.GAMMA_MD:
        if n < 2:
            return None
        return n, "n>=2", "star dominant metric dimension"
    if n < 3:
        return None
    return n - 1, "n>=3", f"star {parameter}"


def _wheel_or_fan(kind: FamilyKind, parameter: Parameter, n: int) -> Arm:
    name = str(kind)
    if parameter in (Parameter.GAMMA, Parameter.GAMMA_VE):
        return 1, "n>=1", f"{name} {parameter}"
    if parameter is Parameter.BETA_E:
        small = 4 if kind is FamilyKind.WHEEL else 3
        if n <= small:
            return n, f"n<={small}", f"{name} edge metric dimension"
        return n - 1, f"n>={small + 1}", f"{name} edge metric dimension"
    if parameter is Parameter.GAMMA_EMD:
        if n < 5:
            return None
        return n - 1, "n>=5", f"{name} gamma_emd"
    if n < 7:
        return None
    beta = (2 * n + 2) // 5
    if parameter is Parameter.BETA:
        return beta, "n>=7", f"{name} metric dimension"
    if n % 5 in (1, 3):
        return beta + 1, "n>=7, n=1,3 mod 5", f"{name} dominant metric dimension"
    return beta, "n>=7, n=0,2,4 mod 5", f"{name} dominant metric dimension"


def _grid2(parameter: Parameter, n: int) -> Arm:
    if parameter is Parameter.BETA_E:
        if n == 1:
            return 1, "n=1", "grid edge metric dimension"
        return 2, "n>=2", "grid edge metric dimension"
    if parameter is Parameter.GAMMA_VE:
        return ceil_div(n, 3), "n>=1", "grid ve-domination"
    if n <= 6:
        return (1, 2, 3, 3, 3, 3)[n - 1], "1<=n<=6", "grid gamma_emd"
    return ceil_div(n, 3), "n>=7", "grid gamma_emd"


def _prism2(parameter: Parameter, n: int) -> Arm:
    if parameter is Parameter.BETA_E:
        return 3, "n>=3", "prism edge metric dimension"
    if n < 4:
        return None
    size_ninth = ceil_div(3 * n, 9)
    if parameter is Parameter.GAMMA_VE:
        return size_ninth, "n>=4", "prism ve-domination"
    if n <= 9:
        return size_ninth + 1, "4<=n<=9", "prism gamma_emd"
    return size_ninth, "n>=10", "prism gamma_emd"


def _is_complete(g: Graph) -> bool:
    return g.m == g.n * (g.n - 1) // 2


def _corona(parameter: Parameter, g: Graph, h: Graph) -> Arm:
    if not g.connected or h.n < 2:
        return None
    p, q = g.n, h.n
    if parameter is Parameter.GAMMA_VE:
        return p, "g connected, |V(h)|>=2", "corona ve-domination"
    return p * (q - 1), "g connected, |V(h)|>=2", f"corona {parameter}"


def _join(parameter: Parameter, g: Graph, h: Graph) -> Arm:
    if not (g.connected and h.connected):
        return None
    if parameter is Parameter.GAMMA_VE:
        value = 1 if _is_complete(g) or _is_complete(h) else 2
        return value, "both operands connected", "join ve-domination"
    return g.n + h.n - 1, "both operands connected", f"join {parameter}"


def _tree(parameter: Parameter, family: FamilySpec) -> Arm:
    t = generate(family)
    if t.n < 2:
        return None
    if t.is_path():
        return 1, "path-shaped tree", f"tree {parameter}"
    return tree_legs_edge_metric_dimension(t), "non-path tree", f"tree {parameter}"


def predict(parameter: Parameter, family: FamilySpec) -> Prediction | OutOfDomain:
    """Closed-form value of a parameter on a family member.

    Args:
        parameter: Parameter to predict
        family: Family instance

    Returns:
        Prediction inside the stated validity range, otherwise OutOfDomain
    """
    if parameter not in THEOREM_PARAMETERS.get(family.kind, ()):
        return OutOfDomain(parameter, family, f"no closed form for {family.kind}")

    kind = family.kind
    arm: Arm
    if kind is FamilyKind.PATH:
        arm = _path(parameter, family.n)
    elif kind is FamilyKind.CYCLE:
        arm = _cycle(parameter, family.n)
    elif kind is FamilyKind.COMPLETE:
        arm = _complete(parameter, family.n)
    elif kind is FamilyKind.COMPLETE_BIPARTITE:
        arm = _complete_bipartite(parameter, *family.params)
    elif kind is FamilyKind.STAR:
        arm = _star(parameter, family.n)
    elif kind in (FamilyKind.WHEEL, FamilyKind.FAN):
        arm = _wheel_or_fan(kind, parameter, family.n)
    elif kind is FamilyKind.GRID2:
        arm = _grid2(parameter, family.n)
    elif kind is FamilyKind.PRISM2:
        arm = _prism2(parameter, family.n)
    elif kind is FamilyKind.TREE:
        arm = _tree(parameter, family)
    else:
        left, right = (generate(op) for op in family.operands)
        arm = (_corona if kind is FamilyKind.CORONA else _join)(parameter, left, right)

    if arm is None:
        return OutOfDomain(parameter, family, f"{family} outside the stated range")
    value, validity, source = arm
    return Prediction(parameter, family, value, validity, source)


def predict_relation(family: FamilySpec) -> str | None:
    """Published relation between γ_md and γ_emd, as "<", "=", ">" or ">=".

    Returns None where no relation is claimed.
    """
    n = family.n
    kind = family.kind
    if kind is FamilyKind.PATH and n >= 2:
        if n == 3:
            return ">"
        if n in (2, 4, 5):
            return "="
        return ">="
    if kind is FamilyKind.CYCLE:
        if n in (3, 4, 5, 8):
            return "="
        if n in (6, 7):
            return ">"
        return ">="
    if kind is FamilyKind.STAR and n >= 3:
        return ">"
    if kind is FamilyKind.COMPLETE and n >= 2:
        return "="
    if kind is FamilyKind.COMPLETE_BIPARTITE and min(family.params) >= 2:
        return "="
    if kind in (FamilyKind.WHEEL, FamilyKind.FAN) and n >= 6:
        return "<"
    return None


def _is_path_component(component: nx.Graph) -> bool:
    if component.number_of_nodes() == 1:
        return True
    return nx.is_tree(component) and max(d for _, d in component.degree()) <= 2


def leg_counts(t: Graph) -> list[int]:
    """l_v for every vertex: legs are path components of t - v hanging from an end."""
    tree = t.to_networkx()
    counts = []
    for v in range(t.n):
        rest = tree.copy()
        rest.remove_node(v)
        legs = 0
        for nodes in nx.connected_components(rest):
            component = rest.subgraph(nodes)
            (attachment,) = (u for u in tree.neighbors(v) if u in nodes)
            if _is_path_component(component) and component.degree(attachment) <= 1:
                legs += 1
        counts.append(legs)
    return counts


def tree_legs_edge_metric_dimension(t: Graph) -> int:
    """Σ (l_v − 1) over vertices with more than one leg.

    Args:
        t: Tree that is not a path

    Returns:
        The common value of β and β_e on t

    Raises:
        TreeShapeError: If t is not a tree or is a path
    """
    if not t.is_tree():
        raise TreeShapeError(f"legs formula needs a tree, got n={t.n}, m={t.m}")
    if t.is_path():
        raise TreeShapeError("legs formula does not apply to paths")
    return sum(legs - 1 for legs in leg_counts(t) if legs > 1)


# Bound suite ------------------------------------------------------------

GENERAL_BOUND_IDS: tuple[str, ...] = (
    "sandwich-emd-lower",
    "sandwich-emd-upper",
    "sandwich-md-lower",
    "sandwich-md-upper",
    "gamma-emd-floor",
    "gamma-emd-ceiling",
    "gamma-ve-le-gamma",
    "beta-e-le-n-minus-gamma-ve",
    "gamma-ve-degree-floor",
    "gamma-ve-degree-ceiling",
    "gamma-ve-one-iff-radius2-independent",
    "beta-e-log-regular",
    "beta-e-path-iff",
    "beta-e-universal",
    "beta-e-two-universal",
    "beta-e-full-implies-diam2",
    "beta-e-full-iff-common-neighbour",
    "gamma-emd-universal",
    "gamma-emd-two-universal",
)

TREE_BOUND_IDS: tuple[str, ...] = (
    "tree-gamma-ve-floor",
    "tree-gamma-ve-ceiling",
    "tree-gamma-emd-floor",
    "tree-gamma-emd-ceiling",
    "tree-comparability",
    "tree-legs",
)

BOUND_IDS: tuple[str, ...] = GENERAL_BOUND_IDS + TREE_BOUND_IDS


def _lower(bound_id: str, bound: int, value: int, statement: str) -> BoundCheck:
    return BoundCheck(bound_id, value >= bound, value - bound, statement)


def _upper(bound_id: str, bound: int, value: int, statement: str) -> BoundCheck:
    return BoundCheck(bound_id, value <= bound, bound - value, statement)


def _claim(bound_id: str, holds: bool, statement: str) -> BoundCheck:
    return BoundCheck(bound_id, holds, 0 if holds else -1, statement)


class _BoundContext:
    """Graph facts shared by the bound evaluators, computed on demand."""

    def __init__(self, g: Graph, values: Mapping[Parameter, int]):
        self.g = g
        self.values = values
        self._dm: DistanceMatrix | None = None

    @property
    def dm(self) -> DistanceMatrix:
        if self._dm is None:
            self._dm = all_pairs_distances(self.g)
        return self._dm

    def has(self, *parameters: Parameter) -> bool:
        return all(p in self.values for p in parameters)

    def universal_count(self) -> int:
        return sum(1 for v in range(self.g.n) if self.g.degree(v) == self.g.n - 1)

    def radius2_independent_centre(self) -> bool:
        """Some x has eccentricity at most 2 and no edge inside its distance-2 layer."""
        dm = self.dm
        for x in range(self.g.n):
            if dm.eccentricity(x) > 2:
                continue
            if all(dm[x, a] != 2 or dm[x, b] != 2 for a, b in self.g.edges):
                return True
        return False

    def every_pair_has_full_common_neighbour(self) -> bool:
        """Each pair has a common neighbour adjacent to all of the pair's non-mutual neighbours."""
        adj = self.g.adjacency
        for a, b in combinations(range(self.g.n), 2):
            non_mutual = (adj[a] ^ adj[b]) - {a, b}
            if not any(non_mutual <= adj[u] for u in adj[a] & adj[b]):
                return False
        return True

    def every_edge_on_triangle(self) -> bool:
        g = self.g
        return all(g.adjacency[a] & g.adjacency[b] for a, b in g.edges)


def _sandwich(ctx: _BoundContext) -> list[BoundCheck]:
    v = ctx.values
    checks = []
    if ctx.has(Parameter.GAMMA_VE, Parameter.BETA_E, Parameter.GAMMA_EMD):
        ve, be, emd = v[Parameter.GAMMA_VE], v[Parameter.BETA_E], v[Parameter.GAMMA_EMD]
        checks.append(
            _lower("sandwich-emd-lower", max(ve, be), emd, "max(γ_ve, β_e) ≤ γ_emd")
        )
        checks.append(_upper("sandwich-emd-upper", ve + be, emd, "γ_emd ≤ γ_ve + β_e"))
    if ctx.has(Parameter.GAMMA, Parameter.BETA, Parameter.GAMMA_MD):
        gm, b, md = v[Parameter.GAMMA], v[Parameter.BETA], v[Parameter.GAMMA_MD]
        checks.append(_lower("sandwich-md-lower", max(gm, b), md, "max(γ, β) ≤ γ_md"))
        checks.append(_upper("sandwich-md-upper", gm + b, md, "γ_md ≤ γ + β"))
    return checks


def _order_bounds(ctx: _BoundContext) -> list[BoundCheck]:
    g, v = ctx.g, ctx.values
    checks = []
    if ctx.has(Parameter.GAMMA_EMD):
        emd = v[Parameter.GAMMA_EMD]
        checks.append(
            _lower("gamma-emd-floor", (g.n + 2) // 4, emd, "⌊(n+2)/4⌋ ≤ γ_emd")
        )
        checks.append(_upper("gamma-emd-ceiling", g.n - 1, emd, "γ_emd ≤ n − 1"))
    if ctx.has(Parameter.GAMMA_VE, Parameter.GAMMA):
        checks.append(
            _upper("gamma-ve-le-gamma", v[Parameter.GAMMA], v[Parameter.GAMMA_VE], "γ_ve ≤ γ")
        )
    if ctx.has(Parameter.GAMMA_VE, Parameter.BETA_E):
        checks.append(
            _upper(
                "beta-e-le-n-minus-gamma-ve",
                g.n - v[Parameter.GAMMA_VE],
                v[Parameter.BETA_E],
                "β_e ≤ n − γ_ve",
            )
        )
    return checks


def _degree_bounds(ctx: _BoundContext) -> list[BoundCheck]:
    g, v = ctx.g, ctx.values
    if not ctx.has(Parameter.GAMMA_VE):
        return []
    ve = v[Parameter.GAMMA_VE]
    big, small = g.max_degree, g.min_degree
    # 2γ_ve ≤ 2m − 2Δ − Δ(δ−1) + 2 keeps the half-integer bound in integers
    doubled = 2 * g.m - 2 * big - big * (small - 1) + 2
    return [
        _lower("gamma-ve-degree-floor", ceil_div(g.m, big * big), ve, "⌈m/Δ²⌉ ≤ γ_ve"),
        BoundCheck(
            "gamma-ve-degree-ceiling",
            2 * ve <= doubled,
            (doubled - 2 * ve) // 2,
            "γ_ve ≤ m − Δ − Δ(δ−1)/2 + 1",
        ),
        _claim(
            "gamma-ve-one-iff-radius2-independent",
            (ve == 1) == ctx.radius2_independent_centre(),
            "γ_ve = 1 ⇔ some x has eccentricity ≤ 2 and an independent distance-2 layer",
        ),
    ]


def _edge_dimension_structure(ctx: _BoundContext) -> list[BoundCheck]:
    g, v = ctx.g, ctx.values
    checks = []
    if ctx.has(Parameter.BETA_E):
        be = v[Parameter.BETA_E]
        if g.max_degree == g.min_degree >= 1:
            r = g.max_degree
            checks.append(
                _lower("beta-e-log-regular", 1 + ceil_log2(r), be, "r-regular ⇒ β_e ≥ 1 + ⌈log₂ r⌉")
            )
        checks.append(_claim("beta-e-path-iff", (be == 1) == g.is_path(), "β_e = 1 ⇔ path"))
        universal = ctx.universal_count()
        if universal >= 1:
            checks.append(
                _claim("beta-e-universal", be in (g.n - 2, g.n - 1), "Δ = n − 1 ⇒ β_e ∈ {n−2, n−1}")
            )
        if universal >= 2:
            checks.append(
                _claim("beta-e-two-universal", be == g.n - 1, "two universal vertices ⇒ β_e = n − 1")
            )
        if g.n >= 3:
            holds = be != g.n - 1 or (ctx.dm.diameter <= 2 and ctx.every_edge_on_triangle())
            checks.append(
                _claim(
                    "beta-e-full-implies-diam2",
                    holds,
                    "β_e = n − 1 ⇒ diam ≤ 2 and every edge on a triangle",
                )
            )
            checks.append(
                _claim(
                    "beta-e-full-iff-common-neighbour",
                    (be == g.n - 1) == ctx.every_pair_has_full_common_neighbour(),
                    "β_e = n − 1 ⇔ every pair has a common neighbour adjacent to "
                    "all its non-mutual neighbours",
                )
            )
    if ctx.has(Parameter.GAMMA_EMD):
        emd = v[Parameter.GAMMA_EMD]
        universal = ctx.universal_count()
        if universal >= 1:
            checks.append(
                _claim("gamma-emd-universal", emd in (g.n - 2, g.n - 1), "Δ = n − 1 ⇒ γ_emd ∈ {n−2, n−1}")
            )
        if universal >= 2:
            checks.append(
                _claim("gamma-emd-two-universal", emd == g.n - 1, "two universal vertices ⇒ γ_emd = n − 1")
            )
    return checks


def _tree_bounds(ctx: _BoundContext) -> list[BoundCheck]:
    g, v = ctx.g, ctx.values
    if not g.is_tree() or g.n < 2:
        return []
    quarter = ceil_div(g.m, 4)
    checks = []
    if ctx.has(Parameter.GAMMA_VE):
        ve = v[Parameter.GAMMA_VE]
        checks.append(_lower("tree-gamma-ve-floor", quarter, ve, "⌈m/4⌉ ≤ γ_ve(T)"))
        checks.append(
            _upper("tree-gamma-ve-ceiling", g.n - g.max_degree, ve, "γ_ve(T) ≤ n − Δ")
        )
    if ctx.has(Parameter.GAMMA_EMD):
        emd = v[Parameter.GAMMA_EMD]
        checks.append(_lower("tree-gamma-emd-floor", quarter, emd, "⌈m/4⌉ ≤ γ_emd(T)"))
        checks.append(_upper("tree-gamma-emd-ceiling", g.n - 1, emd, "γ_emd(T) ≤ n − 1"))
        if ctx.has(Parameter.GAMMA_MD):
            checks.append(
                _lower(
                    "tree-comparability", emd, v[Parameter.GAMMA_MD], "γ_md(T) ≥ γ_emd(T)"
                )
            )
    if ctx.has(Parameter.BETA, Parameter.BETA_E) and not g.is_path():
        legs = tree_legs_edge_metric_dimension(g)
        checks.append(
            _claim(
                "tree-legs",
                v[Parameter.BETA] == v[Parameter.BETA_E] == legs,
                f"β = β_e = Σ(l_v − 1) = {legs}",
            )
        )
    return checks


_EVALUATORS: tuple[Callable[[_BoundContext], list[BoundCheck]], ...] = (
    _sandwich,
    _order_bounds,
    _degree_bounds,
    _edge_dimension_structure,
    _tree_bounds,
)


def bound_checks(
    g: Graph,
    computed: Mapping[Parameter, int],
    bound_ids: tuple[str, ...] | frozenset[str] | None = None,
) -> list[BoundCheck]:
    """Evaluate every applicable bound on g.

    A bound is applicable when the parameters it mentions are in computed
    and its structural premise (regular, universal vertex, tree) holds.

    Args:
        g: Connected graph with at least one edge
        computed: Exact parameter values
        bound_ids: Restrict to these ids; None means all

    Returns:
        BoundCheck per applicable bound, in suite order
    """
    ctx = _BoundContext(g, computed)
    checks = [check for evaluate in _EVALUATORS for check in evaluate(ctx)]
    if bound_ids is not None:
        selected = set(bound_ids)
        checks = [check for check in checks if check.bound_id in selected]
    for check in checks:
        if not check.holds:
            logger.debug("Bound %s fails (slack %d)", check.bound_id, check.slack)
    return checks
