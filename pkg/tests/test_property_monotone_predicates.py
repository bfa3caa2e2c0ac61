"""Property-based tests for the set predicates behind every parameter.

**Property 4: Superset Closure**
**Validates: adding a vertex never breaks domination, resolution or their combinations**

**Property 5: Exact Minimum**
**Validates: each returned witness satisfies its predicate and no smaller set does**
"""

from itertools import combinations

from hypothesis import given, settings
from hypothesis import strategies as st

from src.dominant_search import (
    compute_parameters,
    dominant_resolving_predicate,
    ve_dominant_edge_resolving_predicate,
)
from src.domination import DominatingPredicate, VeDominatingPredicate
from src.families import random_tree
from src.graph_core import all_pairs_distances, from_edge_list, vertex_edge_matrix
from src.models import PARAMETER_ORDER, Parameter
from src.resolvability import EdgeResolvingPredicate, ResolvingPredicate


@st.composite
def connected_graphs(draw, min_n: int = 2, max_n: int = 7):
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    tree = random_tree(n, seed=draw(st.integers(min_value=0, max_value=2**16)))
    spare = [pair for pair in combinations(range(n), 2) if not tree.has_edge(*pair)]
    extra = draw(st.sets(st.sampled_from(spare))) if spare else set()
    return from_edge_list(n, [*tree.edges, *extra])


def _predicates(g):
    dm = all_pairs_distances(g)
    return {
        Parameter.BETA: ResolvingPredicate.from_distances(dm),
        Parameter.BETA_E: EdgeResolvingPredicate.from_graph(g, dm),
        Parameter.GAMMA: DominatingPredicate.from_graph(g),
        Parameter.GAMMA_VE: VeDominatingPredicate.from_graph(g, dm),
        Parameter.GAMMA_MD: dominant_resolving_predicate(g, dm),
        Parameter.GAMMA_EMD: ve_dominant_edge_resolving_predicate(g, dm),
    }


def _definitional(g, parameter, vertices):
    """Straight-from-the-definition check, independent of the bitmask predicates."""
    dm = all_pairs_distances(g)
    ve = vertex_edge_matrix(g, dm)
    vertex_codes = {tuple(dm[w, y] for w in vertices) for y in range(g.n)}
    edge_codes = {tuple(int(ve[w, j]) for w in vertices) for j in range(g.m)}
    resolving = len(vertex_codes) == g.n
    edge_resolving = len(edge_codes) == g.m
    dominating = all(any(dm[w, y] <= 1 for w in vertices) for y in range(g.n))
    ve_dominating = all(any(ve[w, j] <= 1 for w in vertices) for j in range(g.m))
    return {
        Parameter.BETA: resolving,
        Parameter.BETA_E: edge_resolving,
        Parameter.GAMMA: dominating,
        Parameter.GAMMA_VE: ve_dominating,
        Parameter.GAMMA_MD: dominating and resolving,
        Parameter.GAMMA_EMD: ve_dominating and edge_resolving,
    }[parameter]


# **Property 4: Superset Closure**
# **Validates: adding a vertex never breaks domination, resolution or their combinations**
@given(data=st.data(), g=connected_graphs())
def test_supersets_keep_the_property(data, g):
    chosen = data.draw(st.sets(st.integers(min_value=0, max_value=g.n - 1)))
    extra = data.draw(st.integers(min_value=0, max_value=g.n - 1))
    smaller = tuple(sorted(chosen))
    larger = tuple(sorted(chosen | {extra}))
    for parameter, predicate in _predicates(g).items():
        if predicate(smaller):
            assert predicate(larger), parameter


# **Property 4: Superset Closure**
# **Validates: adding a vertex never breaks domination, resolution or their combinations**
@given(data=st.data(), g=connected_graphs())
def test_predicates_agree_with_definitions(data, g):
    vertices = st.integers(min_value=0, max_value=g.n - 1)
    chosen = tuple(sorted(data.draw(st.sets(vertices, min_size=1))))
    for parameter, predicate in _predicates(g).items():
        assert predicate(chosen) == _definitional(g, parameter, chosen), parameter


# **Property 5: Exact Minimum**
# **Validates: each returned witness satisfies its predicate and no smaller set does**
@settings(deadline=None, max_examples=40)
@given(g=connected_graphs(max_n=6))
def test_witnesses_are_minimum(g):
    results = compute_parameters(g, PARAMETER_ORDER)
    for parameter, result in results.items():
        assert len(result.witness) == result.value
        assert _definitional(g, parameter, result.witness), parameter
        if result.value == 1:
            continue
        smaller = combinations(range(g.n), result.value - 1)
        assert not any(_definitional(g, parameter, s) for s in smaller), parameter


# **Property 5: Exact Minimum**
# **Validates: each returned witness satisfies its predicate and no smaller set does**
@settings(deadline=None, max_examples=40)
@given(g=connected_graphs(max_n=6))
def test_combined_parameters_sit_above_their_parts(g):
    v = {p: r.value for p, r in compute_parameters(g, PARAMETER_ORDER).items()}
    assert max(v[Parameter.GAMMA], v[Parameter.BETA]) <= v[Parameter.GAMMA_MD]
    assert v[Parameter.GAMMA_MD] <= v[Parameter.GAMMA] + v[Parameter.BETA]
    assert max(v[Parameter.GAMMA_VE], v[Parameter.BETA_E]) <= v[Parameter.GAMMA_EMD]
    assert v[Parameter.GAMMA_EMD] <= v[Parameter.GAMMA_VE] + v[Parameter.BETA_E]
