"""Unit tests for dominant_search module."""

import pytest

from src.dominant_search import (
    applicable_parameters,
    compute_parameters,
    dominant_metric_dimension,
    is_dominant_resolving,
    is_ve_dominant_edge_resolving,
    ve_dominant_edge_metric_dimension,
)
from src.domination import is_ve_dominating
from src.families import complete_bipartite, cycle, generate, path, star, wheel
from src.graph_core import (
    DisconnectedGraphError,
    GraphError,
    all_pairs_distances,
    from_edge_list,
)
from src.models import PARAMETER_ORDER, Parameter
from src.resolvability import is_resolving
from src.verify import build_fixture_omega, build_fixture_pi


@pytest.fixture
def path4():
    return generate(path(4))


class TestPredicates:
    def test_dominant_resolving(self, path4):
        dm = all_pairs_distances(path4)
        assert is_dominant_resolving(path4, dm, [0, 2])
        assert is_dominant_resolving(path4, dm, [0, 3])
        assert not is_dominant_resolving(path4, dm, [0])

    def test_ve_dominant_edge_resolving(self, path4):
        dm = all_pairs_distances(path4)
        assert is_ve_dominant_edge_resolving(path4, dm, [0, 1])
        # Resolves every edge but misses 2-3.
        assert not is_ve_dominant_edge_resolving(path4, dm, [0])
        # Ve-dominates but gives 0-1 and 1-2 the same code.
        assert not is_ve_dominant_edge_resolving(path4, dm, [1])

    def test_disconnected_rejected(self):
        g = from_edge_list(4, [(0, 1), (2, 3)])
        with pytest.raises(DisconnectedGraphError):
            is_dominant_resolving(g, None, [0, 2])

    def test_c5_opposite_pair_is_ve_dominant_edge_resolving(self):
        c5 = generate(cycle(5))
        assert is_ve_dominant_edge_resolving(c5, all_pairs_distances(c5), [0, 3])

    def test_c8_antipodal_pair_fails_to_resolve(self):
        c8 = generate(cycle(8))
        dm = all_pairs_distances(c8)
        # Every edge is ve-dominated, but 0-1 and 7-0 share the code (0, 3).
        assert not is_ve_dominant_edge_resolving(c8, dm, [0, 4])
        assert is_ve_dominating(c8, [0, 4], dm)

    def test_wheel_hub_completes_the_rim_pattern(self):
        # Vertex 0 is the hub, rim vertex y_j is vertex j.
        w10 = generate(wheel(10))
        assert is_dominant_resolving(w10, all_pairs_distances(w10), [0, 2, 4, 7, 9])
        w11 = generate(wheel(11))
        dm = all_pairs_distances(w11)
        # The rim pattern resolves W_{1,11} but leaves y_11 undominated.
        assert is_resolving(w11, dm, [2, 4, 7, 9])
        assert not is_dominant_resolving(w11, dm, [2, 4, 7, 9])
        assert is_dominant_resolving(w11, dm, [0, 2, 4, 7, 9])


class TestCombinedParameters:
    def test_path_values(self, path4):
        gamma_md = dominant_metric_dimension(path4)
        gamma_emd = ve_dominant_edge_metric_dimension(path4)
        assert (gamma_md.value, gamma_md.witness) == (2, (0, 2))
        assert (gamma_emd.value, gamma_emd.witness) == (2, (0, 1))

    def test_known_results_raise_the_starting_size(self, path4):
        known = compute_parameters(path4, [Parameter.GAMMA, Parameter.BETA])
        result = dominant_metric_dimension(path4, known=known)
        # Starting at max(gamma, beta) = 2 skips the four singletons.
        assert result.stats.combinations_examined == 2

    def test_edge_free_graph_rejected(self):
        with pytest.raises(GraphError):
            ve_dominant_edge_metric_dimension(from_edge_list(1, []))

    @pytest.mark.parametrize(
        ("spec", "parameter", "value", "witness"),
        [
            (wheel(6), Parameter.GAMMA_EMD, 5, (1, 2, 3, 4, 5)),
            (star(4), Parameter.GAMMA_MD, 4, (0, 1, 2, 3)),
            (complete_bipartite(3, 3), Parameter.GAMMA_MD, 4, (0, 1, 3, 4)),
        ],
    )
    def test_published_family_values(self, spec, parameter, value, witness):
        result = compute_parameters(generate(spec), [parameter])[parameter]
        assert (result.value, result.witness) == (value, witness)

    def test_fixture_omega(self):
        g = build_fixture_omega()
        results = compute_parameters(g, PARAMETER_ORDER)
        values = {str(p): r.value for p, r in results.items()}
        assert values == {
            "beta": 5,
            "beta_e": 5,
            "gamma": 5,
            "gamma_ve": 1,
            "gamma_md": 6,
            "gamma_emd": 6,
        }
        dm = all_pairs_distances(g)
        assert is_dominant_resolving(g, dm, results[Parameter.GAMMA_MD].witness)
        assert is_ve_dominant_edge_resolving(
            g, dm, results[Parameter.GAMMA_EMD].witness
        )

    def test_fixture_pi(self):
        results = compute_parameters(build_fixture_pi(), PARAMETER_ORDER)
        values = {str(p): r.value for p, r in results.items()}
        assert values == {
            "beta": 4,
            "beta_e": 4,
            "gamma": 2,
            "gamma_ve": 1,
            "gamma_md": 4,
            "gamma_emd": 4,
        }


class TestComputeParameters:
    def test_canonical_order_and_all_values(self, path4):
        results = compute_parameters(path4, reversed(PARAMETER_ORDER))
        assert list(results) == list(PARAMETER_ORDER)
        assert [r.value for r in results.values()] == [1, 1, 2, 1, 2, 2]

    def test_helpers_are_not_returned(self, path4):
        results = compute_parameters(path4, [Parameter.GAMMA_EMD])
        assert list(results) == [Parameter.GAMMA_EMD]

    def test_domination_on_disconnected_graph(self):
        g = from_edge_list(4, [(0, 1), (2, 3)])
        results = compute_parameters(g, [Parameter.GAMMA])
        assert results[Parameter.GAMMA].value == 2

    def test_metric_parameter_on_disconnected_graph(self):
        g = from_edge_list(4, [(0, 1), (2, 3)])
        with pytest.raises(DisconnectedGraphError):
            compute_parameters(g, [Parameter.BETA])

    def test_undefined_parameter_named(self):
        with pytest.raises(GraphError, match="beta_e"):
            compute_parameters(from_edge_list(1, []), [Parameter.BETA_E])

    def test_applicable_parameters(self):
        assert applicable_parameters(from_edge_list(1, [])) == [Parameter.GAMMA]
        assert applicable_parameters(from_edge_list(2, [(0, 1)])) == list(
            PARAMETER_ORDER
        )
        assert Parameter.BETA_E not in applicable_parameters(from_edge_list(2, []))
