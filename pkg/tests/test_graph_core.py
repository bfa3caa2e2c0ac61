"""Unit tests for graph_core module."""

import io

import numpy as np
import pytest

from src.graph_core import (
    DisconnectedGraphError,
    EdgeRef,
    EdgeValidationError,
    GraphFormatError,
    SizeCapExceededError,
    all_pairs_distances,
    emit_edge_list_text,
    emit_graph6,
    from_edge_list,
    parse_edge_list_text,
    parse_graph6,
    parse_graph_text,
    require_order_within,
    vertex_edge_distance,
    vertex_edge_matrix,
)


@pytest.fixture
def path4():
    return from_edge_list(4, [(0, 1), (1, 2), (2, 3)])


@pytest.fixture
def cycle6():
    return from_edge_list(6, [(i, (i + 1) % 6) for i in range(6)])


class TestFromEdgeList:
    def test_edges_are_sorted_and_oriented(self):
        g = from_edge_list(4, [(3, 2), (1, 0), (2, 0)])
        assert g.edges == ((0, 1), (0, 2), (2, 3))
        assert g.m == 3

    def test_adjacency_and_degrees(self, path4):
        assert path4.adjacency[1] == frozenset({0, 2})
        assert path4.degree(0) == 1
        assert path4.max_degree == 2
        assert path4.min_degree == 1

    def test_connectivity_flag(self):
        assert from_edge_list(3, [(0, 1), (1, 2)]).connected
        assert not from_edge_list(3, [(0, 1)]).connected

    def test_single_vertex_is_connected(self):
        g = from_edge_list(1, [])
        assert g.connected
        assert g.m == 0

    def test_loop_rejected(self):
        with pytest.raises(EdgeValidationError, match="loop"):
            from_edge_list(3, [(1, 1)])

    def test_duplicate_rejected_in_either_orientation(self):
        with pytest.raises(EdgeValidationError, match="duplicate"):
            from_edge_list(3, [(0, 1), (1, 0)])

    def test_out_of_range_rejected(self):
        with pytest.raises(EdgeValidationError, match="outside"):
            from_edge_list(3, [(0, 3)])

    def test_tree_and_path_shape(self, path4, cycle6):
        assert path4.is_tree() and path4.is_path()
        assert not cycle6.is_tree()
        star = from_edge_list(4, [(0, 1), (0, 2), (0, 3)])
        assert star.is_tree() and not star.is_path()


class TestEdgeRefs:
    def test_edge_index_either_orientation(self, path4):
        assert path4.edge_index(2, 1) == 1
        assert path4.edge_index(1, 2) == 1

    def test_edge_index_missing_edge(self, path4):
        with pytest.raises(KeyError):
            path4.edge_index(0, 3)

    def test_edge_ref(self, path4):
        assert path4.edge_ref(2) == EdgeRef(2, (2, 3))
        assert str(path4.edge_ref(0)) == "e0(0,1)"

    def test_edge_ref_out_of_range(self, path4):
        with pytest.raises(IndexError):
            path4.edge_ref(3)


class TestDistances:
    def test_path_distances(self, path4):
        dm = all_pairs_distances(path4)
        assert dm[0, 3] == 3
        assert dm[2, 1] == 1
        assert dm.diameter == 3
        assert dm.eccentricity(1) == 2

    def test_matrix_is_read_only(self, path4):
        dm = all_pairs_distances(path4)
        with pytest.raises(ValueError):
            dm.d[0, 1] = 5

    def test_cycle_diameter(self, cycle6):
        assert all_pairs_distances(cycle6).diameter == 3

    def test_disconnected_rejected(self):
        with pytest.raises(DisconnectedGraphError):
            all_pairs_distances(from_edge_list(4, [(0, 1), (2, 3)]))

    def test_vertex_edge_distance(self, path4):
        dm = all_pairs_distances(path4)
        assert vertex_edge_distance(dm, 0, path4.edge_ref(2)) == 2
        assert vertex_edge_distance(dm, 2, path4.edge_ref(2)) == 0

    def test_vertex_edge_distance_bad_vertex(self, path4):
        dm = all_pairs_distances(path4)
        with pytest.raises(IndexError):
            vertex_edge_distance(dm, 7, path4.edge_ref(0))

    def test_vertex_edge_matrix_matches_pointwise(self, cycle6):
        dm = all_pairs_distances(cycle6)
        matrix = vertex_edge_matrix(cycle6, dm)
        assert matrix.shape == (6, 6)
        for w in range(6):
            for ref in cycle6.edge_refs():
                assert matrix[w, ref.index] == vertex_edge_distance(dm, w, ref)

    def test_vertex_edge_matrix_without_edges(self):
        g = from_edge_list(1, [])
        matrix = vertex_edge_matrix(g, all_pairs_distances(g))
        assert matrix.shape == (1, 0)
        assert matrix.dtype == np.uint8


class TestEdgeListCodec:
    def test_parse(self):
        g = parse_edge_list_text("4 3\n0 1\n1 2\n2 3\n")
        assert g.edges == ((0, 1), (1, 2), (2, 3))

    def test_parse_stream_with_blank_lines(self):
        g = parse_edge_list_text(io.StringIO("3 2\n\n0 1\n\n1 2\n"))
        assert g.m == 2

    def test_emit(self, path4):
        assert emit_edge_list_text(path4) == "4 3\n0 1\n1 2\n2 3\n"

    def test_non_canonical_input_is_normalised(self, path4):
        # Reversed endpoints, shuffled lines and no trailing newline.
        g = parse_edge_list_text("4 3\n3 2\n1 0\n2 1")
        assert g == path4
        assert emit_edge_list_text(g) == "4 3\n0 1\n1 2\n2 3\n"

    def test_reversed_duplicate_rejected(self):
        with pytest.raises(EdgeValidationError):
            parse_edge_list_text("3 2\n0 1\n1 0\n")

    def test_count_mismatch(self):
        with pytest.raises(GraphFormatError, match="declares 3 edges") as excinfo:
            parse_edge_list_text("4 3\n0 1\n1 2\n")
        assert excinfo.value.line_number == 1

    def test_bad_line_reports_line_number(self):
        with pytest.raises(GraphFormatError, match="line 3") as excinfo:
            parse_edge_list_text("3 2\n0 1\n1 x\n")
        assert excinfo.value.line_number == 3

    def test_empty_input(self):
        with pytest.raises(GraphFormatError, match="empty"):
            parse_edge_list_text("  \n")

    def test_loop_is_edge_error(self):
        with pytest.raises(EdgeValidationError):
            parse_edge_list_text("2 1\n1 1\n")


class TestGraph6Codec:
    @pytest.mark.parametrize(
        ("text", "edges"),
        [
            ("A_", ((0, 1),)),
            ("Bw", ((0, 1), (0, 2), (1, 2))),
            ("Bo", ((0, 1), (0, 2))),
            ("Cl", ((0, 1), (0, 3), (1, 2), (2, 3))),
            ("Ch", ((0, 1), (1, 2), (2, 3))),
            ("C~", ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))),
        ],
    )
    def test_decode_known_strings(self, text, edges):
        assert parse_graph6(text).edges == edges

    def test_encode_known_strings(self, path4):
        assert emit_graph6(path4) == "Ch"
        assert emit_graph6(from_edge_list(2, [(0, 1)])) == "A_"

    def test_header_and_newline_accepted(self):
        assert parse_graph6(">>graph6<<Bw\n").m == 3

    def test_bytes_accepted(self):
        assert parse_graph6(b"Bw").m == 3

    def test_nonzero_padding_rejected(self):
        with pytest.raises(GraphFormatError, match="padding"):
            parse_graph6("Bx")

    def test_wrong_length_rejected(self):
        with pytest.raises(GraphFormatError, match="bad length"):
            parse_graph6("Bww")

    def test_non_printable_rejected(self):
        with pytest.raises(GraphFormatError, match="non-printable"):
            parse_graph6("B\x01")

    def test_non_ascii_rejected(self):
        with pytest.raises(GraphFormatError):
            parse_graph6("Bé")

    def test_empty_rejected(self):
        with pytest.raises(GraphFormatError, match="empty"):
            parse_graph6("\n")

    def test_order_zero_rejected(self):
        with pytest.raises(GraphFormatError):
            parse_graph6("?")


class TestParseGraphText:
    def test_single_token_is_graph6(self):
        assert parse_graph_text("Cl\n").m == 4

    def test_multi_line_is_edge_list(self):
        assert parse_graph_text("2 1\n0 1\n").m == 1

    def test_empty(self):
        with pytest.raises(GraphFormatError):
            parse_graph_text("")


class TestSizeCap:
    def test_within_cap(self, path4):
        require_order_within(path4, 4)

    def test_over_cap(self, path4):
        with pytest.raises(SizeCapExceededError) as excinfo:
            require_order_within(path4, 3)
        assert (excinfo.value.n, excinfo.value.cap) == (4, 3)
