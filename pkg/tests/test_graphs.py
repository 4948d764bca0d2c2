import itertools

import numpy as np
import pytest

from cutcert import graphs
from cutcert.graphs import (
    Cut,
    GraphInputError,
    cut_stats,
    design_graph,
    from_edge_list,
    parse_edge_list,
)


def test_path_construction():
    g = from_edge_list(3, [(0, 1), (1, 2)])
    assert g.n == 3
    assert g.degrees == (1, 2, 1)


def test_empty_graph():
    g = from_edge_list(2, [])
    assert g.m == 0
    assert g.degrees == (0, 0)


def test_duplicate_edges_merged():
    g = from_edge_list(4, [(0, 1), (0, 1), (2, 3)])
    assert g.m == 2


def test_reversed_duplicate_merged():
    g = from_edge_list(3, [(0, 1), (1, 0)])
    assert g.m == 1


def test_self_loop_rejected():
    with pytest.raises(GraphInputError, match=r"\(2,2\)"):
        from_edge_list(3, [(2, 2)])


def test_endpoint_out_of_range():
    with pytest.raises(GraphInputError, match="out of range"):
        from_edge_list(3, [(0, 3)])


def test_degree_sum_is_twice_edge_count():
    g = graphs.random_gnp(9, 0.4, seed=3)
    assert sum(g.degrees) == 2 * g.m


class TestCutStats:
    def test_k4_split(self):
        stats = cut_stats(graphs.complete(4), {0, 1})
        assert (stats.e_in, stats.e_out, stats.crossing) == (1, 1, 4)
        assert stats.e_min == 1

    def test_bipartite_side(self):
        stats = cut_stats(graphs.complete_bipartite(2, 2), {0, 1})
        assert (stats.e_in, stats.e_out, stats.crossing) == (0, 0, 4)

    def test_empty_side(self):
        g = graphs.random_gnp(6, 0.5, seed=0)
        stats = cut_stats(g, set())
        assert (stats.e_in, stats.e_out, stats.crossing) == (0, g.m, 0)

    def test_counts_partition_edges_exhaustively(self):
        # every cut of every small graph splits the edge set into the
        # three disjoint classes
        for seed in range(5):
            g = graphs.random_gnp(7, 0.5, seed=seed)
            for k in range(g.n + 1):
                for S in itertools.combinations(range(g.n), k):
                    stats = cut_stats(g, S)
                    assert stats.e_in + stats.e_out + stats.crossing == g.m

    def test_handshake(self):
        for seed in range(10):
            g = graphs.random_gnp(8, 0.6, seed=seed)
            rng = np.random.default_rng(seed)
            S = {v for v in range(8) if rng.random() < 0.5}
            stats = cut_stats(g, S)
            assert sum(g.degrees[v] for v in S) == 2 * stats.e_in + stats.crossing


class TestCutVector:
    def test_single_vertex(self):
        x = Cut(4, frozenset({0})).vector()
        assert np.allclose(x, [0.75, -0.25, -0.25, -0.25])

    def test_half(self):
        assert np.allclose(Cut(2, frozenset({0})).vector(), [0.5, -0.5])

    def test_full_side_is_zero(self):
        assert np.allclose(Cut(4, frozenset(range(4))).vector(), 0.0)

    def test_sums_to_zero(self):
        for k in range(1, 7):
            x = Cut(7, frozenset(range(k))).vector()
            assert abs(x.sum()) < 1e-12


class TestMatrices:
    def test_laplacian_row_sums(self):
        L = graphs.path(3).laplacian_matrix()
        assert np.allclose(L.sum(axis=1), 0.0)
        assert np.allclose(L, L.T)

    def test_laplacian_is_degree_minus_adjacency(self):
        g = graphs.random_gnp(6, 0.5, seed=1)
        D = np.diag(g.degrees)
        assert np.array_equal(g.laplacian_matrix(), D - g.adjacency_matrix())

    def test_empty_laplacian(self):
        assert np.array_equal(graphs.empty(3).laplacian_matrix(), np.zeros((3, 3)))

    def test_induced_k4_minus_vertex(self):
        sub = graphs.complete(4).induced_subgraph({0, 1, 2})
        assert sub.n == 3 and sub.m == 3

    def test_induced_preserves_adjacency(self):
        g = graphs.random_gnp(8, 0.5, seed=2)
        keep = [1, 3, 4, 6]
        sub = g.induced_subgraph(keep)
        for i, u in enumerate(keep):
            for j, v in enumerate(keep):
                if i < j:
                    assert sub.has_edge(i, j) == g.has_edge(u, v)


class TestGenerators:
    def test_star(self):
        g = graphs.star(3)
        assert g.n == 4 and g.m == 3
        assert g.degrees == (3, 1, 1, 1)

    def test_multipartite_all_singletons_is_complete(self):
        g = graphs.complete_multipartite([1, 1, 1])
        assert g.edges == graphs.complete(3).edges

    def test_multipartite_two_parts_matches_bipartite(self):
        assert (
            graphs.complete_multipartite([2, 3]).edges
            == graphs.complete_bipartite(2, 3).edges
        )

    def test_gnp_deterministic(self):
        assert graphs.random_gnp(10, 0.5, 42).edges == graphs.random_gnp(10, 0.5, 42).edges

    def test_bad_sizes(self):
        with pytest.raises(GraphInputError):
            graphs.complete_multipartite([2, 0])
        with pytest.raises(GraphInputError):
            graphs.star(0)


class TestDesignGraph:
    def test_near_pencil_complete_blocks_build_k5(self):
        from cutcert.partitions import near_pencil

        blocks = near_pencil(5).blocks
        g = design_graph(5, blocks, "complete")
        assert g.edges == graphs.complete(5).edges

    def test_all_pairs_complete_equals_complete(self):
        blocks = list(itertools.combinations(range(6), 2))
        g = design_graph(6, blocks, "complete")
        assert g.edges == graphs.complete(6).edges

    def test_trivial_block_patterns(self):
        block = [tuple(range(5))]
        assert design_graph(5, block, "star-at-first").edges == graphs.star(4).edges
        halves = design_graph(6, [tuple(range(6))], "complete-bipartite-halves")
        assert halves.edges == graphs.complete_bipartite(3, 3).edges
        assert design_graph(5, block, "empty").m == 0

    def test_invalid_blocks_rejected(self):
        with pytest.raises(GraphInputError, match="invalid block design"):
            design_graph(4, [(0, 1), (2, 3)], "complete")

    def test_unknown_pattern(self):
        with pytest.raises(GraphInputError, match="pattern"):
            design_graph(3, [(0, 1, 2)], "ladder")


class TestEdgeListFormat:
    def test_round_trip(self):
        g = graphs.random_gnp(7, 0.5, seed=9)
        assert parse_edge_list(graphs.format_edge_list(g)).edges == g.edges

    def test_comments_and_blanks(self):
        text = "# a path\n3 2\n\n0 1  # first\n1 2\n"
        assert parse_edge_list(text).degrees == (1, 2, 1)

    def test_bad_token_reports_line(self):
        with pytest.raises(GraphInputError, match="line 2"):
            parse_edge_list("3 1\n0 x\n")

    def test_edge_count_mismatch(self):
        with pytest.raises(GraphInputError, match="promises 2"):
            parse_edge_list("3 2\n0 1\n")

    def test_missing_header(self):
        with pytest.raises(GraphInputError, match="header"):
            parse_edge_list("# nothing\n")
