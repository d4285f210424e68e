from math import comb

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dslpm.graph_core import (
    Bipartition,
    Graph,
    GraphError,
    ParseError,
    build_g2,
    build_g3,
    build_g4,
    build_g5,
    build_gamma,
    build_split_family,
    complement,
    complete,
    complete_bipartite,
    cycle,
    disjoint_union,
    empty_graph,
    is_connected,
    join,
    parse_edge_list,
    parse_graph6,
    path,
    to_edge_list,
    to_graph6,
    two_coloring,
)
from dslpm.matching import odd_components

from conftest import graphs, to_nx


def degrees(g):
    return [g.degree(v) for v in range(g.order)]


def bfs_distance(g, a, b):
    return nx.shortest_path_length(to_nx(g), a, b)


class TestBuildingBlocks:
    def test_complete(self):
        assert complete(1).edge_count() == 0
        assert complete(4).edge_count() == 6
        assert degrees(complete(3)) == [2, 2, 2]

    def test_empty(self):
        assert empty_graph(2).edge_count() == 0
        assert empty_graph(1) == complete(1)
        assert complement(empty_graph(5)) == complete(5)

    @pytest.mark.parametrize("build", [complete, empty_graph])
    def test_zero_order_rejected(self, build):
        with pytest.raises(GraphError):
            build(0)

    def test_join_examples(self):
        star = join(complete(1), empty_graph(3))
        assert star == build_g4(4)
        assert sorted(degrees(star)) == [1, 1, 1, 3]
        assert join(complete(2), complete(2)) == complete(4)
        k23 = join(empty_graph(2), empty_graph(3))
        assert k23.edge_count() == 6
        assert k23 == complete_bipartite(2, 3)

    def test_join_puts_left_operand_first(self):
        g = join(complete(2), empty_graph(3))
        assert g.has_edge(0, 1)
        assert not g.has_edge(2, 3)

    def test_disjoint_union(self):
        g = disjoint_union(complete(3), empty_graph(2))
        assert (g.order, g.edge_count()) == (5, 3)
        h = disjoint_union(cycle(4), empty_graph(1))
        assert h.order == 5 and h.degree(4) == 0
        assert not is_connected(disjoint_union(complete(2), complete(2)))

    def test_complement(self):
        assert complement(complete(4)) == empty_graph(4)
        c4c = complement(cycle(4))
        assert nx.is_isomorphic(to_nx(c4c), to_nx(disjoint_union(complete(2), complete(2))))

    def test_graph_invariants_enforced(self):
        with pytest.raises(GraphError):
            Graph.from_edges(3, [(0, 0)])
        with pytest.raises(GraphError):
            Graph.from_edges(3, [(0, 3)])
        with pytest.raises(GraphError):
            Graph(2, (0b10, 0))  # asymmetric

    @given(graphs(max_n=8), graphs(max_n=8))
    def test_join_edge_count(self, g, h):
        assert join(g, h).edge_count() == g.edge_count() + h.edge_count() + g.order * h.order

    @given(graphs(max_n=12))
    def test_complement_involution(self, g):
        assert complement(complement(g)) == g
        assert g.edge_count() + complement(g).edge_count() == comb(g.order, 2)

    @given(graphs(max_n=10))
    def test_is_connected_matches_networkx(self, g):
        assert is_connected(g) == nx.is_connected(to_nx(g))


class TestFamilies:
    def test_split_family(self):
        assert build_split_family(1, [1, 1, 1]) == join(complete(1), empty_graph(3))
        assert build_split_family(3, [5]) == complete(8)
        g = build_split_family(2, [3, 1, 1])
        assert g.order == 7
        assert odd_components(g, [0, 1]) == 3
        assert is_connected(g)
        with pytest.raises(GraphError):
            build_split_family(2, [])

    def test_g2(self):
        assert build_g2(4, 1, 3) == join(complete(1), empty_graph(3))
        assert build_g2(8, 1, 3) == build_g4(8)
        g = build_g2(10, 2, 4)
        assert g.order == 10
        isolated = [7, 8, 9]
        for a in isolated:
            for b in isolated:
                if a != b:
                    assert bfs_distance(g, a, b) == 2
        with pytest.raises(GraphError):
            build_g2(4, 2, 4)

    @pytest.mark.parametrize("n,s,q", [(10, 2, 4), (12, 1, 3), (12, 3, 5), (16, 2, 6), (9, 1, 2)])
    def test_g2_edge_count(self, n, s, q):
        assert build_g2(n, s, q).edge_count() == comb(s, 2) + comb(n - s - q + 1, 2) + s * (n - s)

    def test_g3_is_g2_with_q_s_plus_2(self):
        assert build_g3(12, 2) == build_g2(12, 2, 4)

    def test_g4(self):
        g = build_g4(6)
        assert g.order == 6
        assert odd_components(g, [0]) == 3
        for bad in (3, 5, 2):
            with pytest.raises(GraphError):
                build_g4(bad)

    def test_g5(self):
        assert build_g5(1) == join(complete(1), empty_graph(3))
        g = build_g5(2)
        assert g.order == 6
        assert bfs_distance(g, 2, 5) == 2

    def test_gamma(self):
        gg = build_gamma(3, 2, 1)
        g, b = gg
        assert g.order == 6 and g.edge_count() == 9 - 2 * 2
        assert is_connected(g)
        assert b.left == frozenset({0, 1, 2})
        # S = {0, 1}, Y - N(S) = {4, 5}
        assert bfs_distance(g, 0, 4) == 3
        with pytest.raises(GraphError):
            build_gamma(3, 3, 1)
        with pytest.raises(GraphError):
            build_gamma(3, 1, 1)

    @pytest.mark.parametrize("n", range(3, 9))
    def test_gamma_connected_over_range(self, n):
        for s in range(2, n):
            for k in range(1, s):
                gg = build_gamma(n, s, k)
                assert is_connected(gg.graph)
                assert gg.graph.edge_count() == n * n - s * (n - k)


class TestGraph6:
    def test_hand_encoded(self):
        assert parse_graph6("C~") == complete(4)
        assert parse_graph6("A_") == empty_graph(2).__class__.from_edges(2, [(0, 1)])
        assert parse_graph6("A?") == empty_graph(2)
        assert to_graph6(parse_graph6("C~")) == "C~"

    def test_header_accepted(self):
        assert parse_graph6(">>graph6<<C~") == complete(4)

    def test_matches_networkx_encoding(self):
        g = build_gamma(5, 3, 2).graph
        expected = nx.to_graph6_bytes(to_nx(g), header=False).decode().strip()
        assert to_graph6(g) == expected

    def test_extended_size_prefix(self):
        g = path(70)
        text = nx.to_graph6_bytes(to_nx(g), header=False).decode().strip()
        assert text[0] == "~"
        assert parse_graph6(text) == g

    @pytest.mark.parametrize("text,offset", [("C~~", 1), ("C", 1), ("A`", 1), ("C~ ", None), ("", 0)])
    def test_malformed(self, text, offset):
        if text.strip() != text:
            assert parse_graph6(text) == complete(4)  # surrounding whitespace is stripped
            return
        with pytest.raises(ParseError) as info:
            parse_graph6(text)
        assert info.value.offset == offset

    def test_out_of_range_byte(self):
        with pytest.raises(ParseError) as info:
            parse_graph6("C!")
        assert info.value.offset == 1

    @given(graphs(max_n=30))
    @settings(max_examples=200)
    def test_round_trip(self, g):
        assert parse_graph6(to_graph6(g)) == g
        assert to_graph6(g) == nx.to_graph6_bytes(to_nx(g), header=False).decode().strip()


class TestEdgeList:
    def test_examples(self):
        g = parse_edge_list("4\n0 1\n2 3")
        assert g.edges() == [(0, 1), (2, 3)]
        with pytest.raises(ParseError, match="self-loop"):
            parse_edge_list("2\n0 0")
        assert parse_edge_list("3\n0 1\n1 0").edge_count() == 1

    @pytest.mark.parametrize("text", ["3\n0 5", "3\n0 x", "x\n0 1", "3\n0 1 2", ""])
    def test_errors(self, text):
        with pytest.raises(ParseError):
            parse_edge_list(text)

    @given(graphs(max_n=12))
    def test_round_trip(self, g):
        assert parse_edge_list(to_edge_list(g)) == g


class TestBipartition:
    def test_two_coloring(self):
        b = two_coloring(cycle(6))
        assert b.left == frozenset({0, 2, 4})
        assert two_coloring(cycle(5)) is None

    def test_validation(self):
        g = complete_bipartite(2, 2)
        Bipartition.of(g, [0, 1])
        with pytest.raises(GraphError):
            Bipartition.of(g, [0, 2])
        with pytest.raises(GraphError):
            Bipartition.of(g, [0, 1], [1, 2, 3])

    @given(st.integers(1, 6), st.integers(1, 6))
    def test_complete_bipartite_sides(self, a, b):
        g = complete_bipartite(a, b)
        part = two_coloring(g)
        assert {len(part.left), len(part.right)} == {a, b}
