from fractions import Fraction
from math import ceil

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cubegeo import (
    CubeSubgraph,
    Edge,
    antipode,
    average_degree,
    hamming_distance,
    induced_subgraph,
    make_subgraph,
    max_hamming_pair,
)
from cubegeo.core import MAX_DIMENSION

from oracles import induced_edge_pairs, max_pairwise_distance


def square_edges():
    return [(0b00, 0b01), (0b00, 0b10), (0b01, 0b11), (0b10, 0b11)]


class TestEdge:
    def test_between(self):
        assert Edge.between(0b101, 0b100) == Edge(0b100, 0)
        assert Edge.between(0b100, 0b101) == Edge(0b100, 0)

    def test_between_rejects_non_adjacent(self):
        with pytest.raises(ValueError):
            Edge.between(0b00, 0b11)
        with pytest.raises(ValueError):
            Edge.between(5, 5)

    def test_endpoints(self):
        e = Edge(0b010, 2)
        assert e.endpoints() == (0b010, 0b110)
        assert e.other(0b110) == 0b010


class TestMakeSubgraph:
    def test_full_square(self):
        g = make_subgraph(2, [0, 1, 2, 3], square_edges())
        assert len(g.edges) == 4
        assert g.vertices == (0, 1, 2, 3)

    def test_isolated_vertex(self):
        g = make_subgraph(3, [0], [])
        assert g.vertices == (0,) and g.edges == ()

    def test_rejects_distance_2_edge(self):
        with pytest.raises(ValueError):
            make_subgraph(2, [0b00, 0b11], [(0b00, 0b11)])

    def test_rejects_vertex_overflow(self):
        with pytest.raises(ValueError):
            make_subgraph(2, [4], [])
        with pytest.raises(ValueError):
            make_subgraph(MAX_DIMENSION + 1, [0], [])

    def test_rejects_missing_endpoint(self):
        with pytest.raises(ValueError):
            make_subgraph(2, [0, 1], [(1, 3)])

    def test_accepts_edge_objects_and_dedupes(self):
        g = make_subgraph(2, [0, 1], [Edge(0, 0), (0, 1), (1, 0)])
        assert g.edges == (Edge(0, 0),)

    def test_rejects_non_canonical_edge(self):
        with pytest.raises(ValueError):
            make_subgraph(2, [0, 1], [Edge(1, 0)])

    def test_structural_equality(self):
        g1 = make_subgraph(2, [3, 0, 1, 2], reversed(square_edges()))
        g2 = make_subgraph(2, [0, 1, 2, 3], square_edges())
        assert g1 == g2


class TestInducedSubgraph:
    def test_full_square(self):
        assert len(induced_subgraph(2, [0, 1, 2, 3]).edges) == 4

    def test_even_weight_layer_has_no_edges(self):
        g = induced_subgraph(3, [0b000, 0b011, 0b101, 0b110])
        assert g.edges == ()

    def test_face_matches_pair_enumeration(self):
        verts = [0b000, 0b001, 0b010, 0b011]
        g = induced_subgraph(3, verts)
        assert len(g.edges) == len(induced_edge_pairs(3, verts)) == 4

    @given(st.sets(st.integers(0, 31)), st.sets(st.integers(0, 31)))
    @settings(max_examples=60)
    def test_monotone_and_matches_oracle(self, a, b):
        small = induced_subgraph(5, a)
        big = induced_subgraph(5, a | b)
        assert set(small.edges) <= set(big.edges)
        expected = {Edge.between(u, v) for u, v in induced_edge_pairs(5, a)}
        assert set(small.edges) == expected


class TestAverageDegree:
    def test_full_cube(self):
        assert average_degree(induced_subgraph(3, range(8))) == 3

    def test_single_edge(self):
        assert average_degree(make_subgraph(1, [0, 1], [(0, 1)])) == 1

    def test_three_vertex_path_is_exact_rational(self):
        g = make_subgraph(2, [0, 1, 3], [(0, 1), (1, 3)])
        assert average_degree(g) == Fraction(4, 3)

    def test_empty_errors(self):
        with pytest.raises(ValueError):
            average_degree(make_subgraph(2, [], []))


class TestHamming:
    def test_examples(self):
        assert hamming_distance(0b0000, 0b1111) == 4
        assert hamming_distance(7, 7) == 0
        assert hamming_distance(0b101, 0b100) == 1

    def test_antipode_examples(self):
        assert antipode(0b010, 3) == 0b101
        assert antipode(0, 1) == 1
        assert antipode(0b1111, 4) == 0b0000

    @given(st.integers(0, 255))
    def test_antipode_involution(self, x):
        assert antipode(antipode(x, 8), 8) == x
        assert hamming_distance(x, antipode(x, 8)) == 8

    def test_antipode_range_check(self):
        with pytest.raises(ValueError):
            antipode(8, 3)


class TestMaxHammingPair:
    def test_full_cube(self):
        for d in range(1, 5):
            assert max_hamming_pair(induced_subgraph(d, range(1 << d)))[2] == d

    def test_singleton(self):
        assert max_hamming_pair(make_subgraph(3, [5], []))[2] == 0

    def test_three_singletons(self):
        g = make_subgraph(3, [0b000, 0b001, 0b010], [])
        assert max_hamming_pair(g) == (0b001, 0b010, 2)

    def test_empty_errors(self):
        with pytest.raises(ValueError):
            max_hamming_pair(make_subgraph(2, [], []))

    @given(st.sets(st.integers(0, 63), min_size=1))
    @settings(max_examples=60)
    def test_matches_oracle_and_beats_average_degree(self, verts):
        g = induced_subgraph(6, verts)
        x, y, dist = max_hamming_pair(g)
        assert dist == max_pairwise_distance(verts)
        assert hamming_distance(x, y) == dist
        assert dist >= ceil(average_degree(g))


class TestInvariants:
    @given(st.sets(st.integers(0, 63)))
    @settings(max_examples=60)
    def test_degree_sum_is_twice_edges(self, verts):
        g = induced_subgraph(6, verts)
        assert sum(g.degrees.values()) == 2 * len(g.edges)

    def test_every_edge_has_unit_distance(self):
        g = induced_subgraph(4, range(16))
        assert all(hamming_distance(*e.endpoints()) == 1 for e in g.edges)
