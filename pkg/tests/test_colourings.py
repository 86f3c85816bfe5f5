from fractions import Fraction
from math import ceil

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cubegeo import (
    AntipodalWitness,
    Colour,
    Edge,
    EdgeColouring,
    antipodal_edge,
    antipode,
    derive_A_from_B,
    derive_B_from_A,
    find_monochromatic_antipodal_geodesic,
    find_monochromatic_antipodal_path,
    find_one_change_antipodal_geodesic,
    is_antipodal,
    lift_to_antipodal,
    min_colour_changes_antipodal,
    monochromatic_half_geodesic,
    random_antipodal_colouring,
    random_colouring,
    validate_witness,
)
from cubegeo.colourings import (
    all_edges,
    antipodal_colouring_from_index,
    antipodal_pair_count,
    colouring_from_index,
    edge_count,
    restrict_to_bottom,
)

from oracles import colour_changes, is_monochromatic, min_changes_simple_paths

RED, BLUE = Colour.RED, Colour.BLUE


def all_red(n):
    return EdgeColouring.constant(n, RED)


class TestAntipodalEdge:
    def test_example(self):
        assert antipodal_edge(Edge(0b00, 0), 2) == Edge(0b10, 0)

    def test_involution(self):
        for n in (2, 3, 4):
            for e in all_edges(n):
                assert antipodal_edge(antipodal_edge(e, n), n) == e

    def test_n1_self_antipodal(self):
        assert antipodal_edge(Edge(0, 0), 1) == Edge(0, 0)

    def test_rejects_foreign_edge(self):
        with pytest.raises(ValueError):
            antipodal_edge(Edge(0, 3), 2)


class TestEdgeColouring:
    def test_total_edge_count(self):
        for n in (1, 2, 3, 4):
            assert len(list(all_edges(n))) == edge_count(n) == n * (1 << (n - 1))

    def test_from_pairs_roundtrip(self):
        c = random_colouring(3, 5)
        again = EdgeColouring.from_pairs(3, list(c.pairs()))
        assert again == c

    def test_from_pairs_requires_totality(self):
        pairs = list(all_red(2).pairs())[:-1]
        with pytest.raises(ValueError):
            EdgeColouring.from_pairs(2, pairs)

    def test_from_pairs_rejects_duplicates(self):
        pairs = list(all_red(2).pairs())
        with pytest.raises(ValueError):
            EdgeColouring.from_pairs(2, pairs + [pairs[0]])

    def test_colour_of_validates(self):
        c = all_red(2)
        with pytest.raises(ValueError):
            c.colour_of(Edge(1, 0))  # non-canonical
        with pytest.raises(ValueError):
            c.colour_of(Edge(0, 2))

    def test_direction_split(self):
        c = EdgeColouring.direction_split(3)
        for e in all_edges(3):
            expected = BLUE if e.dir == 2 else RED
            assert c.colour_of(e) is expected


class TestIsAntipodal:
    def test_constructed_antipodal(self):
        assert is_antipodal(random_antipodal_colouring(2, 0))

    def test_all_red_is_not(self):
        assert not is_antipodal(all_red(3))

    def test_direction_split_is_not(self):
        assert not is_antipodal(EdgeColouring.direction_split(3))

    def test_n1_always_false(self):
        assert not is_antipodal(EdgeColouring(1, 0))
        assert not is_antipodal(EdgeColouring(1, 1))


class TestRandomColourings:
    def test_antipodal_by_construction_and_seeded(self):
        for seed in range(10):
            c = random_antipodal_colouring(4, seed)
            assert is_antipodal(c)
        assert random_antipodal_colouring(4, 3) == random_antipodal_colouring(4, 3)
        assert random_antipodal_colouring(4, 3) != random_antipodal_colouring(4, 4)

    def test_pair_count_n3(self):
        assert antipodal_pair_count(3) == 6
        seen = {antipodal_colouring_from_index(3, i) for i in range(64)}
        assert len(seen) == 64
        assert all(is_antipodal(c) for c in seen)

    def test_requires_n2(self):
        with pytest.raises(ValueError):
            random_antipodal_colouring(1, 0)

    def test_general_seeded(self):
        assert random_colouring(5, 9) == random_colouring(5, 9)
        assert random_colouring(5, 9) != random_colouring(5, 10)

    def test_index_enumeration_bounds(self):
        with pytest.raises(ValueError):
            antipodal_colouring_from_index(3, 64)
        with pytest.raises(ValueError):
            colouring_from_index(2, 16)


class TestMonoPath:
    def test_all_red_has_witness(self):
        w = find_monochromatic_antipodal_path(all_red(3))
        assert w is not None and w.kind == "mono-path"
        validate_witness(w, all_red(3))

    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    def test_direction_split_has_none(self, n):
        assert find_monochromatic_antipodal_path(EdgeColouring.direction_split(n)) is None

    def test_all_antipodal_n3(self):
        for i in range(64):
            c = antipodal_colouring_from_index(3, i)
            w = find_monochromatic_antipodal_path(c)
            assert w is not None
            validate_witness(w, c)


class TestMonoGeodesic:
    def test_planted_witness_is_found(self):
        # colour one specific 0 -> 7 geodesic red, everything else blue
        plant = [0b000, 0b001, 0b011, 0b111]
        planted = {Edge.between(u, v) for u, v in zip(plant, plant[1:])}
        c = EdgeColouring.from_pairs(
            3,
            [
                (e.lo, e.dir, RED if e in planted else BLUE)
                for e in all_edges(3)
            ],
        )
        w = find_monochromatic_antipodal_geodesic(c)
        assert w is not None
        validate_witness(w, c)

    def test_direction_split_has_none(self):
        assert find_monochromatic_antipodal_geodesic(EdgeColouring.direction_split(4)) is None

    def test_all_antipodal_n3(self):
        for i in range(64):
            c = antipodal_colouring_from_index(3, i)
            w = find_monochromatic_antipodal_geodesic(c)
            assert w is not None and w.kind == "mono-geodesic"
            validate_witness(w, c)

    def test_cap(self):
        with pytest.raises(ValueError):
            find_monochromatic_antipodal_geodesic(all_red(4), max_n=3)


class TestOneChangeGeodesic:
    def test_direction_split_single_change(self):
        c = EdgeColouring.direction_split(4)
        w = find_one_change_antipodal_geodesic(c)
        assert w is not None
        validate_witness(w, c)
        assert colour_changes(c, w.vertices) <= 1

    def test_all_red_zero_changes(self):
        c = all_red(3)
        w = find_one_change_antipodal_geodesic(c)
        assert w is not None
        assert colour_changes(c, w.vertices) == 0

    def test_sampled_general_colourings_n3(self):
        for i in range(0, 4096, 37):
            c = colouring_from_index(3, i)
            w = find_one_change_antipodal_geodesic(c)
            assert w is not None
            validate_witness(w, c)


class TestMinColourChanges:
    def test_all_red(self):
        value, w = min_colour_changes_antipodal(all_red(3))
        assert value == 0
        validate_witness(w, all_red(3))

    @pytest.mark.parametrize("n", [3, 4, 5])
    def test_direction_split(self, n):
        c = EdgeColouring.direction_split(n)
        value, w = min_colour_changes_antipodal(c)
        assert value == 1
        validate_witness(w, c)

    @given(st.integers(0, 4095))
    @settings(max_examples=40, deadline=None)
    def test_matches_simple_path_oracle_n3(self, index):
        c = colouring_from_index(3, index)
        value, w = min_colour_changes_antipodal(c)
        oracle = min(
            min_changes_simple_paths(c, x, x ^ 7) for x in range(4)
        )
        assert value == oracle
        validate_witness(w, c)
        assert len(set(w.vertices)) == len(w.vertices)  # simple path


class TestHalfGeodesic:
    def test_all_red_q4_spans_cube(self):
        p = monochromatic_half_geodesic(all_red(4))
        assert p.length == 4

    def test_direction_split_n5(self):
        c = EdgeColouring.direction_split(5)
        p = monochromatic_half_geodesic(c)
        assert p.length >= 3
        assert is_monochromatic(c, p.vertices)

    @given(st.integers(0, 10_000))
    @settings(max_examples=40, deadline=None)
    def test_random_colourings_n6(self, seed):
        c = random_colouring(6, seed)
        p = monochromatic_half_geodesic(c)
        assert p.length >= 3
        assert is_monochromatic(c, p.vertices)
        assert len(set(p.directions)) == p.length

    def test_n1(self):
        p = monochromatic_half_geodesic(EdgeColouring(1, 1))
        assert p.length == 1


class TestLift:
    @given(st.integers(0, 4095))
    @settings(max_examples=30, deadline=None)
    def test_lift_is_antipodal_and_restricts(self, index):
        c = colouring_from_index(3, index)
        lifted = lift_to_antipodal(c)
        assert lifted.n == 4
        assert is_antipodal(lifted)
        assert restrict_to_bottom(lifted) == c

    def test_all_red_n2_frozen_rule(self):
        lifted = lift_to_antipodal(all_red(2))
        # top subcube edges are forced opposite: all blue
        for e in all_edges(2):
            assert lifted.colour_of(Edge(e.lo | 4, e.dir)) is BLUE
            assert lifted.colour_of(e) is RED
        # new-direction pairs have equal parity at n=2: smaller endpoint red
        assert lifted.colour_of(Edge(0b00, 2)) is RED
        assert lifted.colour_of(Edge(0b11, 2)) is BLUE
        assert lifted.colour_of(Edge(0b01, 2)) is RED
        assert lifted.colour_of(Edge(0b10, 2)) is BLUE


class TestDeriveConstructions:
    def test_b_from_a_all_red_n2(self):
        c = all_red(2)
        w = derive_B_from_A(c)
        assert w.kind == "one-change-geodesic"
        validate_witness(w, c)

    @given(st.integers(0, 4095))
    @settings(max_examples=40, deadline=None)
    def test_b_from_a_structural(self, index):
        c = colouring_from_index(3, index)
        w = derive_B_from_A(c)
        validate_witness(w, c)
        assert colour_changes(c, w.vertices) <= 1

    def test_a_from_b_all_64_antipodal_n3(self):
        for i in range(64):
            c = antipodal_colouring_from_index(3, i)
            w = derive_A_from_B(c)
            assert w.kind == "mono-geodesic"
            validate_witness(w, c)
            assert is_monochromatic(c, w.vertices)

    def test_a_from_b_zero_change_returned_unchanged(self):
        hits = 0
        for i in range(64):
            c = antipodal_colouring_from_index(3, i)
            found = find_one_change_antipodal_geodesic(c)
            if colour_changes(c, found.vertices) == 0:
                w = derive_A_from_B(c)
                assert w.vertices == found.vertices
                hits += 1
        assert hits > 0

    def test_a_from_b_requires_antipodal(self):
        with pytest.raises(ValueError):
            derive_A_from_B(all_red(3))

    def test_concatenation_directions_partition(self):
        for i in (5, 21, 40):
            c = antipodal_colouring_from_index(3, i)
            w = derive_A_from_B(c)
            dirs = [(u ^ v).bit_length() - 1 for u, v in zip(w.vertices, w.vertices[1:])]
            assert sorted(dirs) == [0, 1, 2]


class TestWitnessValidation:
    def test_rejects_wrong_pair(self):
        w = AntipodalWitness("mono-path", (0, 1), (0, 2))
        with pytest.raises(ValueError):
            validate_witness(w, all_red(2))

    def test_rejects_colour_mismatch(self):
        c = EdgeColouring.direction_split(2)
        w = AntipodalWitness("mono-path", (0b00, 0b01, 0b11), (0b00, 0b11))
        with pytest.raises(ValueError):
            validate_witness(w, c)

    def test_rejects_unknown_kind(self):
        w = AntipodalWitness("rainbow", (0b00, 0b01, 0b11), (0b00, 0b11))
        with pytest.raises(ValueError):
            validate_witness(w, all_red(2))

    def test_witness_antipodal_image_flips_colour(self):
        for i in (3, 17, 33):
            c = antipodal_colouring_from_index(3, i)
            w = find_monochromatic_antipodal_geodesic(c)
            image = tuple(antipode(v, 3) for v in w.vertices)
            cols = {c.colour_between(u, v) for u, v in zip(w.vertices, w.vertices[1:])}
            icols = {c.colour_between(u, v) for u, v in zip(image, image[1:])}
            assert len(cols) == 1 and len(icols) == 1
            assert cols != icols
