import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cubegeo import (
    SetFamily,
    UniformFamily,
    compress_element,
    feder_subi_intersecting_check,
    full_compress,
    induced_subgraph,
    is_downset,
    is_t_intersecting,
    iterated_shadow,
    katona_check,
    level_profile,
    max_hamming_pair,
    shadow,
)
from cubegeo.harness import random_t_intersecting_family

from oracles import max_pairwise_distance

# Members are bitmasks: element i of the ground set is bit i.
E1, E2, E3 = 0b001, 0b010, 0b100

families = st.builds(
    lambda n, sets: SetFamily.of(n, {s & ((1 << n) - 1) for s in sets}),
    st.integers(2, 6),
    st.sets(st.integers(0, 63), max_size=24),
)


class TestCompressElement:
    def test_downset_is_fixed(self):
        fam = SetFamily.of(2, [0, E1, E2, E1 | E2])
        for i in range(2):
            assert compress_element(fam, i) == fam

    def test_singleton(self):
        assert compress_element(SetFamily.of(1, [E1]), 0) == SetFamily.of(1, [0])

    def test_spec_example(self):
        fam = SetFamily.of(2, [E1, E2, E1 | E2])
        # element 1: {2} drops to {}, {1,2} stays because {1} is present
        assert compress_element(fam, 1) == SetFamily.of(2, [0, E1, E1 | E2])

    def test_index_out_of_range(self):
        with pytest.raises(ValueError):
            compress_element(SetFamily.of(2, [E1]), 2)

    @given(families, st.integers(0, 5))
    @settings(max_examples=80)
    def test_lemma_invariants(self, fam, i):
        """Size preserved, induced edges never lost, max Hamming distance
        never grown."""
        i = i % fam.n
        comp = compress_element(fam, i)
        assert len(comp) == len(fam)
        before = induced_subgraph(fam.n, fam.sets)
        after = induced_subgraph(fam.n, comp.sets)
        assert len(after.edges) >= len(before.edges)
        if fam.sets:
            assert max_hamming_pair(after)[2] <= max_hamming_pair(before)[2]


class TestFullCompress:
    def test_single_pair_set(self):
        assert full_compress(SetFamily.of(2, [E1 | E2])) == SetFamily.of(2, [0])

    def test_downset_identity(self):
        fam = SetFamily.of(3, [0, E1, E2, E1 | E2])
        assert full_compress(fam) == fam

    def test_full_level_becomes_equal_size_downset(self):
        level = [s for s in range(1 << 5) if bin(s).count("1") == 2]
        fam = SetFamily.of(5, level)
        out = full_compress(fam)
        assert is_downset(out) and len(out) == len(fam)

    @given(families)
    @settings(max_examples=80)
    def test_output_downset_same_size_idempotent(self, fam):
        out = full_compress(fam)
        assert is_downset(out)
        assert len(out) == len(fam)
        assert full_compress(out) == out

    @given(families)
    @settings(max_examples=60)
    def test_equation_two_for_downsets(self, fam):
        """For a downset, total popcount = induced edge count: every edge
        is counted at its upper endpoint."""
        out = full_compress(fam)
        g = induced_subgraph(out.n, out.sets)
        popsum = sum(bin(a).count("1") for a in out.sets)
        profile = level_profile(out)
        assert popsum == len(g.edges)
        assert popsum == sum(k * c for k, c in enumerate(profile))


class TestIsDownset:
    def test_examples(self):
        assert is_downset(SetFamily.of(2, [0, E1, E2, E1 | E2]))
        assert not is_downset(SetFamily.of(2, [E1 | E2]))
        assert is_downset(SetFamily.of(2, [0]))
        assert is_downset(SetFamily.of(2, []))


class TestShadow:
    def test_single_pair(self):
        fam = UniformFamily.of(2, [E1 | E2])
        assert shadow(fam) == UniformFamily.of(2, [E1, E2], 1)

    def test_union_of_shadows(self):
        fam = UniformFamily.of(3, [E1 | E2, E1 | E3])
        assert set(shadow(fam).sets) == {E1, E2, E3}

    def test_empty(self):
        assert shadow(UniformFamily.of(4, [], 2)).sets == ()

    def test_zero_uniform_errors(self):
        with pytest.raises(ValueError):
            shadow(UniformFamily.of(3, [0]))

    def test_uniformity_enforced(self):
        with pytest.raises(ValueError):
            UniformFamily.of(3, [E1, E1 | E2])


class TestIteratedShadow:
    def test_identity(self):
        fam = UniformFamily.of(4, [0b0011, 0b1100])
        assert iterated_shadow(fam, 0) == fam

    def test_two_steps(self):
        fam = UniformFamily.of(3, [E1 | E2 | E3])
        assert set(iterated_shadow(fam, 2).sets) == {E1, E2, E3}

    def test_disjoint_pairs(self):
        fam = UniformFamily.of(4, [0b0011, 0b1100])
        assert set(iterated_shadow(fam, 1).sets) == {0b0001, 0b0010, 0b0100, 0b1000}

    def test_too_deep(self):
        with pytest.raises(ValueError):
            iterated_shadow(UniformFamily.of(3, [E1 | E2]), 3)


class TestTIntersecting:
    def test_examples(self):
        fam = SetFamily.of(3, [E1 | E2, E1 | E3])
        assert is_t_intersecting(fam, 1)
        assert not is_t_intersecting(fam, 2)
        assert is_t_intersecting(SetFamily.of(3, []), 5)

    def test_self_intersection_counts(self):
        # a single small member fails a large threshold via A = B
        assert not is_t_intersecting(SetFamily.of(3, [E1]), 2)

    def test_negative_threshold(self):
        with pytest.raises(ValueError):
            is_t_intersecting(SetFamily.of(2, []), -1)


class TestKatona:
    def test_example(self):
        fam = UniformFamily.of(3, [E1 | E2, E1 | E3])
        assert katona_check(fam, 1)  # shadow has 3 members >= 2

    def test_single_set_full_intersection(self):
        fam = UniformFamily.of(5, [0b10101])
        assert katona_check(fam, 3)

    def test_precondition(self):
        fam = UniformFamily.of(3, [E1 | E2, E1 | E3])
        with pytest.raises(ValueError):
            katona_check(fam, 2)

    @given(st.integers(0, 10_000))
    @settings(max_examples=60, deadline=None)
    def test_random_families(self, seed):
        n, k, t = 8, 3, 1 + seed % 3
        fam = random_t_intersecting_family(n, k, t, 12, seed)
        assert is_t_intersecting(fam, t)
        assert katona_check(fam, t)


class TestLevelProfile:
    def test_square_downset(self):
        fam = SetFamily.of(2, [0, E1, E2, E1 | E2])
        assert level_profile(fam) == (1, 2, 1)
        g = induced_subgraph(2, fam.sets)
        assert sum(k * c for k, c in enumerate(level_profile(fam))) == len(g.edges) == 4

    def test_empty_and_singleton(self):
        assert level_profile(SetFamily.of(3, [])) == (0, 0, 0, 0)
        assert level_profile(SetFamily.of(3, [0])) == (1, 0, 0, 0)


class TestFederSubiCheck:
    def test_square_downset_fails_at_2(self):
        fam = SetFamily.of(2, [0, E1, E2, E1 | E2])
        assert not feder_subi_intersecting_check(fam, 2)

    def test_trivial_singleton(self):
        assert feder_subi_intersecting_check(SetFamily.of(2, [0]), 1)

    def test_small_union(self):
        fam = SetFamily.of(3, [0, E1, E2])
        assert feder_subi_intersecting_check(fam, 3)

    def test_requires_downset(self):
        with pytest.raises(ValueError):
            feder_subi_intersecting_check(SetFamily.of(2, [E1 | E2]), 1)


class TestGenerator:
    def test_deterministic_and_valid(self):
        a = random_t_intersecting_family(10, 4, 2, 20, 7)
        b = random_t_intersecting_family(10, 4, 2, 20, 7)
        assert a == b
        assert a.k == 4 and len(a) >= 1
        assert is_t_intersecting(a, 2)

    def test_parameter_validation(self):
        with pytest.raises(ValueError):
            random_t_intersecting_family(4, 5, 1, 3, 0)
        with pytest.raises(ValueError):
            random_t_intersecting_family(4, 3, 1, 0, 0)
