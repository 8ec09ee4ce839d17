"""Rate-region enumeration, membership tests, corner points, boundary."""

import itertools
import math

import numpy as np
import pytest

import swbounds as sw
from conftest import binary_entropy, dsbs, uniform_bits

H_QUARTER = binary_entropy(0.25)


class TestEnumerateInequalities:
    def test_two_independent_bits(self):
        ineqs = sw.enumerate_inequalities(uniform_bits(2))
        assert [i.subset for i in ineqs] == [(1,), (2,), (1, 2)]
        assert np.allclose([i.lower_bound for i in ineqs], [1.0, 1.0, 2.0], atol=1e-12)

    def test_three_sources_give_seven_inequalities(self):
        ineqs = sw.enumerate_inequalities(uniform_bits(3))
        assert len(ineqs) == 7
        expected = {
            (1,), (2,), (3,),
            (1, 2), (2, 3), (1, 3),
            (1, 2, 3),
        }
        assert {i.subset for i in ineqs} == expected

    def test_dsbs_bounds(self):
        ineqs = sw.enumerate_inequalities(dsbs(0.25))
        by_subset = {i.subset: i.lower_bound for i in ineqs}
        assert math.isclose(by_subset[(1,)], H_QUARTER, abs_tol=1e-12)
        assert math.isclose(by_subset[(2,)], H_QUARTER, abs_tol=1e-12)
        assert math.isclose(by_subset[(1, 2)], 1.0 + H_QUARTER, abs_tol=1e-12)

    def test_full_subset_bound_is_joint_entropy(self, corpus):
        for src in corpus[:10]:
            ineqs = sw.enumerate_inequalities(src)
            full = ineqs[-1]
            assert full.subset == tuple(range(1, src.n_vars + 1))
            joint = sw.joint_entropy(src, full.subset)
            assert abs(full.lower_bound - joint) <= 1e-12

    def test_enumeration_cap(self):
        src = sw.JointSource((2,) * 17, np.full(2**17, 2.0**-17))
        with pytest.raises(ValueError, match="at most 16"):
            sw.enumerate_inequalities(src)

    def test_nested_subsets_have_monotone_bounds(self, corpus):
        # contrapolymatroid sanity: growing the subset never lowers the bound
        for src in corpus[:8]:
            ineqs = {i.subset: i.lower_bound for i in sw.enumerate_inequalities(src)}
            for small, large in itertools.combinations(ineqs, 2):
                if set(small) <= set(large):
                    assert ineqs[small] <= ineqs[large] + 1e-9


class TestIsAdmissible:
    def test_tight_sum_point_is_admissible(self):
        verdict = sw.is_admissible(uniform_bits(2), (1.0, 1.0))
        assert verdict.admissible and not verdict.violations

    def test_violations_are_named(self):
        verdict = sw.is_admissible(uniform_bits(2), (0.5, 1.6))
        assert not verdict
        assert [v.subset for v in verdict.violations] == [(1,), (1, 2)]

    def test_dsbs_corner_is_on_the_boundary(self):
        assert sw.is_admissible(dsbs(0.25), (1.0, H_QUARTER))

    def test_length_mismatch_rejected(self):
        with pytest.raises(ValueError, match="expected 2 rates"):
            sw.is_admissible(uniform_bits(2), (1.0, 1.0, 1.0))

    def test_negative_rates_rejected(self):
        with pytest.raises(ValueError, match="nonnegative"):
            sw.is_admissible(uniform_bits(2), (-0.1, 2.0))

    def test_scaling_up_preserves_admissibility(self, corpus):
        rng = np.random.default_rng(11)
        for src in corpus[:15]:
            rates = sw.corner_point(src, None)
            bumped = rates + rng.uniform(0.0, 2.0, size=rates.size)
            assert sw.is_admissible(src, bumped)


class TestCornerPoint:
    def test_independent_bits(self):
        assert np.allclose(sw.corner_point(uniform_bits(2)), [1.0, 1.0], atol=1e-12)

    def test_dsbs_identity_ordering(self):
        rates = sw.corner_point(dsbs(0.25), (1, 2))
        assert math.isclose(rates[0], 1.0, abs_tol=1e-12)
        assert math.isclose(rates[1], H_QUARTER, abs_tol=1e-12)

    def test_dsbs_reversed_ordering(self):
        rates = sw.corner_point(dsbs(0.25), (2, 1))
        assert math.isclose(rates[0], H_QUARTER, abs_tol=1e-12)
        assert math.isclose(rates[1], 1.0, abs_tol=1e-12)

    def test_rejects_non_permutation(self):
        with pytest.raises(ValueError, match="permutation"):
            sw.corner_point(uniform_bits(2), (2, 3))

    def test_every_ordering_lands_on_the_dominant_face(self, corpus):
        for src in corpus[:12]:
            joint = sw.joint_entropy(src, range(1, src.n_vars + 1))
            for ordering in itertools.permutations(range(1, src.n_vars + 1)):
                rates = sw.corner_point(src, ordering)
                assert abs(rates.sum() - joint) <= 1e-10
                assert sw.is_admissible(src, rates)


class TestTwoNodeBoundary:
    def test_dsbs_corners(self):
        boundary = sw.two_node_boundary(dsbs(0.25))
        assert np.allclose(boundary.corner_a, (1.0, H_QUARTER), atol=1e-12)
        assert np.allclose(boundary.corner_b, (H_QUARTER, 1.0), atol=1e-12)
        assert math.isclose(boundary.sum_rate, 1.0 + H_QUARTER, abs_tol=1e-12)
        assert math.isclose(boundary.r1_asymptote, H_QUARTER, abs_tol=1e-12)
        assert math.isclose(boundary.r2_asymptote, H_QUARTER, abs_tol=1e-12)

    def test_independent_pair_degenerates_to_a_point(self):
        boundary = sw.two_node_boundary(uniform_bits(2))
        assert boundary.vertices == ((1.0, 1.0),)

    def test_fully_dependent_pair(self):
        src = sw.JointSource((2, 2), [0.5, 0.0, 0.0, 0.5])
        boundary = sw.two_node_boundary(src)
        assert boundary.corner_a == (1.0, 0.0)
        assert boundary.corner_b == (0.0, 1.0)

    def test_requires_two_sources(self):
        with pytest.raises(ValueError, match="2 sources"):
            sw.two_node_boundary(uniform_bits(3))

    def test_corners_are_admissible(self, corpus):
        for src in corpus[:40]:
            if src.n_vars != 2:
                continue
            boundary = sw.two_node_boundary(src)
            assert sw.is_admissible(src, boundary.corner_a)
            assert sw.is_admissible(src, boundary.corner_b)
