"""Construction and validation of joint sources."""

import math

import numpy as np
import pytest

import swbounds as sw
from conftest import uniform_bits


class TestJointSource:
    def test_uniform_fair_bit_pair_is_valid(self):
        src = sw.JointSource((2, 2), [0.25, 0.25, 0.25, 0.25])
        assert src.n_vars == 2
        assert src.alphabet_sizes == (2, 2)

    def test_rejects_unnormalized_table(self):
        with pytest.raises(ValueError, match="sums to"):
            sw.JointSource((2, 2), [0.5, 0.5, 0.5, 0.5])

    def test_rejects_wrong_table_length(self):
        with pytest.raises(ValueError, match="entries"):
            sw.JointSource((2, 3), [0.2, 0.2, 0.2, 0.2, 0.2])

    def test_rejects_negative_probability(self):
        with pytest.raises(ValueError, match="negative"):
            sw.JointSource((2,), [1.0 + 1e-9, -1e-9])

    def test_clamps_tiny_negative_noise(self):
        src = sw.JointSource((2,), [1.0, -1e-13])
        assert src.pmf[1] == 0.0

    def test_accepts_tensor_shaped_table(self):
        src = sw.JointSource((2, 2), np.full((2, 2), 0.25))
        assert src.pmf.shape == (4,)

    def test_never_renormalizes(self):
        # off by more than the tolerance must fail, not silently rescale
        with pytest.raises(ValueError):
            sw.JointSource((2,), [0.5, 0.5 + 1e-6])

    def test_size_cap(self):
        with pytest.raises(ValueError, match="cap"):
            sw.JointSource((2,) * 21, [])

    def test_pmf_is_readonly(self):
        src = sw.JointSource((2,), [0.5, 0.5])
        with pytest.raises(ValueError):
            src.pmf[0] = 1.0

    def test_rejects_nonpositive_alphabet(self):
        with pytest.raises(ValueError, match="positive"):
            sw.JointSource((2, 0), [])


class TestMarkovChain:
    def test_identity_transition_copies_the_bit(self):
        spec = sw.MarkovChainSpec([0.5, 0.5], (np.eye(2),))
        src = sw.from_markov_chain(spec)
        assert np.allclose(src.pmf, [0.5, 0.0, 0.0, 0.5])

    def test_crossover_quarter(self):
        spec = sw.MarkovChainSpec([0.5, 0.5], ([[0.75, 0.25], [0.25, 0.75]],))
        src = sw.from_markov_chain(spec)
        assert np.allclose(src.pmf, [0.375, 0.125, 0.125, 0.375], atol=1e-15)

    def test_degenerate_initial_distribution(self):
        spec = sw.MarkovChainSpec([1.0, 0.0], ([[0.3, 0.7], [0.6, 0.4]],))
        src = sw.from_markov_chain(spec)
        # all mass on chains starting at symbol 0
        assert src.tensor()[1].sum() == 0.0

    def test_heterogeneous_alphabets(self):
        spec = sw.MarkovChainSpec([0.5, 0.5], ([[0.2, 0.3, 0.5], [0.1, 0.1, 0.8]],))
        src = sw.from_markov_chain(spec)
        assert src.alphabet_sizes == (2, 3)

    def test_rejects_non_stochastic_rows(self):
        with pytest.raises(ValueError, match="sum to 1"):
            sw.MarkovChainSpec([0.5, 0.5], ([[0.9, 0.3], [0.5, 0.5]],))

    def test_rejects_negative_transition(self):
        with pytest.raises(ValueError, match="negative"):
            sw.MarkovChainSpec([0.5, 0.5], ([[1.1, -0.1], [0.5, 0.5]],))

    def test_rejects_unnormalized_initial(self):
        with pytest.raises(ValueError, match="initial"):
            sw.MarkovChainSpec([0.5, 0.6], (np.eye(2),))

    def test_rejects_shape_mismatch(self):
        with pytest.raises(ValueError, match="rows"):
            sw.MarkovChainSpec([0.5, 0.5], (np.eye(3),))

    def test_size_cap(self):
        spec = sw.MarkovChainSpec([0.5, 0.5], tuple(np.eye(2) for _ in range(20)))
        with pytest.raises(ValueError, match="cap"):
            sw.from_markov_chain(spec)

    def test_markov_property_of_construction(self):
        rng = np.random.default_rng(7)
        for _ in range(10):
            n = int(rng.integers(3, 6))
            sizes = tuple(int(s) for s in rng.integers(2, 4, size=n))
            src = sw.from_markov_chain(sw.random_markov_spec(sizes, rng))
            for i in range(3, n + 1):
                full = sw.conditional_entropy(src, (i,), tuple(range(1, i)))
                single = sw.conditional_entropy(src, (i,), (i - 1,))
                assert abs(full - single) <= 1e-10


class TestProductOfGroups:
    def test_two_fair_bits_give_uniform_pair(self):
        bit = sw.JointSource((2,), [0.5, 0.5])
        src = sw.product_of_groups([bit, bit], sw.Partition(((1,), (2,))))
        assert np.allclose(src.pmf, 0.25)

    def test_interleaved_placement(self):
        rng = np.random.default_rng(3)
        pair = sw.random_source((2, 3), rng)
        solo = sw.random_source((2,), rng)
        src = sw.product_of_groups([pair, solo], sw.Partition(((1, 3), (2,))))
        assert src.alphabet_sizes == (2, 2, 3)
        # marginals recomputed by direct summation must match the inputs
        expected = np.zeros((2, 2, 3))
        for x1 in range(2):
            for x2 in range(2):
                for x3 in range(3):
                    expected[x1, x2, x3] = pair.tensor()[x1, x3] * solo.pmf[x2]
        assert np.allclose(src.tensor(), expected, atol=1e-15)

    def test_overlapping_assignment_rejected(self):
        with pytest.raises(ValueError, match="overlap"):
            sw.Partition(((1,), (1,)))

    def test_group_size_mismatch_rejected(self):
        bit = sw.JointSource((2,), [0.5, 0.5])
        with pytest.raises(ValueError, match="group 1"):
            sw.product_of_groups([bit, bit], sw.Partition(((1, 2), (3,))))

    def test_wrong_group_count_rejected(self):
        bit = sw.JointSource((2,), [0.5, 0.5])
        with pytest.raises(ValueError, match="group"):
            sw.product_of_groups([bit], sw.Partition(((1,), (2,))))

    def test_group_entropies_add_up(self, grouped_sources):
        for src, partition in grouped_sources[:20]:
            total = sw.joint_entropy(src, range(1, src.n_vars + 1))
            by_group = sum(sw.joint_entropy(src, g) for g in partition.groups)
            assert abs(total - by_group) <= 1e-10


class TestFromSamples:
    def test_direct_counting(self):
        src = sw.from_samples([(0, 0), (1, 1)], (2, 2))
        assert np.array_equal(src.pmf, [0.5, 0.0, 0.0, 0.5])

    def test_additive_smoothing(self):
        src = sw.from_samples([(0, 0)], (2, 2), smoothing=1.0)
        assert np.allclose(src.pmf, [0.4, 0.2, 0.2, 0.2], atol=1e-15)

    def test_out_of_range_symbol(self):
        with pytest.raises(ValueError, match="row 1, column 2"):
            sw.from_samples([(0, 5)], (2, 2))

    def test_empty_input(self):
        with pytest.raises(ValueError, match="no sample"):
            sw.from_samples([], (2, 2))

    def test_non_integer_symbols(self):
        with pytest.raises(ValueError, match="integer"):
            sw.from_samples([(0.5, 0.5)], (2, 2))

    def test_negative_smoothing(self):
        with pytest.raises(ValueError, match="smoothing"):
            sw.from_samples([(0, 0)], (2, 2), smoothing=-1.0)

    def test_exhaustive_rows_reproduce_rational_pmf(self):
        rows = [(0, 0)] * 3 + [(0, 1)] + [(1, 0)] + [(1, 1)] * 3
        src = sw.from_samples(rows, (2, 2))
        assert np.array_equal(src.pmf, [0.375, 0.125, 0.125, 0.375])


def test_random_source_is_valid_and_seeded():
    a = sw.random_source((2, 3), np.random.default_rng(5))
    b = sw.random_source((2, 3), np.random.default_rng(5))
    assert np.array_equal(a.pmf, b.pmf)
    assert abs(a.pmf.sum() - 1.0) <= 1e-9


def test_uniform_bits_helper():
    src = uniform_bits(3)
    assert math.isclose(sw.joint_entropy(src, (1, 2, 3)), 3.0, abs_tol=1e-12)
