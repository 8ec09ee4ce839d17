"""Shared fixtures: seeded source corpora and frozen reference helpers."""

from __future__ import annotations

import math

import numpy as np
import pytest

import swbounds as sw

CORPUS_SEED = 20250810
MARKOV_SEED = 414213562
GROUPS_SEED = 732050808


def binary_entropy(p: float) -> float:
    """h(p) in bits, written out directly so tests stay engine-independent."""
    if p in (0.0, 1.0):
        return 0.0
    return -(p * math.log2(p) + (1.0 - p) * math.log2(1.0 - p))


def dsbs(p: float) -> sw.JointSource:
    """Doubly symmetric binary source: fair bit X, Y = X xor noise(p)."""
    return sw.JointSource((2, 2), [(1 - p) / 2, p / 2, p / 2, (1 - p) / 2])


def uniform_bits(n: int) -> sw.JointSource:
    return sw.JointSource((2,) * n, np.full(2**n, 2.0**-n))


def x3_copies_x1() -> sw.JointSource:
    """Three bits with X3 = X1 and X2 independent: Markov under no ordering."""
    table = np.zeros((2, 2, 2))
    for a in (0, 1):
        for b in (0, 1):
            table[a, b, a] = 0.25
    return sw.JointSource((2, 2, 2), table)


def copying_mixture(source: sw.JointSource, weight: float) -> sw.JointSource:
    """Mix in a component where every node copies X_1 (mod its alphabet)."""
    sizes = source.alphabet_sizes
    copier = np.zeros(sizes)
    for a in range(sizes[0]):
        copier[tuple(a % s for s in sizes)] = 1.0 / sizes[0]
    pmf = (1.0 - weight) * source.pmf + weight * copier.reshape(-1)
    return sw.JointSource(sizes, pmf)


def make_corpus(count: int = 200, seed: int = CORPUS_SEED) -> list[sw.JointSource]:
    """Seeded random sources with N in 2..5 and alphabet sizes in {2, 3}."""
    rng = np.random.default_rng(seed)
    out = []
    for _ in range(count):
        n = int(rng.integers(2, 6))
        sizes = tuple(int(s) for s in rng.integers(2, 4, size=n))
        out.append(sw.random_source(sizes, rng))
    return out


def make_markov_sources(
    count: int = 50, seed: int = MARKOV_SEED
) -> list[tuple[sw.MarkovChainSpec, sw.JointSource]]:
    """Seeded chain-structured sources with N in 3..5 and sizes in {2, 3}."""
    rng = np.random.default_rng(seed)
    out = []
    for _ in range(count):
        n = int(rng.integers(3, 6))
        sizes = tuple(int(s) for s in rng.integers(2, 4, size=n))
        spec = sw.random_markov_spec(sizes, rng)
        out.append((spec, sw.from_markov_chain(spec)))
    return out


def make_grouped_sources(
    count: int = 50, seed: int = GROUPS_SEED
) -> list[tuple[sw.JointSource, sw.Partition]]:
    """Seeded product-of-groups sources (2-3 groups) with their true partitions."""
    rng = np.random.default_rng(seed)
    out = []
    for _ in range(count):
        k = int(rng.integers(2, 4))
        group_sizes = [int(rng.integers(1, 3)) for _ in range(k)]
        n = sum(group_sizes)
        nodes = [int(i) + 1 for i in rng.permutation(n)]
        groups, at = [], 0
        for size in group_sizes:
            groups.append(tuple(sorted(nodes[at : at + size])))
            at += size
        partition = sw.Partition(tuple(groups))
        members = [
            sw.random_source(tuple(int(s) for s in rng.integers(2, 4, size=size)), rng)
            for size in group_sizes
        ]
        out.append((sw.product_of_groups(members, partition), partition))
    return out


@pytest.fixture(scope="session")
def corpus() -> list[sw.JointSource]:
    return make_corpus()


@pytest.fixture(scope="session")
def markov_sources() -> list[tuple[sw.MarkovChainSpec, sw.JointSource]]:
    return make_markov_sources()


@pytest.fixture(scope="session")
def grouped_sources() -> list[tuple[sw.JointSource, sw.Partition]]:
    return make_grouped_sources()
