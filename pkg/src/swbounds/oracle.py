"""Brute-force reference computations for validating the entropy engine.

Everything here walks the joint table outcome by outcome in pure Python and
accumulates probabilities in dictionaries, deliberately sharing no
computational path with the vectorized engine. Slow but unarguable; meant
for small instances.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from . import entropy
from .partitions import Partition
from .sources import JointSource


def naive_entropy(
    source: JointSource,
    targets: Iterable[int],
    given: Iterable[int] = (),
) -> float:
    """H(targets | given) by direct summation over joint outcomes.

    Computes sum_{t,g} p(t,g) * log2(p(g) / p(t,g)) with both marginals
    accumulated from scratch, never via an entropy difference.
    """
    t = entropy.checked_indices(source, targets, "target")
    g = entropy.checked_indices(source, given, "conditioning")
    if not t:
        raise ValueError("targets must be nonempty")
    if set(t) & set(g):
        raise ValueError(f"targets {t} and conditioning set {g} overlap")

    t_axes = [i - 1 for i in t]
    g_axes = [i - 1 for i in g]
    p_tg: dict[tuple[int, ...], float] = {}
    p_g: dict[tuple[int, ...], float] = {}
    outcomes = itertools.product(*(range(s) for s in source.alphabet_sizes))
    for outcome, p in zip(outcomes, source.pmf.tolist()):
        if p == 0.0:
            continue
        tg_key = tuple(outcome[a] for a in t_axes) + tuple(outcome[a] for a in g_axes)
        g_key = tg_key[len(t_axes):]
        p_tg[tg_key] = p_tg.get(tg_key, 0.0) + p
        p_g[g_key] = p_g.get(g_key, 0.0) + p

    total = 0.0
    for tg_key, joint in p_tg.items():
        total += joint * math.log2(p_g[tg_key[len(t_axes):]] / joint)
    return total


@dataclass(frozen=True)
class OracleReport:
    """Engine value versus the brute-force reference for one quantity."""

    checked_quantity: str
    reference_value: float
    engine_value: float

    @property
    def abs_diff(self) -> float:
        return abs(self.reference_value - self.engine_value)


def agreement_report(
    source: JointSource,
    targets: Iterable[int],
    given: Iterable[int] = (),
) -> OracleReport:
    """Compare the engine's conditional entropy against the brute-force value."""
    t = tuple(targets)
    g = tuple(given)
    if g:
        quantity = (
            f"H({','.join(f'X{i}' for i in t)}|{','.join(f'X{i}' for i in g)})"
        )
    else:
        quantity = f"H({','.join(f'X{i}' for i in t)})"
    return OracleReport(
        checked_quantity=quantity,
        reference_value=naive_entropy(source, t, g),
        engine_value=entropy.conditional_entropy(source, t, g),
    )


def random_queries(
    n_vars: int,
    count: int,
    rng: np.random.Generator,
) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Seeded (targets, given) pairs: disjoint index sets, targets nonempty."""
    queries = []
    for _ in range(count):
        perm = [int(i) + 1 for i in rng.permutation(n_vars)]
        n_targets = int(rng.integers(1, n_vars + 1))
        n_given = int(rng.integers(0, n_vars - n_targets + 1))
        queries.append(
            (
                tuple(sorted(perm[:n_targets])),
                tuple(sorted(perm[n_targets : n_targets + n_given])),
            )
        )
    return queries


@dataclass(frozen=True)
class MarkovCheck:
    """Whether each node depends on its past only through its predecessor."""

    ok: bool
    max_deviation: float

    def __bool__(self) -> bool:
        return self.ok


def verify_markov_property(
    source: JointSource,
    ordering: Sequence[int] | None = None,
    tol: float = 1e-10,
) -> MarkovCheck:
    """Check H(X_si | X_s(i-1)) = H(X_si | all earlier) for every i >= 3.

    The reported deviation is the largest gap between the single-predecessor
    term and the full-history term; each gap is nonnegative up to float
    noise, and their sum is exactly what the Markov total-rate bound adds on
    top of the joint entropy. With fewer than three nodes the check is
    vacuously true.
    """
    perm = entropy.checked_ordering(source, ordering)
    deviation = 0.0
    for i in range(2, len(perm)):
        gap = naive_entropy(source, (perm[i],), (perm[i - 1],)) - naive_entropy(
            source, (perm[i],), perm[:i]
        )
        deviation = max(deviation, gap)
    return MarkovCheck(ok=deviation <= tol, max_deviation=deviation)


@dataclass(frozen=True)
class IndependenceCheck:
    """Whether a grouping's members are mutually independent across groups."""

    ok: bool
    deviation: float

    def __bool__(self) -> bool:
        return self.ok


def verify_group_independence(
    source: JointSource,
    partition: Partition,
    tol: float = 1e-10,
) -> IndependenceCheck:
    """Check H(all) = sum_i H(X_{T_i}) for the partition's groups.

    The deviation is the total correlation across groups, |sum of group
    entropies - joint entropy|, evaluated by direct summation.
    """
    if partition.n != source.n_vars:
        raise ValueError(
            f"partition covers {partition.n} nodes but the source has {source.n_vars}"
        )
    whole = naive_entropy(source, range(1, source.n_vars + 1))
    by_group = sum(naive_entropy(source, g) for g in partition.groups)
    deviation = abs(whole - by_group)
    return IndependenceCheck(ok=deviation <= tol, deviation=deviation)
