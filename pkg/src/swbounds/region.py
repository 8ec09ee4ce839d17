"""The Slepian-Wolf admissible rate region for N correlated sources.

For every nonempty subset S of nodes the region imposes
sum_{i in S} R_i >= H(X_S | X_{S^c}); with N sources that is 2^N - 1 linear
inequalities. Corner points assign each node one term of a chain-rule
decomposition, so their total rate meets the sum constraint with equality.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .entropy import chain_decomposition, checked_ordering, conditional_entropy, joint_entropy
from .sources import JointSource

#: 2^N - 1 subset enumeration becomes unreasonable past this many sources.
ENUMERATION_CAP = 16

#: Absolute slack allowed when testing rate vectors against the region.
MEMBERSHIP_TOL = 1e-9


@dataclass(frozen=True)
class RegionInequality:
    """One region constraint: sum of rates over `subset` >= `lower_bound` bits."""

    subset: tuple[int, ...]
    lower_bound: float

    def label(self) -> str:
        return "+".join(f"R{i}" for i in self.subset)


@dataclass(frozen=True)
class AdmissibilityResult:
    """Verdict of a rate-vector membership test, with any violated constraints."""

    admissible: bool
    violations: tuple[RegionInequality, ...]

    def __bool__(self) -> bool:
        return self.admissible


def enumerate_inequalities(source: JointSource) -> list[RegionInequality]:
    """All 2^N - 1 region inequalities, one per nonempty subset of nodes.

    Subsets are emitted in ascending bitmask order (node i on bit i-1), so
    the output is deterministic: {1}, {2}, {1,2}, {3}, {1,3}, ...
    """
    n = source.n_vars
    if n > ENUMERATION_CAP:
        raise ValueError(
            f"region enumeration supports at most {ENUMERATION_CAP} sources, got {n}"
        )
    out = []
    for mask in range(1, 1 << n):
        subset = tuple(i for i in range(1, n + 1) if mask >> (i - 1) & 1)
        complement = tuple(i for i in range(1, n + 1) if not mask >> (i - 1) & 1)
        out.append(RegionInequality(subset, conditional_entropy(source, subset, complement)))
    return out


def is_admissible(source: JointSource, rates: Sequence[float]) -> AdmissibilityResult:
    """Test a rate vector (bits/symbol per node) against every region inequality."""
    r = np.asarray(rates, dtype=float).reshape(-1)
    if r.size != source.n_vars:
        raise ValueError(f"expected {source.n_vars} rates, got {r.size}")
    if r.min(initial=0.0) < 0:
        raise ValueError("rates must be nonnegative")
    violations = tuple(
        ineq
        for ineq in enumerate_inequalities(source)
        if sum(r[i - 1] for i in ineq.subset) < ineq.lower_bound - MEMBERSHIP_TOL
    )
    return AdmissibilityResult(not violations, violations)


def corner_point(source: JointSource, ordering: Sequence[int] | None = None) -> np.ndarray:
    """The corner point of the region's dominant face for a node ordering.

    Node s(i) is assigned the i-th chain-decomposition term, so the rates sum
    to the joint entropy and the full-set inequality is tight.
    """
    perm = checked_ordering(source, ordering)
    terms = chain_decomposition(source, perm)
    rates = np.zeros(source.n_vars)
    for node, term in zip(perm, terms):
        rates[node - 1] = term
    return rates


@dataclass(frozen=True)
class TwoNodeBoundary:
    """Dominant boundary of the two-node region.

    The boundary runs down the vertical asymptote R1 = H(X1|X2), bends at
    corner_b = (H(X1|X2), H(X2)), follows the line R1 + R2 = H(X1,X2) to
    corner_a = (H(X1), H(X2|X1)), then continues along the horizontal
    asymptote R2 = H(X2|X1).
    """

    corner_a: tuple[float, float]
    corner_b: tuple[float, float]
    sum_rate: float
    r1_asymptote: float
    r2_asymptote: float

    @property
    def vertices(self) -> tuple[tuple[float, float], ...]:
        """The distinct corner vertices (one point when the sources are independent)."""
        if self.corner_a == self.corner_b:
            return (self.corner_a,)
        return (self.corner_a, self.corner_b)


def two_node_boundary(source: JointSource) -> TwoNodeBoundary:
    """Exact vertices and asymptotes of the two-node region boundary."""
    if source.n_vars != 2:
        raise ValueError(f"the boundary is defined for 2 sources, got {source.n_vars}")
    h1 = joint_entropy(source, (1,))
    h2 = joint_entropy(source, (2,))
    h1_given_2 = conditional_entropy(source, (1,), (2,))
    h2_given_1 = conditional_entropy(source, (2,), (1,))
    return TwoNodeBoundary(
        corner_a=(h1, h2_given_1),
        corner_b=(h1_given_2, h2),
        sum_rate=joint_entropy(source, (1, 2)),
        r1_asymptote=h1_given_2,
        r2_asymptote=h2_given_1,
    )
