"""Exact Shannon entropies over a JointSource, in bits/symbol.

All quantities are computed from the dense joint table by marginalization;
nothing is cached, so every value is a pure function of the source. The
convention 0*log2(0) = 0 applies throughout. Node indices are 1-based.
"""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

from .sources import JointSource


def checked_indices(source: JointSource, indices: Iterable[int], what: str) -> tuple[int, ...]:
    """Validate node indices: integers in 1..N, no duplicates."""
    idx = tuple(int(i) for i in indices)
    for i in idx:
        if not 1 <= i <= source.n_vars:
            raise ValueError(f"{what} index {i} is out of range 1..{source.n_vars}")
    if len(set(idx)) != len(idx):
        raise ValueError(f"{what} indices contain duplicates: {idx}")
    return idx


def checked_ordering(source: JointSource, ordering: Sequence[int] | None) -> tuple[int, ...]:
    """Validate a node ordering as a permutation of 1..N; None means identity."""
    if ordering is None:
        return tuple(range(1, source.n_vars + 1))
    perm = tuple(int(i) for i in ordering)
    if sorted(perm) != list(range(1, source.n_vars + 1)):
        raise ValueError(f"{perm} is not a permutation of 1..{source.n_vars}")
    return perm


def marginal(source: JointSource, subset: Iterable[int]) -> np.ndarray:
    """Marginal probability table of the given sources.

    The result has one axis per requested index, in the order given, and
    sums to 1 (up to the source's own normalization tolerance).
    """
    idx = checked_indices(source, subset, "subset")
    if not idx:
        raise ValueError("subset must be nonempty")
    keep = {i - 1 for i in idx}
    drop = tuple(a for a in range(source.n_vars) if a not in keep)
    table = source.tensor().sum(axis=drop) if drop else source.tensor()
    # summing leaves the kept axes in ascending node order; match the request
    ascending = sorted(idx)
    return table.transpose([ascending.index(i) for i in idx])


def _table_entropy(table: np.ndarray) -> float:
    p = table.reshape(-1)
    p = p[p > 0.0]
    return float(-(p * np.log2(p)).sum())


def joint_entropy(source: JointSource, subset: Iterable[int]) -> float:
    """H(X_S) in bits for a nonempty index set S."""
    return _table_entropy(marginal(source, subset))


def conditional_entropy(
    source: JointSource,
    targets: Iterable[int],
    given: Iterable[int] = (),
) -> float:
    """H(targets | given) = H(targets u given) - H(given), in bits.

    With no conditioning variables this is the plain joint entropy of the
    targets. Tiny negative results from float cancellation clamp to 0.
    """
    t = checked_indices(source, targets, "target")
    g = checked_indices(source, given, "conditioning")
    if not t:
        raise ValueError("targets must be nonempty")
    if set(t) & set(g):
        raise ValueError(f"targets {t} and conditioning set {g} overlap")
    if not g:
        return joint_entropy(source, t)
    h = joint_entropy(source, t + g) - joint_entropy(source, g)
    return max(0.0, h)


def chain_decomposition(source: JointSource, ordering: Sequence[int] | None = None) -> list[float]:
    """Chain-rule terms of the joint entropy under a node ordering.

    Term 1 is H(X_{s(1)}); term i is H(X_{s(i)} | X_{s(i-1)}, ..., X_{s(1)}).
    The terms sum to H(X_1..X_N).
    """
    perm = checked_ordering(source, ordering)
    terms = [joint_entropy(source, perm[:1])]
    for i in range(1, len(perm)):
        terms.append(conditional_entropy(source, (perm[i],), perm[:i]))
    return terms


def mutual_information(source: JointSource, i: int, j: int) -> float:
    """I(X_i; X_j) = H(X_i) + H(X_j) - H(X_i, X_j), clamped at 0."""
    idx = checked_indices(source, (i, j), "pair")
    mi = (
        joint_entropy(source, idx[:1])
        + joint_entropy(source, idx[1:])
        - joint_entropy(source, idx)
    )
    return max(0.0, mi)
