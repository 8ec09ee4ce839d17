"""Structured total-rate bounds and their penalty versus the joint entropy.

Each bound replaces the full chain-rule expansion of H(X_1..X_N) with a
simpler conditioning structure (single predecessors, an adjacency matrix,
disjoint groups). Because dropping conditioning variables can only raise a
conditional entropy, every bound's total is at least the joint entropy; the
report records the excess as the penalty of the structural simplification.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .entropy import checked_ordering, conditional_entropy, joint_entropy
from .grouping import CorrelationGraph
from .partitions import Partition
from .sources import JointSource

#: Bound kinds understood by evaluate_bound / compare_bounds.
BOUND_KINDS = ("full", "markov", "mixed", "adjacency", "disjoint", "disjoint_markov")


@dataclass(frozen=True)
class BoundReport:
    """One evaluated bound configuration.

    Attributes:
        config_name: identifier of the bound configuration.
        total: the bound's right-hand side, bits/symbol.
        terms: (description, bits) per term; the descriptions spell out each
            term's conditioning set.
        penalty: total minus H(X_1..X_N), bits/symbol.
        ordering: the node ordering the terms follow.
        group_subtotals: per-group totals for the disjoint bounds, else None.
    """

    config_name: str
    total: float
    terms: tuple[tuple[str, float], ...]
    penalty: float
    ordering: tuple[int, ...]
    group_subtotals: tuple[float, ...] | None = None

    @property
    def penalty_pct(self) -> float:
        """Penalty as a percentage of the joint entropy (0 when H = 0)."""
        joint = self.total - self.penalty
        return 100.0 * self.penalty / joint if joint > 0 else 0.0


def _term_label(target: int, given: Sequence[int]) -> str:
    if not given:
        return f"H(X{target})"
    return f"H(X{target}|{','.join(f'X{j}' for j in given)})"


def _assemble(
    name: str,
    source: JointSource,
    parts: list[tuple[int, tuple[int, ...]]],
    ordering: tuple[int, ...],
    group_sizes: Sequence[int] | None = None,
) -> BoundReport:
    """Evaluate (target | given) terms and package them with the penalty."""
    terms = tuple(
        (_term_label(target, given), conditional_entropy(source, (target,), given))
        for target, given in parts
    )
    total = sum(value for _, value in terms)
    subtotals = None
    if group_sizes is not None:
        subtotals, at = [], 0
        for size in group_sizes:
            subtotals.append(sum(value for _, value in terms[at : at + size]))
            at += size
        subtotals = tuple(subtotals)
    return BoundReport(
        config_name=name,
        total=total,
        terms=terms,
        penalty=total - joint_entropy(source, range(1, source.n_vars + 1)),
        ordering=ordering,
        group_subtotals=subtotals,
    )


def bound_full(source: JointSource, ordering: Sequence[int] | None = None) -> BoundReport:
    """Exact chain-rule total rate: H(X_s1) + sum_i H(X_si | all earlier).

    This is the tight sum-rate bound; its penalty is zero for every source
    and every ordering.
    """
    perm = checked_ordering(source, ordering)
    parts = [(perm[i], tuple(reversed(perm[:i]))) for i in range(len(perm))]
    return _assemble("full", source, parts, perm)


def bound_markov(source: JointSource, ordering: Sequence[int] | None = None) -> BoundReport:
    """Single-predecessor total rate: H(X_s1) + sum_i H(X_si | X_s(i-1)).

    Tight exactly when the sources form a Markov chain under the ordering;
    otherwise it exceeds the joint entropy.
    """
    perm = checked_ordering(source, ordering)
    parts = [(perm[i], perm[i - 1 : i]) for i in range(len(perm))]
    return _assemble("markov", source, parts, perm)


def bound_mixed(
    source: JointSource,
    k: int,
    r: int,
    ordering: Sequence[int] | None = None,
) -> BoundReport:
    """Total rate for a regular prefix, a Markov run, and a regular tail.

    Positions 2..k condition on everything earlier; positions k+1..k+r+1 use
    the single predecessor only; positions k+r+2..N condition on everything
    back to position k+r (earlier history is cut off by the Markov run).
    Requires 2 <= k, 0 <= r, and k+r+1 < N.
    """
    perm = checked_ordering(source, ordering)
    n = len(perm)
    k, r = int(k), int(r)
    if k < 2:
        raise ValueError(f"mixed bound requires k >= 2, got k={k}")
    if r < 0:
        raise ValueError(f"mixed bound requires r >= 0, got r={r}")
    if not k + r + 1 < n:
        raise ValueError(f"mixed bound requires k+r+1 < N, got k+r+1={k + r + 1}, N={n}")
    parts = [(perm[0], ())]
    for i in range(2, k + 1):
        parts.append((perm[i - 1], tuple(reversed(perm[: i - 1]))))
    for j in range(k + 1, k + r + 2):
        parts.append((perm[j - 1], (perm[j - 2],)))
    for i in range(k + r + 2, n + 1):
        parts.append((perm[i - 1], tuple(reversed(perm[k + r - 1 : i - 1]))))
    return _assemble("mixed", source, parts, perm)


def bound_adjacency(
    source: JointSource,
    graph: CorrelationGraph,
    ordering: Sequence[int] | None = None,
) -> BoundReport:
    """Total rate conditioning each node on its strong predecessors only.

    Node at position i conditions on the earlier-positioned nodes it shares a
    strong edge with; nodes with no strong predecessor contribute their plain
    entropy. A complete graph reproduces the full chain rule, an empty graph
    the sum of marginal entropies.
    """
    if graph.n != source.n_vars:
        raise ValueError(f"graph has {graph.n} nodes but the source has {source.n_vars}")
    perm = checked_ordering(source, ordering)
    parts = []
    for i, node in enumerate(perm):
        strong = tuple(
            earlier for earlier in perm[:i] if graph.matrix[node - 1, earlier - 1] != 0.0
        )
        parts.append((node, strong))
    return _assemble("adjacency", source, parts, perm)


def _per_group_parts(partition: Partition, markov: bool) -> list[tuple[int, tuple[int, ...]]]:
    parts = []
    for members in partition.groups:
        for j, node in enumerate(members):
            if j == 0:
                parts.append((node, ()))
            elif markov:
                parts.append((node, (members[j - 1],)))
            else:
                parts.append((node, tuple(reversed(members[:j]))))
    return parts


def bound_disjoint(source: JointSource, partition: Partition) -> BoundReport:
    """Sum of per-group chain-rule totals over a disjoint node grouping.

    Each group is expanded by the full chain rule in its stored member order;
    group totals are added, so the bound is tight exactly when the groups are
    mutually independent.
    """
    if partition.n != source.n_vars:
        raise ValueError(f"partition covers {partition.n} nodes but the source has {source.n_vars}")
    return _assemble(
        "disjoint",
        source,
        _per_group_parts(partition, markov=False),
        partition.ordering(),
        group_sizes=[len(g) for g in partition.groups],
    )


def bound_disjoint_markov(source: JointSource, partition: Partition) -> BoundReport:
    """Sum of per-group single-predecessor totals over a disjoint grouping.

    Like the disjoint bound but each group is expanded with Markov terms, so
    it additionally needs an in-group chain structure to be tight.
    """
    if partition.n != source.n_vars:
        raise ValueError(f"partition covers {partition.n} nodes but the source has {source.n_vars}")
    return _assemble(
        "disjoint_markov",
        source,
        _per_group_parts(partition, markov=True),
        partition.ordering(),
        group_sizes=[len(g) for g in partition.groups],
    )


@dataclass(frozen=True)
class BoundRequest:
    """A named bound configuration for evaluate_bound / compare_bounds."""

    kind: str
    name: str | None = None
    ordering: tuple[int, ...] | None = None
    k: int | None = None
    r: int | None = None
    graph: CorrelationGraph | None = None
    partition: Partition | None = None

    @property
    def config_name(self) -> str:
        return self.name if self.name is not None else self.kind


def evaluate_bound(source: JointSource, request: BoundRequest) -> BoundReport:
    """Dispatch a BoundRequest to the matching bound evaluator."""
    kind = request.kind
    if kind == "full":
        report = bound_full(source, request.ordering)
    elif kind == "markov":
        report = bound_markov(source, request.ordering)
    elif kind == "mixed":
        if request.k is None or request.r is None:
            raise ValueError("mixed bound requires both k and r")
        report = bound_mixed(source, request.k, request.r, request.ordering)
    elif kind == "adjacency":
        if request.graph is None:
            raise ValueError("adjacency bound requires a correlation graph")
        report = bound_adjacency(source, request.graph, request.ordering)
    elif kind == "disjoint":
        if request.partition is None:
            raise ValueError("disjoint bound requires a partition")
        report = bound_disjoint(source, request.partition)
    elif kind == "disjoint_markov":
        if request.partition is None:
            raise ValueError("disjoint markov bound requires a partition")
        report = bound_disjoint_markov(source, request.partition)
    else:
        raise ValueError(f"unknown bound kind {kind!r}; choose from {BOUND_KINDS}")
    if request.name is not None and request.name != report.config_name:
        report = BoundReport(
            config_name=request.name,
            total=report.total,
            terms=report.terms,
            penalty=report.penalty,
            ordering=report.ordering,
            group_subtotals=report.group_subtotals,
        )
    return report


@dataclass(frozen=True)
class ComparisonRow:
    config_name: str
    total: float
    penalty: float
    penalty_pct: float


@dataclass(frozen=True)
class ComparisonReport:
    """Bound totals side by side, cheapest first."""

    joint_entropy: float
    rows: tuple[ComparisonRow, ...]


def compare_bounds(source: JointSource, requests: Sequence[BoundRequest]) -> ComparisonReport:
    """Evaluate several bound configurations and rank them by total rate."""
    if not requests:
        raise ValueError("compare_bounds needs at least one configuration")
    reports = [evaluate_bound(source, req) for req in requests]
    rows = tuple(
        ComparisonRow(rep.config_name, rep.total, rep.penalty, rep.penalty_pct)
        for rep in sorted(reports, key=lambda rep: (rep.total, rep.config_name))
    )
    return ComparisonReport(
        joint_entropy=joint_entropy(source, range(1, source.n_vars + 1)),
        rows=rows,
    )
