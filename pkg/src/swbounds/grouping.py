"""Correlation graphs over sources and the node groupings they induce.

A pairwise similarity metric is thresholded at tau: pairs at or above the
threshold are "strong" and keep their metric value in the adjacency matrix,
weaker pairs (and the diagonal) are zeroed. Predecessor sets read the lower
triangle of the matrix; disjoint groups are the connected components of the
strong-edge graph.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .entropy import checked_indices, joint_entropy, mutual_information
from .partitions import Partition
from .sources import JointSource

#: Supported pairwise metrics.
METRICS = ("mutual_information", "normalized_mi")


def pairwise_metric(
    source: JointSource,
    i: int,
    j: int,
    metric_id: str = "mutual_information",
) -> float:
    """Similarity of the pair (X_i, X_j) under the named metric, in [0, inf).

    "mutual_information" is I(X_i; X_j) in bits. "normalized_mi" divides by
    min(H(X_i), H(X_j)), with 0/0 defined as 0. Both are symmetric in (i, j).
    """
    idx = checked_indices(source, (i, j), "pair")
    if idx[0] == idx[1]:
        raise ValueError("pairwise metric needs two distinct nodes")
    if metric_id == "mutual_information":
        return mutual_information(source, *idx)
    if metric_id == "normalized_mi":
        mi = mutual_information(source, *idx)
        floor = min(joint_entropy(source, idx[:1]), joint_entropy(source, idx[1:]))
        return mi / floor if floor > 0.0 else 0.0
    raise ValueError(f"unknown metric {metric_id!r}; choose from {METRICS}")


@dataclass(frozen=True, eq=False)
class CorrelationGraph:
    """Symmetric adjacency matrix of strong pairwise correlations.

    Entry (i, j) holds the metric value when the pair is strong (metric >=
    tau) and 0 otherwise; the diagonal is always 0.
    """

    matrix: np.ndarray = field(repr=False)
    tau: float
    metric_id: str = "mutual_information"

    def __post_init__(self):
        m = np.asarray(self.matrix, dtype=float).copy()
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise ValueError("adjacency matrix must be square")
        if not np.array_equal(m, m.T):
            raise ValueError("adjacency matrix must be symmetric")
        if np.diagonal(m).any():
            raise ValueError("adjacency matrix diagonal must be zero")
        if m.min(initial=0.0) < 0:
            raise ValueError("adjacency entries must be nonnegative")
        tau = float(self.tau)
        if not tau >= 0:
            raise ValueError("tau must be nonnegative")
        nonzero = m[m != 0.0]
        if nonzero.size and nonzero.min() < tau:
            raise ValueError("every retained edge must be at least tau")
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)
        object.__setattr__(self, "tau", tau)

    @property
    def n(self) -> int:
        return self.matrix.shape[0]

    def __repr__(self):
        return (
            f"CorrelationGraph(n={self.n}, tau={self.tau!r}, "
            f"metric_id={self.metric_id!r}, edges={int(np.count_nonzero(self.matrix)) // 2})"
        )


def build_graph(
    source: JointSource,
    tau: float,
    metric_id: str = "mutual_information",
) -> CorrelationGraph:
    """Evaluate the metric on every pair and keep the edges at or above tau."""
    if not float(tau) >= 0:
        raise ValueError("tau must be nonnegative")
    n = source.n_vars
    m = np.zeros((n, n))
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            value = pairwise_metric(source, i, j, metric_id)
            if value >= tau:
                m[i - 1, j - 1] = m[j - 1, i - 1] = value
    return CorrelationGraph(m, float(tau), metric_id)


def predecessor_sets(graph: CorrelationGraph) -> list[tuple[int, ...]]:
    """For each node i, the strongly correlated nodes j < i, ascending.

    This reads exactly the lower triangle of the adjacency matrix; the first
    node's set is always empty.
    """
    return [
        tuple(j for j in range(1, i) if graph.matrix[i - 1, j - 1] != 0.0)
        for i in range(1, graph.n + 1)
    ]


def disjoint_partition(graph: CorrelationGraph) -> Partition:
    """Connected components of the strong-correlation graph.

    Components are ordered by smallest member, members ascending; nodes with
    no strong edges form singleton groups.
    """
    n = graph.n
    unseen = set(range(1, n + 1))
    groups = []
    while unseen:
        start = min(unseen)
        component = {start}
        frontier = [start]
        while frontier:
            node = frontier.pop()
            for other in range(1, n + 1):
                if other not in component and graph.matrix[node - 1, other - 1] != 0.0:
                    component.add(other)
                    frontier.append(other)
        unseen -= component
        groups.append(tuple(sorted(component)))
    return Partition(tuple(groups))


def verify_disjoint(graph: CorrelationGraph, partition: Partition) -> bool:
    """True iff no strong edge crosses two groups of the partition."""
    if partition.n != graph.n:
        raise ValueError(
            f"partition covers {partition.n} nodes but the graph has {graph.n}"
        )
    owner = partition.group_of()
    rows, cols = np.nonzero(graph.matrix)
    return all(owner[int(r) + 1] == owner[int(c) + 1] for r, c in zip(rows, cols))
