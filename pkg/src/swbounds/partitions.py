"""Disjoint groupings of the node set {1..N}."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable


@dataclass(frozen=True)
class Partition:
    """A partition of the nodes 1..N into nonempty, pairwise disjoint groups.

    Group order and the member order inside each group are preserved exactly
    as given: the per-group bounds treat the stored member order as the
    in-group node ordering.
    """

    groups: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        try:
            groups = tuple(tuple(int(i) for i in g) for g in self.groups)
        except (TypeError, ValueError):
            raise ValueError("partition groups must be iterables of integers")
        object.__setattr__(self, "groups", groups)
        if not groups:
            raise ValueError("partition must contain at least one group")
        if any(len(g) == 0 for g in groups):
            raise ValueError("partition groups must be nonempty")
        members = [i for g in groups for i in g]
        if len(set(members)) != len(members):
            raise ValueError("partition groups overlap")
        n = len(members)
        if set(members) != set(range(1, n + 1)):
            raise ValueError(f"partition must cover the nodes 1..{n} exactly")

    @classmethod
    def singletons(cls, n: int) -> "Partition":
        """One group per node: {1}, {2}, ..., {n}."""
        if n < 1:
            raise ValueError("need at least one node")
        return cls(tuple((i,) for i in range(1, n + 1)))

    @property
    def n(self) -> int:
        """Total number of nodes covered."""
        return sum(len(g) for g in self.groups)

    @property
    def k(self) -> int:
        """Number of groups."""
        return len(self.groups)

    def ordering(self) -> tuple[int, ...]:
        """The concatenated group members: a permutation of 1..N."""
        return tuple(i for g in self.groups for i in g)

    def group_of(self) -> dict[int, int]:
        """Map node -> index of the group (0-based) containing it."""
        return {i: gi for gi, g in enumerate(self.groups) for i in g}
