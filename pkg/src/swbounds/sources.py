"""Joint distributions over N discrete sources.

The single canonical representation is a dense probability table over all
symbol tuples, stored flat in row-major mixed-radix order (the last variable
varies fastest). Sources are numbered 1..N. Construction validates; it never
renormalizes silently, so ingestion bugs surface immediately.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .partitions import Partition

#: Hard cap on the dense table size (cells).
MAX_TABLE_CELLS = 1 << 20

#: Absolute tolerance for "sums to one" checks.
NORMALIZATION_TOL = 1e-9

#: Entries in [-1e-12, 0) are treated as float noise and clamped to zero.
NEGATIVE_NOISE_FLOOR = -1e-12


def _checked_sizes(alphabet_sizes: Iterable[int]) -> tuple[int, ...]:
    sizes = tuple(int(s) for s in alphabet_sizes)
    if not sizes:
        raise ValueError("need at least one source")
    if any(s < 1 for s in sizes):
        raise ValueError(f"alphabet sizes must be positive, got {sizes}")
    if math.prod(sizes) > MAX_TABLE_CELLS:
        raise ValueError(
            f"joint table would need {math.prod(sizes)} cells; "
            f"the cap is {MAX_TABLE_CELLS}"
        )
    return sizes


@dataclass(frozen=True, eq=False)
class JointSource:
    """Dense joint pmf over N finite-alphabet sources.

    Attributes:
        alphabet_sizes: alphabet size of each source, in node order 1..N.
        pmf: flat probability table of length prod(alphabet_sizes), row-major
            mixed-radix indexed (last variable fastest). Read-only.
    """

    alphabet_sizes: tuple[int, ...]
    pmf: np.ndarray = field(repr=False)

    def __post_init__(self):
        sizes = _checked_sizes(self.alphabet_sizes)
        cells = math.prod(sizes)
        table = np.asarray(self.pmf, dtype=float)
        if table.shape == sizes:
            table = table.reshape(-1)
        if table.ndim != 1 or table.size != cells:
            raise ValueError(
                f"pmf has {table.size} entries but alphabet sizes {sizes} "
                f"require {cells}"
            )
        table = table.copy()
        low = table.min(initial=0.0)
        if low < NEGATIVE_NOISE_FLOOR:
            raise ValueError(f"pmf contains a negative probability ({low})")
        np.clip(table, 0.0, None, out=table)
        total = float(table.sum())
        if abs(total - 1.0) > NORMALIZATION_TOL:
            raise ValueError(
                f"pmf sums to {total!r}; must be 1 within {NORMALIZATION_TOL}"
            )
        table.setflags(write=False)
        object.__setattr__(self, "alphabet_sizes", sizes)
        object.__setattr__(self, "pmf", table)

    @property
    def n_vars(self) -> int:
        return len(self.alphabet_sizes)

    def tensor(self) -> np.ndarray:
        """The pmf reshaped to one axis per source (read-only view)."""
        return self.pmf.reshape(self.alphabet_sizes)

    def __repr__(self):
        return f"JointSource(n_vars={self.n_vars}, alphabet_sizes={self.alphabet_sizes})"


@dataclass(frozen=True, eq=False)
class MarkovChainSpec:
    """First-order chain X_1 -> X_2 -> ... -> X_N.

    Attributes:
        initial_dist: pmf of X_1.
        transitions: N-1 row-stochastic matrices; matrix i maps the alphabet
            of X_i to the alphabet of X_{i+1}.
    """

    initial_dist: np.ndarray
    transitions: tuple[np.ndarray, ...]

    def __post_init__(self):
        init = np.asarray(self.initial_dist, dtype=float)
        if init.ndim != 1 or init.size == 0:
            raise ValueError("initial distribution must be a nonempty vector")
        if init.min() < 0:
            raise ValueError("initial distribution has a negative entry")
        if abs(float(init.sum()) - 1.0) > NORMALIZATION_TOL:
            raise ValueError(
                f"initial distribution sums to {float(init.sum())!r}, not 1"
            )
        mats = []
        prev = init.size
        for pos, t in enumerate(self.transitions, start=1):
            m = np.asarray(t, dtype=float)
            if m.ndim != 2:
                raise ValueError(f"transition {pos} is not a matrix")
            if m.shape[0] != prev:
                raise ValueError(
                    f"transition {pos} has {m.shape[0]} rows but the previous "
                    f"alphabet has {prev} symbols"
                )
            if m.min() < 0:
                raise ValueError(f"transition {pos} has a negative entry")
            rows = m.sum(axis=1)
            if np.abs(rows - 1.0).max() > NORMALIZATION_TOL:
                raise ValueError(f"transition {pos} rows must each sum to 1")
            m = m.copy()
            m.setflags(write=False)
            mats.append(m)
            prev = m.shape[1]
        init = init.copy()
        init.setflags(write=False)
        object.__setattr__(self, "initial_dist", init)
        object.__setattr__(self, "transitions", tuple(mats))

    @property
    def alphabet_sizes(self) -> tuple[int, ...]:
        return (self.initial_dist.size,) + tuple(t.shape[1] for t in self.transitions)


def from_markov_chain(spec: MarkovChainSpec) -> JointSource:
    """Joint source with pmf(x_1..x_N) = init(x_1) * prod_i T_i(x_i -> x_{i+1})."""
    sizes = _checked_sizes(spec.alphabet_sizes)
    table = spec.initial_dist
    for t in spec.transitions:
        table = table[..., None] * t
    return JointSource(sizes, table.reshape(-1))


def product_of_groups(group_sources: Sequence[JointSource], assignment: Partition) -> JointSource:
    """Combine independent groups of sources into one joint source.

    Group i's variables are placed at the global node indices listed in
    ``assignment.groups[i]`` (in stored order); distinct groups are mutually
    independent by construction.
    """
    if len(group_sources) != assignment.k:
        raise ValueError(
            f"{len(group_sources)} group sources but the partition has "
            f"{assignment.k} groups"
        )
    for gi, (src, members) in enumerate(zip(group_sources, assignment.groups), start=1):
        if src.n_vars != len(members):
            raise ValueError(
                f"group {gi} has {src.n_vars} variables but its index set "
                f"has {len(members)} members"
            )
    n = assignment.n
    placed = assignment.ordering()
    sizes_by_node = {}
    for src, members in zip(group_sources, assignment.groups):
        for node, size in zip(members, src.alphabet_sizes):
            sizes_by_node[node] = size
    sizes = tuple(sizes_by_node[v] for v in range(1, n + 1))
    _checked_sizes(sizes)

    table = group_sources[0].tensor()
    for src in group_sources[1:]:
        table = np.multiply.outer(table, src.tensor())
    # axis a of `table` currently carries node placed[a]; move to node order
    axes = [placed.index(v) for v in range(1, n + 1)]
    table = np.transpose(table, axes)
    return JointSource(sizes, np.ascontiguousarray(table).reshape(-1))


def from_samples(
    rows,
    alphabet_sizes: Iterable[int],
    smoothing: float = 0.0,
) -> JointSource:
    """Empirical joint source from observed symbol tuples.

    pmf(t) = (count(t) + smoothing) / (n_rows + smoothing * table_size);
    additive smoothing is off by default, so zero-count cells stay zero.
    """
    sizes = _checked_sizes(alphabet_sizes)
    if smoothing < 0:
        raise ValueError("smoothing must be nonnegative")
    data = np.asarray(rows)
    if data.size == 0:
        raise ValueError("no sample rows")
    if data.ndim != 2:
        raise ValueError("samples must be a table with one observation per row")
    if data.shape[1] != len(sizes):
        raise ValueError(
            f"samples have {data.shape[1]} columns but {len(sizes)} alphabet "
            f"sizes were given"
        )
    symbols = data.astype(np.int64)
    if not np.array_equal(symbols, data):
        raise ValueError("sample symbols must be integers")
    limits = np.asarray(sizes, dtype=np.int64)
    bad = (symbols < 0) | (symbols >= limits[None, :])
    if bad.any():
        r, c = map(int, np.argwhere(bad)[0])
        raise ValueError(
            f"sample row {r + 1}, column {c + 1}: symbol {symbols[r, c]} is "
            f"outside the alphabet 0..{sizes[c] - 1}"
        )
    cells = math.prod(sizes)
    flat = np.ravel_multi_index(tuple(symbols.T), sizes)
    counts = np.bincount(flat, minlength=cells).astype(float)
    pmf = (counts + smoothing) / (symbols.shape[0] + smoothing * cells)
    return JointSource(sizes, pmf)


def random_source(alphabet_sizes: Iterable[int], rng: np.random.Generator) -> JointSource:
    """Joint source with a Dirichlet(1,...,1) table; useful for randomized checks."""
    sizes = _checked_sizes(alphabet_sizes)
    pmf = rng.dirichlet(np.ones(math.prod(sizes)))
    return JointSource(sizes, pmf)


def random_markov_spec(alphabet_sizes: Iterable[int], rng: np.random.Generator) -> MarkovChainSpec:
    """Chain spec with Dirichlet(1,...,1) initial distribution and transition rows."""
    sizes = _checked_sizes(alphabet_sizes)
    init = rng.dirichlet(np.ones(sizes[0]))
    transitions = [
        np.vstack([rng.dirichlet(np.ones(b)) for _ in range(a)])
        for a, b in zip(sizes[:-1], sizes[1:])
    ]
    return MarkovChainSpec(init, tuple(transitions))
