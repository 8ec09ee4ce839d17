"""Slepian-Wolf rate regions and structured total-rate bounds.

The toolkit models N correlated discrete sources as an explicit joint
distribution, enumerates the Slepian-Wolf admissible rate region and its
corner points, and evaluates structured total-rate bounds (chain-rule,
Markov, mixed, adjacency-matrix, disjoint-group and disjoint-Markov),
reporting the rate penalty each structural simplification costs over the
exact joint entropy.

Nodes are numbered 1..N throughout, matching the usual X_1..X_N naming.
All entropies and rates are in bits/symbol.
"""

from .bounds import (
    BOUND_KINDS,
    BoundReport,
    BoundRequest,
    ComparisonReport,
    ComparisonRow,
    bound_adjacency,
    bound_disjoint,
    bound_disjoint_markov,
    bound_full,
    bound_markov,
    bound_mixed,
    compare_bounds,
    evaluate_bound,
)
from .entropy import (
    chain_decomposition,
    conditional_entropy,
    joint_entropy,
    marginal,
    mutual_information,
)
from .grouping import (
    METRICS,
    CorrelationGraph,
    build_graph,
    disjoint_partition,
    pairwise_metric,
    predecessor_sets,
    verify_disjoint,
)
from .modelio import (
    read_model,
    read_partition,
    read_samples,
    write_model,
    write_partition,
)
from .oracle import (
    IndependenceCheck,
    MarkovCheck,
    OracleReport,
    agreement_report,
    naive_entropy,
    verify_group_independence,
    verify_markov_property,
)
from .partitions import Partition
from .region import (
    ENUMERATION_CAP,
    MEMBERSHIP_TOL,
    AdmissibilityResult,
    RegionInequality,
    TwoNodeBoundary,
    corner_point,
    enumerate_inequalities,
    is_admissible,
    two_node_boundary,
)
from .sources import (
    MAX_TABLE_CELLS,
    JointSource,
    MarkovChainSpec,
    from_markov_chain,
    from_samples,
    product_of_groups,
    random_markov_spec,
    random_source,
)

__version__ = "0.1.0"

__all__ = [
    "BOUND_KINDS",
    "BoundReport",
    "BoundRequest",
    "ComparisonReport",
    "ComparisonRow",
    "bound_adjacency",
    "bound_disjoint",
    "bound_disjoint_markov",
    "bound_full",
    "bound_markov",
    "bound_mixed",
    "compare_bounds",
    "evaluate_bound",
    "chain_decomposition",
    "conditional_entropy",
    "joint_entropy",
    "marginal",
    "mutual_information",
    "METRICS",
    "CorrelationGraph",
    "build_graph",
    "disjoint_partition",
    "pairwise_metric",
    "predecessor_sets",
    "verify_disjoint",
    "read_model",
    "read_partition",
    "read_samples",
    "write_model",
    "write_partition",
    "IndependenceCheck",
    "MarkovCheck",
    "OracleReport",
    "agreement_report",
    "naive_entropy",
    "verify_group_independence",
    "verify_markov_property",
    "Partition",
    "ENUMERATION_CAP",
    "MEMBERSHIP_TOL",
    "AdmissibilityResult",
    "RegionInequality",
    "TwoNodeBoundary",
    "corner_point",
    "enumerate_inequalities",
    "is_admissible",
    "two_node_boundary",
    "MAX_TABLE_CELLS",
    "JointSource",
    "MarkovChainSpec",
    "from_markov_chain",
    "from_samples",
    "product_of_groups",
    "random_markov_spec",
    "random_source",
]
