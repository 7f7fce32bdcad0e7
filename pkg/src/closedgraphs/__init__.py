"""Closed graph labelings: recognition, counting, enumeration, and clustering bounds."""

from .census import (
    LayerPartition,
    SequenceFamily,
    census_total,
    count_closed_graphs,
    enumerate_closed_graphs,
    enumerate_sequences,
    forward_interval,
    graph_from_sequences,
    layer_partitions,
    sequences_of,
    validate_sequences,
)
from .closure import (
    LayerDecomposition,
    LayerTheoremReport,
    closure_violation,
    edges_span_adjacent_layers,
    is_closed_by_definition,
    is_closed_by_intervals,
    layer_decomposition,
    verify_layer_theorems,
)
from .clustering import (
    BoundVerdicts,
    ClusteringReport,
    local_clustering,
    verify_clustering_bounds,
    watts_strogatz,
)
from .errors import (
    DomainError,
    EdgeListParseError,
    EmptyLinkError,
    ExchangeabilityError,
    GraphError,
    InvalidLabelingError,
    InvalidSequenceError,
    NotClosedError,
    NotConnectedError,
    OracleLimitError,
    PreconditionError,
)
from .exchange import (
    ExchangePartition,
    QuotientGraph,
    count_closed_labelings,
    enumerate_closed_labelings,
    exchange_partition,
    full_neighborhood,
    is_collapsed,
    quotient_graph,
    swap_exchangeable,
)
from .graph import (
    Graph,
    bfs_distances,
    connected_components,
    diameter,
    format_edge_list,
    identity_labeling,
    inverse_labeling,
    is_complete_on,
    is_connected,
    is_interval,
    lower_neighborhood,
    parse_edge_list,
    relabel,
    reversed_labeling,
    upper_neighborhood,
)
from .search import (
    ORACLE_BOUND_DEFAULT,
    all_closed_labelings_bruteforce,
    find_closed_labeling,
    is_closed_graph,
    labeling_is_closed,
)

__version__ = "0.1.0"

__all__ = [
    "Graph",
    "LayerDecomposition",
    "LayerTheoremReport",
    "LayerPartition",
    "SequenceFamily",
    "ExchangePartition",
    "QuotientGraph",
    "BoundVerdicts",
    "ClusteringReport",
    "GraphError",
    "DomainError",
    "EdgeListParseError",
    "EmptyLinkError",
    "ExchangeabilityError",
    "InvalidLabelingError",
    "InvalidSequenceError",
    "NotClosedError",
    "NotConnectedError",
    "OracleLimitError",
    "PreconditionError",
    "ORACLE_BOUND_DEFAULT",
    "all_closed_labelings_bruteforce",
    "bfs_distances",
    "census_total",
    "closure_violation",
    "connected_components",
    "count_closed_graphs",
    "count_closed_labelings",
    "diameter",
    "edges_span_adjacent_layers",
    "enumerate_closed_graphs",
    "enumerate_closed_labelings",
    "enumerate_sequences",
    "exchange_partition",
    "find_closed_labeling",
    "format_edge_list",
    "forward_interval",
    "full_neighborhood",
    "graph_from_sequences",
    "identity_labeling",
    "inverse_labeling",
    "is_closed_by_definition",
    "is_closed_by_intervals",
    "is_closed_graph",
    "is_collapsed",
    "is_complete_on",
    "is_connected",
    "is_interval",
    "labeling_is_closed",
    "layer_decomposition",
    "layer_partitions",
    "local_clustering",
    "lower_neighborhood",
    "parse_edge_list",
    "quotient_graph",
    "relabel",
    "reversed_labeling",
    "sequences_of",
    "swap_exchangeable",
    "upper_neighborhood",
    "validate_sequences",
    "verify_clustering_bounds",
    "verify_layer_theorems",
    "watts_strogatz",
]
