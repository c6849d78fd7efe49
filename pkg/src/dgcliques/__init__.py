"""Maximal (delta, gamma)-clique enumeration for temporal link streams.

A (delta, gamma)-clique is a vertex set together with a time interval on
which every vertex pair interacts at least gamma times inside every
window of length delta.  The package enumerates all maximal such cliques
with a two phase pipeline: per-edge interval stretching followed by
vertex-set growth through interval intersection.
"""

from .core import (
    Clique,
    EdgeOccurrenceIndex,
    Link,
    StaticGraph,
    TemporalNetwork,
    TimeInterval,
    interval_intersection,
    neighbors_of_set,
    sort_cliques,
)
from .bulk import (
    ProductLimitError,
    enumerate_maximal,
    enumerate_maximal_cliques,
    expand_clique,
    generate_intervals_for,
)
from .estimator import DeltaGammaCliqueEnumerator, validate_link_array
from .ingest import (
    DatasetStats,
    IngestConfig,
    ParseError,
    compute_stats,
    parse_link_stream,
    write_link_stream,
)
from .oracle import (
    BudgetExceededError,
    OracleBudget,
    enumerate_duration_maximal_bruteforce,
    enumerate_maximal_bruteforce,
    is_dg_clique,
    random_temporal_network,
    run_verify_trials,
)
from .stretch import stretch_all, stretch_edge
from .sweep import SweepRecord, run_sweep, summarize, write_sweep_csv

__all__ = [
    "BudgetExceededError",
    "Clique",
    "DatasetStats",
    "DeltaGammaCliqueEnumerator",
    "EdgeOccurrenceIndex",
    "IngestConfig",
    "Link",
    "OracleBudget",
    "ParseError",
    "ProductLimitError",
    "StaticGraph",
    "SweepRecord",
    "TemporalNetwork",
    "TimeInterval",
    "compute_stats",
    "enumerate_duration_maximal_bruteforce",
    "enumerate_maximal",
    "enumerate_maximal_bruteforce",
    "enumerate_maximal_cliques",
    "expand_clique",
    "generate_intervals_for",
    "interval_intersection",
    "is_dg_clique",
    "neighbors_of_set",
    "parse_link_stream",
    "random_temporal_network",
    "run_sweep",
    "run_verify_trials",
    "sort_cliques",
    "stretch_all",
    "stretch_edge",
    "summarize",
    "validate_link_array",
    "write_link_stream",
    "write_sweep_csv",
]

__version__ = "0.1.0"
