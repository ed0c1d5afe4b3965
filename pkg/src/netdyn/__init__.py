"""netdyn: dynamicity measures for longitudinal (temporal) social networks.

Slices a timestamped edge list into short-interval networks plus one
aggregated network, computes normalized actor-level centralities on each,
and evaluates dynamicity at actor, window, and whole-network levels.
"""

__version__ = "0.1.0"

from .centrality import (  # noqa: F401
    CentralityScores,
    MetricSpec,
    betweenness_centrality,
    closeness_centrality,
    compute_metric,
    degree_centrality,
    metric_from_name,
)
from .dynamicity import (  # noqa: F401
    ActorDynamicity,
    NetworkDynamicity,
    ObservedValues,
    WindowDynamicity,
    actor_contribution,
    actor_dynamicity,
    actor_window_dynamicity,
    network_dynamicity,
    rank_actors,
    window_dynamicity,
)
from .errors import (  # noqa: F401
    ConfigurationError,
    ConsistencyError,
    IngestError,
    NetdynError,
    WindowCoverageError,
)
from .graph import Graph, build_graph, node_count, union  # noqa: F401
from .ingest import IngestConfig, parse_edge_list, validate  # noqa: F401
from .report import DynamicityReport, RunConfig, emit_report, run_compute  # noqa: F401
from .windows import (  # noqa: F401
    AlphaWeights,
    PresenceMatrix,
    SlicedNetwork,
    TemporalEvent,
    WindowPlan,
    alpha_weights,
    presence_matrix,
    slice_events,
)
