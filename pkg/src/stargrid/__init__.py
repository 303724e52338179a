"""stargrid: exact landmark placement on hub-and-spoke grid networks.

The double-star grid (one hub, m row relays, n column relays, m*n leaf
cells) admits a closed-form metric dimension and a linear-time minimum
landmark construction; this package provides both, an auxiliary-graph
audit of landmark structure, a brute-force oracle for small instances,
and a hop-count localization demo.
"""

from .auxgraph import (
    AuditReport,
    AuxGraph,
    ComponentReport,
    Primed,
    aux_graph_to_dot,
    build_aux_graph,
    check_relays_resolved,
    classify_components,
    structural_audit,
)
from .builder import Regime, TilingPlan, build_basis, dimension, regime_of, tiling_plan
from .errors import BudgetError, InputError
from .grid import (
    HUB,
    Cell,
    Col,
    GridGraph,
    Hub,
    Row,
    Vertex,
    parse_vertex,
    transpose,
    vertex_name,
)
from .localize import (
    CodeTable,
    DecodeResult,
    NoiseModel,
    SimulationResult,
    code_table,
    decode,
    simulate,
)
from .oracle import (
    DEFAULT_BUDGET,
    SearchBudget,
    SimpleGraph,
    bfs_distances,
    brute_force_adjacency_dimension,
    brute_force_dimension,
    enumerate_minimum_bases,
    exists_hub_free_basis,
    iter_minimum_bases,
)
from .resolve import (
    AdjacencyCode,
    MetricCode,
    ResolvingSet,
    Verdict,
    adjacency_code,
    adjacency_resolved_by_neighborhoods,
    code_matrix,
    full_distance_matrix,
    is_adjacency_resolving,
    is_resolving,
    metric_code,
    parse_landmark_lines,
)

__version__ = "0.1.0"

__all__ = [
    "AuditReport",
    "AuxGraph",
    "AdjacencyCode",
    "BudgetError",
    "Cell",
    "CodeTable",
    "Col",
    "ComponentReport",
    "DecodeResult",
    "DEFAULT_BUDGET",
    "GridGraph",
    "HUB",
    "Hub",
    "InputError",
    "MetricCode",
    "NoiseModel",
    "Primed",
    "Regime",
    "ResolvingSet",
    "Row",
    "SearchBudget",
    "SimpleGraph",
    "SimulationResult",
    "TilingPlan",
    "Verdict",
    "Vertex",
    "aux_graph_to_dot",
    "bfs_distances",
    "brute_force_adjacency_dimension",
    "brute_force_dimension",
    "build_aux_graph",
    "build_basis",
    "check_relays_resolved",
    "classify_components",
    "code_matrix",
    "code_table",
    "decode",
    "dimension",
    "enumerate_minimum_bases",
    "exists_hub_free_basis",
    "full_distance_matrix",
    "is_adjacency_resolving",
    "adjacency_code",
    "adjacency_resolved_by_neighborhoods",
    "is_resolving",
    "iter_minimum_bases",
    "metric_code",
    "parse_landmark_lines",
    "parse_vertex",
    "regime_of",
    "simulate",
    "structural_audit",
    "tiling_plan",
    "transpose",
    "vertex_name",
]
