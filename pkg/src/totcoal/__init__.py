"""Exact total coalition partitions and related domination invariants."""

from ._backend import BACKEND
from .bounds import INAPPLICABLE, BoundsReport, bounds_report, check_sum_bound, detect_family
from .coalition import (
    C,
    TC,
    CoalitionCertificate,
    CoalitionGraph,
    Partition,
    PartitionVerdict,
    build_tc_from_min_degree_vertex,
    build_tc_from_total_domatic,
    c_number,
    coalition_graph,
    forms_coalition,
    forms_total_coalition,
    max_coalitions_per_part,
    parse_partition,
    tc_number,
    validate_partition,
)
from .domination import (
    DomaticCertificate,
    DominationCertificate,
    domatic,
    gamma,
    gamma_t,
    is_dominating,
    is_minimal_total_dominating,
    is_total_dominating,
    shrink_to_minimal_tds,
    total_domatic,
)
from .errors import (
    ContractError,
    Graph6Error,
    GraphError,
    IsolatedVertexError,
    PreconditionError,
    StructuralPartitionError,
    TotcoalError,
)
from .graph import (
    Graph,
    VertexSet,
    complement,
    degree_profile,
    from_edge_list,
    generate,
    parse_edge_list,
)
from .graph6 import encode_graph6, parse_graph6

__version__ = "0.1.0"
