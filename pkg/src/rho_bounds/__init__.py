"""Sharp degree-sequence upper bounds for the adjacency spectral radius,
their equality classification, and an exhaustive verification harness."""

from .bounds import (
    BoundReport,
    EQUAL,
    GREATER,
    LESS,
    PhiSequence,
    bound_brualdi_hoffman,
    bound_hong,
    bound_hong_shu_fang,
    bound_max_degree,
    bound_report,
    bound_shu_wu,
    bound_stanley,
    compare_step,
    is_graphical,
    min_phi,
    phi,
    phi_sequence,
)
from .equality import (
    DOMINATING,
    EqualityCertificate,
    NONE,
    REGULAR,
    check_equality_numeric,
    classify_equality,
    tight_levels,
)
from .graph_core import (
    DegreeSequence,
    Graph,
    GraphParseError,
    degree_sequence,
    encode_graph6,
    enumerate_connected,
    gen_join_dominating,
    gen_named,
    is_connected,
    is_connected_union_find,
    parse_edge_list,
    parse_graph6,
)
from .harness import CampaignConfig, CampaignResult, CHECKS, CSV_COLUMNS, run_campaign
from .proof_replay import (
    CertificateViolationError,
    ScalingCertificate,
    row_sums_scaled,
    scaling_vector,
)
from .spectral_oracle import (
    ConvergenceError,
    SpectralResult,
    UnsupportedSizeError,
    characteristic_polynomial,
    spectral_radius_charpoly,
    spectral_radius_power,
)

__version__ = "0.1.0"

__all__ = [
    "BoundReport",
    "CampaignConfig",
    "CampaignResult",
    "CertificateViolationError",
    "CHECKS",
    "ConvergenceError",
    "CSV_COLUMNS",
    "DegreeSequence",
    "DOMINATING",
    "EQUAL",
    "EqualityCertificate",
    "Graph",
    "GraphParseError",
    "GREATER",
    "LESS",
    "NONE",
    "PhiSequence",
    "REGULAR",
    "ScalingCertificate",
    "SpectralResult",
    "UnsupportedSizeError",
    "bound_brualdi_hoffman",
    "bound_hong",
    "bound_hong_shu_fang",
    "bound_max_degree",
    "bound_report",
    "bound_shu_wu",
    "bound_stanley",
    "characteristic_polynomial",
    "check_equality_numeric",
    "classify_equality",
    "compare_step",
    "degree_sequence",
    "encode_graph6",
    "enumerate_connected",
    "gen_join_dominating",
    "gen_named",
    "is_connected",
    "is_connected_union_find",
    "is_graphical",
    "min_phi",
    "parse_edge_list",
    "parse_graph6",
    "phi",
    "phi_sequence",
    "row_sums_scaled",
    "run_campaign",
    "scaling_vector",
    "spectral_radius_charpoly",
    "spectral_radius_power",
    "tight_levels",
]
