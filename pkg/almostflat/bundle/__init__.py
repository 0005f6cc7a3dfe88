from .charts import BundleIso, GlobalTrivialization
from .cocycle_bundle import (
    AuditReport,
    CocycleBundle,
    CocycleReport,
    CocycleViolation,
    Pair,
    bundle_from_charts,
    bundle_from_edge_transports,
    cocycle_check,
    flatness_audit,
    identity_bundle
)
from .operations import block_diagonal, direct_sum, from_subdivision, pullback, to_subdivision
