from .bounds import HcConstants, hc_constants, product_perturbation_bound, two_simplex_bound
from .transport import (
    TransportResult,
    WitnessedBoundReport,
    edge_transport,
    loop_defect,
    path_transport,
    verify_witnessed_bound
)
