from .functional_calculus import (
    expi_hermitian,
    polar_project,
    sqrt_one_plus_vsq,
    sqrt_one_plus_vsq_spectral,
    unitarize_g,
    unitary_eigenphases,
    unitary_log
)
from .norms import (
    dagger,
    distance_to_identity,
    is_skew,
    is_unitary,
    op_norm,
    op_norms,
    skew_project,
    unitarity_residual
)
