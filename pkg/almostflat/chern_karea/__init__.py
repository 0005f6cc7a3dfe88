from .chern import chern_number, face_fluxes, face_loops
from .karea import (
    TORUS_TREE,
    CFlatReport,
    KAreaProbe,
    LoopCheck,
    ProbeTerm,
    ProbeVerdict,
    c_flat_check,
    clock_shift_probe,
    clock_shift_torus_bundle,
    probe_verdict
)
