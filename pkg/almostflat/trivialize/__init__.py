from .chart_extension import BoundaryRule, boundary_sources, extend_family, global_charts, trivialization_rule
from .extension import (
    NewEdgeWitness,
    extend_skeleton,
    extend_skeleton_1to2,
    extend_subcomplex,
    face_defect_threshold
)
from .isomorphism import iso_between
from .trivializer import LoopCertificate, certify_tree_loops, trivialize, trivialize_contractible
