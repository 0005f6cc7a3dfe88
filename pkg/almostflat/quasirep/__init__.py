from .almost_rep import (
    AlmostRep,
    ConjugateFactor,
    SubstitutionReport,
    clock_shift,
    closeness,
    commutator_presentation,
    defect,
    embed,
    evaluate_word,
    reduce_word,
    rep_direct_sum,
    substitute,
    substitution_closeness
)
from .conversion import bundle_to_rep, relation_reports, rep_to_bundle
from .sequence import RepSequence
