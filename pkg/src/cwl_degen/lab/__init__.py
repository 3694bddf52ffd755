from .checks import (
    HYPOTHESES_FAIL, VERIFIED, VIOLATION_FOUND, Check, DegenerationReport,
    FiberFullEquivalence, Lemma2Report, Lemma3Report, NonGradedOrder,
    ProbeResult, ViolationError, corollary_check, fiber_full_equivalence_check,
    fiber_full_up_to, full_report, lemma2_report, lemma3_report,
    open_question_probe, theorem_check,
)
from .findings import FindingsLog
from .weights import (
    ExtendedRingPolynomial, WeightError, find_weight_vector, homogenize_ideal,
    verify_weight_vector,
)
from ..groebner import component_ideal, ideal_up_to_degree
