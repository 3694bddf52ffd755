"""Executable verdicts for componentwise linearity under Groebner degeneration."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from ..betti import (
    IDEAL, QUOTIENT, BettiTable, beta0, betti_table, is_componentwise_linear,
    regularity,
)
from ..groebner import (
    Ideal, component_ideal, graded_piece_basis, ideal_up_to_degree,
    max_ideal_times,
)
from ..monomial import (
    MonomialIdeal, is_square_free, scale_by_max_ideal_power, trunc_geq, trunc_leq,
)
from .findings import default_log

HYPOTHESES_FAIL = "HYPOTHESES_FAIL"
VERIFIED = "VERIFIED"
VIOLATION_FOUND = "VIOLATION_FOUND"


class NonGradedOrder(ValueError):
    pass


class ViolationError(AssertionError):
    """An implication that must hold was observed to fail."""


def _require_graded(I: Ideal):
    if not I.ring.order.is_graded:
        raise NonGradedOrder("order %s is not graded" % I.ring.order)
    if not I.is_homogeneous():
        raise ValueError("ideal is not homogeneous")


def _log(findings, kind, I, where):
    log = findings if findings is not None else default_log()
    if log is not None:
        log.record(kind, I, where)


def _tf(b) -> str:
    return "-" if b is None else "true" if b else "false"


def _monomial_list(M: MonomialIdeal, monos) -> str:
    return ", ".join(M.ring.format_monomial(m) for m in monos)


def first_difference(A: BettiTable, B: BettiTable, max_i: int = None):
    for ij in sorted(A.support() | B.support()):
        if max_i is not None and ij[0] > max_i:
            continue
        if A[ij] != B[ij]:
            return ij
    return None


# -- lemmas -----------------------------------------------------------------

@dataclass
class Lemma2Report:
    degree: int
    cond_i: bool
    cond_ii: bool
    cond_iii: bool
    beta0_component: int
    beta0_initial_component: int

    @property
    def agree(self) -> bool:
        return self.cond_i == self.cond_ii == self.cond_iii


def lemma2_report(I: Ideal, d: int, findings=None) -> Lemma2Report:
    """The three equivalent conditions, each computed on its own."""
    _require_graded(I)
    if d < 1:
        raise ValueError("degree must be positive")
    inI = I.initial()
    comp = component_ideal(I, d)
    in_comp = comp.initial()
    b0 = len(graded_piece_basis(I, d))
    b0_in = len(in_comp)
    report = Lemma2Report(
        d,
        b0 == b0_in,
        in_comp == trunc_geq(inI, d),
        ideal_up_to_degree(I, d).initial() == trunc_leq(inI, d),
        b0,
        b0_in,
    )
    if not report.agree:
        _log(findings, "LEMMA2_DISAGREEMENT", I, "d=%d" % d)
        raise ViolationError("conditions disagree at d=%d: %s" % (d, report))
    return report


@dataclass
class Lemma3Report:
    degree: int
    precondition: bool
    initial_commutes: Optional[bool] = None
    betti0_equal: Optional[bool] = None
    reason: str = ""


def lemma3_report(J: Ideal, d: int, findings=None) -> Lemma3Report:
    _require_graded(J)
    if d < 1:
        raise ValueError("degree must be positive")
    degs = J.generator_degrees()
    if len(degs) != 1:
        return Lemma3Report(d, False, reason="not generated in a single degree")
    a = degs[0]
    inJ = J.initial()
    if beta0(J) != len(inJ):
        return Lemma3Report(d, False, reason="beta0(J) = %d != beta0(in J) = %d" % (beta0(J), len(inJ)))
    mdJ = max_ideal_times(J, d)
    in_mdJ = mdJ.initial()
    commutes = in_mdJ == scale_by_max_ideal_power(inJ, d)
    equal = len(graded_piece_basis(mdJ, a + d)) == len(in_mdJ)
    report = Lemma3Report(d, True, commutes, equal)
    if not (commutes and equal):
        _log(findings, "LEMMA3_FAILURE", J, "d=%d" % d)
        raise ViolationError("m^%d J fails: %s" % (d, report))
    return report


# -- reports ----------------------------------------------------------------

@dataclass
class Check:
    name: str
    ok: bool
    witness: str = ""

    def __str__(self):
        s = "%s = %s" % (self.name, "true" if self.ok else "false")
        return s + (": " + self.witness if self.witness else "")


@dataclass
class DegenerationReport:
    ideal_id: str
    ring_header: str
    order: str
    characteristic: int
    statement: str
    hypotheses: list = field(default_factory=list)
    conclusions: list = field(default_factory=list)
    table_ideal: Optional[BettiTable] = None
    table_initial: Optional[BettiTable] = None
    verdict: str = HYPOTHESES_FAIL
    notes: list = field(default_factory=list)

    def failed_hypotheses(self) -> list:
        return [h for h in self.hypotheses if not h.ok]


def _new_report(I: Ideal, name: str, statement: str) -> DegenerationReport:
    return DegenerationReport(name, I.ring.header(), str(I.ring.order), I.ring.p, statement)


def _square_free_check(inI: MonomialIdeal) -> Check:
    bad = [g for g in inI.gens if any(e > 1 for e in g)]
    return Check("squareFree(in)", not bad, _monomial_list(inI, bad))


def _cwl_check(name, I) -> Check:
    rep = is_componentwise_linear(I)
    wit = "" if rep else "no linear resolution in degree(s) %s" % ", ".join(map(str, rep.failing_degrees()))
    return Check(name, rep.componentwise_linear, wit)


def _tables_check(tI: BettiTable, tIn: BettiTable) -> Check:
    diff = first_difference(tI, tIn)
    wit = "" if diff is None else "(i,j)=(%d,%d): %d vs %d" % (diff + (tI[diff], tIn[diff]))
    return Check("betti(I) = betti(in)", diff is None, wit)


def _conclude(report, I, findings, kind):
    if all(c.ok for c in report.conclusions):
        report.verdict = VERIFIED
    else:
        report.verdict = VIOLATION_FOUND
        bad = "; ".join(str(c) for c in report.conclusions if not c.ok)
        _log(findings, kind, I, bad)


def theorem_check(I: Ideal, name: str = "I", findings=None) -> DegenerationReport:
    """cwl(I), square-free in(I) and in(I_<d>) = in(I)_<d> imply cwl(in(I))
    and equal Betti tables."""
    _require_graded(I)
    report = _new_report(I, name, "theorem")
    inI = I.initial()
    J = Ideal.from_monomials(inI)
    top = inI.max_degree()
    bad_degrees = [d for d in range(1, top + 1)
                   if component_ideal(I, d).initial() != trunc_geq(inI, d)]
    report.hypotheses = [
        _cwl_check("componentwiseLinear(I)", I),
        _square_free_check(inI),
        Check("in(I_<d>) = in(I)_<d> for d in 1..%d" % top if top else "in(I_<d>) = in(I)_<d> (no degrees)",
              not bad_degrees,
              "fails at d = %s" % ", ".join(map(str, bad_degrees)) if bad_degrees else ""),
    ]
    if top:
        report.notes.append("degree range 1..%d suffices: for larger d, I_<=d = I and in(I)_<=d = in(I)" % top)
    report.notes.append("componentwise linearity checked for d between the least and largest generator degree")
    report.table_ideal = betti_table(I, IDEAL)
    report.table_initial = betti_table(J, IDEAL)
    if report.failed_hypotheses():
        report.verdict = HYPOTHESES_FAIL
        return report
    report.conclusions = [
        _cwl_check("componentwiseLinear(in)", J),
        _tables_check(report.table_ideal, report.table_initial),
    ]
    _conclude(report, I, findings, VIOLATION_FOUND + " theorem")
    return report


def corollary_check(I: Ideal, name: str = "I", findings=None) -> DegenerationReport:
    """Square-free in(I) with beta0(I) = beta0(in(I)): cwl(I) iff cwl(in(I))."""
    _require_graded(I)
    report = _new_report(I, name, "corollary")
    inI = I.initial()
    J = Ideal.from_monomials(inI)
    b0, b0_in = beta0(I), len(inI)
    report.hypotheses = [
        _square_free_check(inI),
        Check("beta0(I) = beta0(in)", b0 == b0_in, "%d vs %d" % (b0, b0_in)),
    ]
    report.table_ideal = betti_table(I, IDEAL)
    report.table_initial = betti_table(J, IDEAL)
    if report.failed_hypotheses():
        report.verdict = HYPOTHESES_FAIL
        return report
    cwl_I = _cwl_check("componentwiseLinear(I)", I)
    cwl_in = _cwl_check("componentwiseLinear(in)", J)
    report.conclusions = [Check("cwl(I) <=> cwl(in)", cwl_I.ok == cwl_in.ok,
                                "%s; %s" % (cwl_I, cwl_in))]
    if cwl_I.ok or cwl_in.ok:
        report.conclusions.append(_tables_check(report.table_ideal, report.table_initial))
    _conclude(report, I, findings, VIOLATION_FOUND + " corollary")
    return report


@dataclass
class ProbeResult:
    applicable: bool
    square_free_truncation: Optional[bool] = None
    h: Optional[int] = None


def open_question_probe(I: Ideal, findings=None) -> ProbeResult:
    """Is in(I_<=h-1) square-free when I is cwl, in(I) square-free, h = reg(I)?"""
    _require_graded(I)
    if I.is_zero():
        return ProbeResult(False)
    h = regularity(I)
    inI = I.initial()
    if not (h >= 2 and is_square_free(inI) and is_componentwise_linear(I)):
        return ProbeResult(False, None, h)
    ok = is_square_free(ideal_up_to_degree(I, h - 1).initial())
    if not ok:
        _log(findings, "OPEN_QUESTION_COUNTEREXAMPLE", I, "d=%d" % (h - 1))
    return ProbeResult(True, ok, h)


# -- fiber-fullness ---------------------------------------------------------

def fiber_full_up_to(I: Ideal, h: int) -> bool:
    """beta_{i,j}(R/I) = beta_{i,j}(R/in(I)) for all i <= h - 2."""
    _require_graded(I)
    if h < 2:
        raise ValueError("h must be at least 2")
    tI = betti_table(I, QUOTIENT)
    tIn = betti_table(Ideal.from_monomials(I.initial()), QUOTIENT)
    return first_difference(tI, tIn, max_i=h - 2) is None


@dataclass
class FiberFullEquivalence:
    applicable: bool
    holds: Optional[bool] = None
    fiber_full_3: Optional[bool] = None
    full_equality: Optional[bool] = None


def fiber_full_equivalence_check(I: Ideal, findings=None) -> FiberFullEquivalence:
    """Under cwl(I) with square-free in(I), or cwl(in(I)): fiber-full up to 3
    iff fiber-full up to every h."""
    _require_graded(I)
    inI = I.initial()
    J = Ideal.from_monomials(inI)
    cond_i = is_square_free(inI) and bool(is_componentwise_linear(I))
    cond_ii = bool(is_componentwise_linear(J))
    if not (cond_i or cond_ii):
        return FiberFullEquivalence(False)
    ff3 = fiber_full_up_to(I, 3)
    full = betti_table(I, QUOTIENT) == betti_table(J, QUOTIENT)
    holds = ff3 == full
    if not holds:
        _log(findings, "FIBER_FULL_EQUIVALENCE_FAILURE", I, "fiber-full-3=%s full=%s" % (ff3, full))
    return FiberFullEquivalence(True, holds, ff3, full)


def full_report(I: Ideal, name: str = "I", findings=None) -> DegenerationReport:
    """Theorem and corollary checks plus every side computation, in one report."""
    from .weights import find_weight_vector, homogenize_ideal

    thm = theorem_check(I, name, findings)
    cor = corollary_check(I, name, findings)
    report = _new_report(I, name, "full")
    report.hypotheses = [Check("theorem: " + h.name, h.ok, h.witness) for h in thm.hypotheses]
    report.hypotheses += [Check("corollary: " + h.name, h.ok, h.witness) for h in cor.hypotheses]
    report.conclusions = [Check("theorem: " + c.name, c.ok, c.witness) for c in thm.conclusions]
    report.conclusions += [Check("corollary: " + c.name, c.ok, c.witness) for c in cor.conclusions]
    report.table_ideal, report.table_initial = thm.table_ideal, thm.table_initial
    violation = VIOLATION_FOUND in (thm.verdict, cor.verdict)
    notes = ["theorem verdict: " + thm.verdict, "corollary verdict: " + cor.verdict]
    notes += thm.notes
    inI = I.initial()
    notes.append("in(I) = %s" % inI)
    if not I.is_zero():
        notes.append("reg(I) = %d, reg(in) = %d" % (regularity(I), regularity(Ideal.from_monomials(inI))))
    for d in range(1, max(inI.max_degree(), 1) + 1):
        try:
            r = lemma2_report(I, d, findings)
            notes.append("lemma2 d=%d: (%s)" % (d, ", ".join(_tf(b) for b in (r.cond_i, r.cond_ii, r.cond_iii))))
        except ViolationError as exc:
            violation = True
            notes.append("lemma2 d=%d: VIOLATION %s" % (d, exc))
    probe = open_question_probe(I, findings)
    notes.append("open-question probe: applicable=%s squareFreeTruncation=%s h=%s"
                 % (_tf(probe.applicable), _tf(probe.square_free_truncation), "-" if probe.h is None else probe.h))
    violation |= probe.square_free_truncation is False
    w = find_weight_vector(I.gb)
    notes.append("weight vector: %s" % ",".join(map(str, w)))
    for g in homogenize_ideal(I, w):
        notes.append("  hom_w: %s" % g)
    ff = fiber_full_equivalence_check(I, findings)
    notes.append("fiber-full equivalence: applicable=%s holds=%s" % (_tf(ff.applicable), _tf(ff.holds)))
    violation |= ff.holds is False
    report.notes = notes
    if violation:
        report.verdict = VIOLATION_FOUND
    elif VERIFIED in (thm.verdict, cor.verdict):
        report.verdict = VERIFIED
    else:
        report.verdict = HYPOTHESES_FAIL
    return report
