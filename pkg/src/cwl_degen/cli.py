"""Command line front end.

    cwl-degen betti --of quotient veronese.ideal
    cwl-degen theorem minors.ideal --ideal I

Exit status: 0 success or VERIFIED, 2 HYPOTHESES_FAIL, 3 VIOLATION_FOUND
(also a failed lemma assertion, a probe counterexample or a failed
fiber-full equivalence), 1 on any error.
"""

from __future__ import annotations

import argparse
import io
import sys

from .betti import (
    IDEAL, QUOTIENT, BettiTable, betti_table, is_componentwise_linear,
    regularity,
)
from .core.parser import ParseError, parse_input
from .groebner import Ideal
from .lab import (
    HYPOTHESES_FAIL, VERIFIED, VIOLATION_FOUND, FindingsLog, ViolationError,
    WeightError, corollary_check, fiber_full_equivalence_check,
    fiber_full_up_to, find_weight_vector, full_report, homogenize_ideal,
    lemma2_report, lemma3_report, open_question_probe, theorem_check,
)
from .monomial import hilbert_function, hilbert_numerator

EXIT_OK, EXIT_ERROR, EXIT_HYPOTHESES, EXIT_VIOLATION = 0, 1, 2, 3
_VERDICT_EXIT = {VERIFIED: EXIT_OK, HYPOTHESES_FAIL: EXIT_HYPOTHESES, VIOLATION_FOUND: EXIT_VIOLATION}


class UsageError(Exception):
    pass


def render_betti_table(table: BettiTable, mode: str = "table") -> str:
    """Grid with rows j - i and columns i, or ``beta i j v`` records."""
    if mode == "records":
        return "\n".join("beta %d %d %d" % rec for rec in table.records())
    if table.is_zero():
        return "(zero ideal)" if table.kind == IDEAL else "(zero module)"
    cols = range(table.projective_dimension() + 1)
    shifts = [j - i for i, j in table.entries]
    rows = range(min(shifts), max(shifts) + 1)
    cell = {(i, j - i): v for (i, j), v in table.entries.items()}
    width = max(len(str(v)) for v in table.entries.values())
    label = max(len("%d:" % r) for r in rows)
    lines = [" " * label + " " + " ".join(str(i).rjust(width) for i in cols)]
    for r in rows:
        entries = [str(cell[(i, r)]) if (i, r) in cell else "." for i in cols]
        lines.append(("%d:" % r).rjust(label) + " " + " ".join(e.rjust(width) for e in entries))
    return "\n".join(lines)


def render_report(report) -> str:
    lines = [
        "statement: %s" % report.statement,
        "ideal: %s" % report.ideal_id,
        report.ring_header,
        "field: GF(%d)" % report.characteristic,
        "hypotheses:",
    ]
    lines += ["  [%s] %s" % ("ok" if h.ok else "FAIL", h) for h in report.hypotheses]
    lines.append("conclusions:")
    if report.conclusions:
        lines += ["  [%s] %s" % ("ok" if c.ok else "FAIL", c) for c in report.conclusions]
    else:
        lines.append("  (not checked: hypotheses fail)")
    for title, table in (("betti(I)", report.table_ideal), ("betti(in(I))", report.table_initial)):
        if table is not None:
            lines.append(title + ":")
            lines += ["  " + s for s in render_betti_table(table).splitlines()]
    if report.notes:
        lines.append("notes:")
        lines += ["  " + s for s in report.notes]
    lines.append("verdict: %s" % report.verdict)
    return "\n".join(lines)


def _bool(b) -> str:
    return "true" if b else "false"


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="cwl-degen", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def cmd(name, help):
        p = sub.add_parser(name, help=help)
        p.add_argument("path", help="ideal file")
        p.add_argument("--ideal", "-i", default="I", help="ideal name in the file (default I)")
        p.add_argument("--findings", default="findings.txt",
                       help="append violations here (default findings.txt)")
        p.add_argument("--mode", choices=("table", "records"), default="table")
        return p

    cmd("gb", "reduced Groebner basis")
    cmd("initial", "initial ideal")
    cmd("betti", "graded Betti table").add_argument(
        "--of", choices=(IDEAL, QUOTIENT), default=QUOTIENT)
    cmd("hilbert", "Hilbert numerator and values").add_argument("--degree", type=int)
    cmd("reg", "Castelnuovo-Mumford regularity of the ideal")
    cmd("cwl", "componentwise linearity")
    cmd("lemma2", "three-way truncation equivalence").add_argument("--degree", type=int, required=True)
    cmd("lemma3", "initial ideal of m^d J").add_argument("--degree", type=int, required=True)
    cmd("theorem", "theorem hypotheses and conclusions")
    cmd("corollary", "corollary hypotheses and conclusions")
    cmd("probe", "open-question probe")
    cmd("weight", "weight vector selecting the leading terms")
    cmd("homogenize", "w-homogenized Groebner basis").add_argument(
        "--weights", help="comma separated weights (default: computed)")
    cmd("fiberfull", "fiber-full up to h (Betti criterion)").add_argument("--h", type=int, required=True)
    cmd("fiberfull-equiv", "fiber-full-3 versus full equality")
    cmd("report", "full pipeline")
    return ap


def load_ideal(path: str, name: str) -> Ideal:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise UsageError("cannot read %s: %s" % (path, exc.strerror))
    ring, ideals = parse_input(text)
    if name not in ideals:
        avail = ", ".join(sorted(ideals)) or "none"
        raise UsageError("no ideal named %r in %s (available: %s)" % (name, path, avail))
    return Ideal(ring, ideals[name])


def _dispatch(args, out) -> int:
    I = load_ideal(args.path, args.ideal)
    findings = FindingsLog(args.findings)
    c = args.command
    if c == "gb":
        print(str(I.gb) if len(I.gb) else "(empty basis)", file=out)
    elif c == "initial":
        print(I.initial(), file=out)
    elif c == "betti":
        print(render_betti_table(betti_table(I, args.of), args.mode), file=out)
    elif c == "hilbert":
        M = I.initial()
        print("numerator: %s" % hilbert_numerator(M), file=out)
        if args.degree is not None:
            if args.degree < 0:
                raise UsageError("--degree must be nonnegative")
            print("HF(R/I, %d) = %d" % (args.degree, hilbert_function(M, args.degree, QUOTIENT)), file=out)
            print("HF(I, %d) = %d" % (args.degree, hilbert_function(M, args.degree, IDEAL)), file=out)
    elif c == "reg":
        print("regularity: %d" % regularity(I), file=out)
    elif c == "cwl":
        rep = is_componentwise_linear(I)
        print("componentwise linear: %s" % _bool(rep), file=out)
        for d, ok in rep.degrees:
            print("  degree %d: %s" % (d, "linear" if ok else "not linear"), file=out)
    elif c == "lemma2":
        r = lemma2_report(I, args.degree, findings)
        print("lemma2 d=%d: i=%s ii=%s iii=%s" % (r.degree, _bool(r.cond_i), _bool(r.cond_ii), _bool(r.cond_iii)), file=out)
    elif c == "lemma3":
        r = lemma3_report(I, args.degree, findings)
        if not r.precondition:
            print("lemma3 d=%d: precondition violated (%s)" % (r.degree, r.reason), file=out)
            return EXIT_HYPOTHESES
        print("lemma3 d=%d: initialCommutes=%s betti0Equal=%s"
              % (r.degree, _bool(r.initial_commutes), _bool(r.betti0_equal)), file=out)
    elif c in ("theorem", "corollary", "report"):
        fn = {"theorem": theorem_check, "corollary": corollary_check, "report": full_report}[c]
        rep = fn(I, args.ideal, findings)
        print(render_report(rep), file=out)
        return _VERDICT_EXIT[rep.verdict]
    elif c == "probe":
        r = open_question_probe(I, findings)
        print("applicable: %s" % _bool(r.applicable), file=out)
        print("h: %s" % ("-" if r.h is None else r.h), file=out)
        if r.applicable:
            print("square-free truncation: %s" % _bool(r.square_free_truncation), file=out)
            if not r.square_free_truncation:
                return EXIT_VIOLATION
    elif c == "weight":
        print("w = %s" % ",".join(map(str, find_weight_vector(I.gb))), file=out)
    elif c == "homogenize":
        if args.weights:
            try:
                w = tuple(int(x) for x in args.weights.split(","))
            except ValueError:
                raise UsageError("bad --weights %r" % args.weights)
        else:
            w = find_weight_vector(I.gb)
        print("w = %s" % ",".join(map(str, w)), file=out)
        for g in homogenize_ideal(I, w):
            print(g, file=out)
    elif c == "fiberfull":
        print("fiber-full up to %d: %s" % (args.h, _bool(fiber_full_up_to(I, args.h))), file=out)
    elif c == "fiberfull-equiv":
        r = fiber_full_equivalence_check(I, findings)
        print("applicable: %s" % _bool(r.applicable), file=out)
        if r.applicable:
            print("fiber-full up to 3: %s" % _bool(r.fiber_full_3), file=out)
            print("full Betti equality: %s" % _bool(r.full_equality), file=out)
            print("holds: %s" % _bool(r.holds), file=out)
            if not r.holds:
                return EXIT_VIOLATION
    return EXIT_OK


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    buf = io.StringIO()
    try:
        args = build_parser().parse_args(argv)
        code = _dispatch(args, buf)
        # nothing is printed unless the command ran to completion
        out.write(buf.getvalue())
        return code
    except ViolationError as exc:
        print("violation: %s" % exc, file=err)
        return EXIT_VIOLATION
    except (UsageError, ParseError, WeightError, ValueError) as exc:
        print("error: %s" % exc, file=err)
        return EXIT_ERROR


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
