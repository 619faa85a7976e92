"""Command line: ``binomid eval|verify|telescope``.

Exit codes: 0 success, 1 a check failed, 2 usage or domain error,
3 no telescoping certificate/recurrence exists within the search limits.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Callable, Sequence

import yaml

from binomid import beta as beta_mod
from binomid import identity, qalgebra
from binomid.exact import DomainError, binomial
from binomid.report import VerificationReport, default_jobs, render

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_NONE = 0, 1, 2, 3


class UsageError(Exception):
    pass


EVAL_SUBJECTS: dict[str, tuple[tuple[str, ...], Callable]] = {
    "beta": (("s", "l", "a", "b", "m"), beta_mod.beta),
    "qbeta": (("s", "l", "a", "b", "m"), qalgebra.qbeta),
    "lambda": (("s", "l", "j", "m"), identity.lambda_m),
    "phi": (("s", "l", "j", "m"), identity.phi_m),
    "gamma": (("s", "l", "j"), identity.gamma),
    "theorem-lhs": (("s", "l", "j"), identity.theorem_lhs),
    "binomial": (("n", "r"), binomial),
    "qbinomial": (("n", "r"), qalgebra.qbinomial),
}


def parse_assignments(tokens: Sequence[str]) -> dict[str, int]:
    out: dict[str, int] = {}
    for tok in tokens:
        key, sep, value = tok.partition("=")
        if not sep or not key:
            raise UsageError(f"expected key=value, got {tok!r}")
        if key in out:
            raise UsageError(f"parameter {key!r} given twice")
        try:
            out[key] = int(value)
        except ValueError:
            raise UsageError(f"parameter {key!r} must be an integer, got {value!r}") from None
    return out


def _take(params: dict[str, int], names: Sequence[str], what: str) -> list[int]:
    missing = [n for n in names if n not in params]
    extra = sorted(set(params) - set(names))
    if missing or extra:
        raise UsageError(f"{what} takes {' '.join(n + '=' for n in names)}; missing {missing}, unexpected {extra}")
    return [params[n] for n in names]


def _nonneg(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError(f"must be nonnegative, got {v}")
    return v


def _positive(text: str) -> int:
    v = _nonneg(text)
    if v == 0:
        raise argparse.ArgumentTypeError("must be positive")
    return v


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


# -- eval -------------------------------------------------------------------


def cmd_eval(args) -> int:
    names, fn = EVAL_SUBJECTS[args.subject]
    values = _take(parse_assignments(args.params), names, args.subject)
    _emit(f"{fn(*values)}\n", args.out)
    return EXIT_OK


# -- verify -----------------------------------------------------------------


def _run_suite(args) -> VerificationReport:
    s, jobs = args.s_max, args.jobs
    m = args.m_max if args.m_max is not None else s // 2
    b = args.b_max
    suite = args.suite
    if suite == "beta-recurrences":
        return beta_mod.sweep_beta_recurrences(s, m, b, jobs=jobs)
    if suite == "lambda-recurrence":
        return identity.verify_lambda_recurrence_sweep(s, jobs=jobs)
    if suite == "theorem":
        return identity.verify_theorem(s, jobs=jobs)
    if suite == "boundary":
        return identity.verify_boundary(s, jobs=jobs)
    if suite == "gamma-recurrence":
        return identity.verify_gamma_recurrence(s, jobs=jobs)
    if suite == "l-independence":
        return identity.verify_l_independence(s, jobs=jobs)
    if suite == "phi-telescoping":
        return identity.verify_phi_telescoping(s, jobs=jobs)
    if suite == "q-recurrences":
        return qalgebra.sweep_q_recurrences(s, m, b, jobs=jobs)
    if suite == "q-specialization":
        return qalgebra.sweep_q_specialization(s, m, b, jobs=jobs)
    if suite == "q-kernel":
        return qalgebra.sweep_q_kernel(s, jobs=jobs)
    raise UsageError(f"unknown suite {suite!r}")


SUITES = (
    "beta-recurrences",
    "lambda-recurrence",
    "theorem",
    "boundary",
    "gamma-recurrence",
    "l-independence",
    "phi-telescoping",
    "q-recurrences",
    "q-specialization",
    "q-kernel",
)


def cmd_verify(args) -> int:
    report = _run_suite(args)
    _emit(render(report, args.format, timing=args.timing), args.out)
    return EXIT_OK if report.ok else EXIT_FAIL


# -- telescope --------------------------------------------------------------


def _range(text: str | None, default: tuple[int, int]) -> tuple[int, int]:
    if text is None:
        return default
    lo, sep, hi = text.partition(":")
    try:
        lo_i, hi_i = int(lo), int(hi)
    except ValueError:
        raise UsageError(f"--verify-range expects LO:HI, got {text!r}") from None
    if not sep or hi_i < lo_i:
        raise UsageError(f"--verify-range expects LO:HI with LO <= HI, got {text!r}")
    return lo_i, hi_i


def cmd_telescope(args) -> int:
    from binomid.telescope import (
        UnsupportedTermError,
        beta_inner_recurrence,
        check_recurrence_on_values,
        definite_sum,
        gosper,
        parse_term,
        term_ratio,
        verify_certificate,
        zeilberger,
    )

    docs = [t for t in args.inputs if "=" not in t]
    params = parse_assignments([t for t in args.inputs if "=" in t])
    lines: list[str] = []

    if args.target == "beta-inner":
        if docs:
            raise UsageError("give either a term document or --target, not both")
        l, a, b, m = _take(params, ("l", "a", "b", "m"), "beta-inner")
        s_range = _range(args.verify_range, None) if args.verify_range else None
        rec, report = beta_inner_recurrence(l, a, b, m, args.max_order, s_range)
        if rec is None:
            lines.append(f"no recurrence of order <= {args.max_order}")
            _emit("\n".join(lines) + "\n" + render(report, args.format, timing=args.timing), args.out)
            return EXIT_NONE
        lines += [f"recurrence: {rec}", f"certificate: {rec.certificate}"]
        _emit("\n".join(lines) + "\n" + render(report, args.format, timing=args.timing), args.out)
        return EXIT_OK if report.ok else EXIT_FAIL

    if len(docs) != 1 or params:
        raise UsageError("telescope needs exactly one term document (or --target beta-inner l= a= b= m=)")
    try:
        doc = yaml.safe_load(Path(docs[0]).read_text())
    except (OSError, yaml.YAMLError) as exc:
        raise UsageError(f"cannot read term document: {exc}") from None
    if not isinstance(doc, dict):
        raise UsageError("term document must be a mapping")
    try:
        term = parse_term(doc)
    except (UnsupportedTermError, KeyError, TypeError, ValueError) as exc:
        raise UsageError(f"bad term document: {exc}") from None

    mode = args.mode or doc.get("mode") or ("zeilberger" if term.outer else "gosper")
    if mode == "gosper":
        if term.outer:
            raise UsageError("gosper mode takes a term without an outer variable")
        lo, hi = _range(args.verify_range, (1, 20))
        cert = gosper(term_ratio(term))
        if cert is None:
            _emit("not Gosper-summable\n", args.out)
            return EXIT_NONE
        report = verify_certificate(term, cert, range(lo, hi + 1))
        lines.append(f"certificate: {cert}")
    elif mode == "zeilberger":
        lo, hi = _range(args.verify_range, (0, 14))
        rec = zeilberger(term, args.max_order)
        if rec is None:
            _emit(f"no recurrence of order <= {args.max_order}\n", args.out)
            return EXIT_NONE
        L = rec.order
        spread = sum(abs(p.constant) for f in term.factors for p in (f.top, f.bottom, f.arg) if p)
        window = 2 * (max(abs(lo), abs(hi + L)) + spread) + 5
        values = {s: definite_sum(term, s, window) for s in range(lo, hi + L + 1)}
        report = check_recurrence_on_values(rec, values, range(lo, hi + 1))
        pts = [(s, n) for s in range(lo, hi + 1) for n in range(-window, window + 1)]
        cert_rep = verify_certificate(term, rec, pts)
        report.cases_checked += cert_rep.cases_checked
        report.cases_skipped += cert_rep.cases_skipped
        report.failures = sorted(report.failures + cert_rep.failures, key=lambda f: f.key)
        report.identity = "telescope"
        lines += [f"recurrence: {rec}", f"certificate: {rec.certificate}"]
    else:
        raise UsageError(f"unknown mode {mode!r}")
    _emit("\n".join(lines) + "\n" + render(report, args.format, timing=args.timing), args.out)
    return EXIT_OK if report.ok else EXIT_FAIL


# -- parser -----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")
    common.add_argument("--jobs", type=_positive, default=default_jobs(), help="worker processes for sweeps")
    common.add_argument("--out", metavar="PATH", help="write output here instead of stdout")
    common.add_argument("--timing", action="store_true", help="include elapsed_ms in json/csv output")

    p = argparse.ArgumentParser(prog="binomid", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    pe = sub.add_parser("eval", parents=[common], help="evaluate one quantity exactly")
    pe.add_argument("subject", choices=sorted(EVAL_SUBJECTS))
    pe.add_argument("params", nargs="*", metavar="KEY=VALUE")
    pe.set_defaults(func=cmd_eval)

    pv = sub.add_parser("verify", parents=[common], help="run a verification sweep")
    pv.add_argument("suite", choices=SUITES)
    pv.add_argument("--s-max", type=_nonneg, default=10)
    pv.add_argument("--m-max", type=_nonneg, default=None, help="default: s_max // 2")
    pv.add_argument("--b-max", type=_nonneg, default=None, help="default: s_max")
    pv.set_defaults(func=cmd_verify)

    pt = sub.add_parser("telescope", parents=[common], help="Gosper / Zeilberger on a term")
    pt.add_argument("inputs", nargs="*", metavar="DOC|KEY=VALUE")
    pt.add_argument("--target", choices=("beta-inner",))
    pt.add_argument("--mode", choices=("gosper", "zeilberger"))
    pt.add_argument("--max-order", type=_positive, default=4)
    pt.add_argument("--verify-range", metavar="LO:HI")
    pt.set_defaults(func=cmd_telescope)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"binomid: usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DomainError as exc:
        print(f"binomid: domain error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
