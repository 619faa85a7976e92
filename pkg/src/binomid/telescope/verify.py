"""Pointwise checking of Gosper certificates and telescoping recurrences."""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterable, Mapping

from binomid.beta import beta, check_beta_domain
from binomid.report import VerificationReport, Witness
from binomid.telescope.gosper import GosperCertificate
from binomid.telescope.terms import BinomialProductTerm, beta_summand
from binomid.telescope.zeilberger import Recurrence, zeilberger

__all__ = ["verify_certificate", "check_recurrence_on_values", "definite_sum", "beta_inner_recurrence"]

TermFn = Callable[..., "Fraction | int | None"]


def _as_fn(F: BinomialProductTerm | TermFn) -> TermFn:
    return F.value if isinstance(F, BinomialProductTerm) else F


def verify_certificate(
    F: BinomialProductTerm | TermFn,
    result: GosperCertificate | Recurrence,
    sample: Iterable,
) -> VerificationReport:
    """Check the defining identity of ``result`` at every sample point.

    For a certificate the sample holds values of ``v``; for a recurrence it
    holds ``(s, n)`` pairs. Points where the term is undefined or zero, or a
    denominator vanishes, are counted as skipped.
    """
    f = _as_fn(F)
    if isinstance(result, GosperCertificate):
        rep = VerificationReport("gosper-certificate", {"R": str(result.R)})
        R = result.R
        for v in sample:
            t0, t1 = f(v), f(v + 1)
            r0, r1 = R(v), R(v + 1)
            if t0 is None or t1 is None or t0 == 0 or r0 is None or r1 is None:
                rep.cases_skipped += 1
                continue
            rhs = r1 * t1 - r0 * t0
            rep.record({"v": v}, Witness(t0, rhs, Fraction(t0) == rhs))
        return rep

    rep = VerificationReport("telescoping-recurrence", {"recurrence": str(result)})
    cert = result.certificate
    for s, n in sample:
        vals = [f(n, s + i) for i in range(result.order + 1)]
        f0, f1 = vals[0], f(n + 1, s)
        c0, c1 = cert(n, s), cert(n + 1, s)
        if any(x is None for x in vals) or f1 is None or f0 == 0 or c0 is None or c1 is None:
            rep.cases_skipped += 1
            continue
        lhs = sum(a * x for a, x in zip(result.coefficient_values(s), vals))
        rhs = c1 * f1 - c0 * f0
        rep.record({"s": s, "n": n}, Witness(lhs, rhs, lhs == rhs))
    return rep


def check_recurrence_on_values(rec: Recurrence, values: Mapping[int, int | Fraction], s_points: Iterable[int]) -> VerificationReport:
    """Predict ``f(s+L)`` from the recurrence and compare with ``values``.

    Where the leading coefficient vanishes the full relation is checked
    instead of a prediction.
    """
    rep = VerificationReport("recurrence-prediction", {"recurrence": str(rec)})
    L = rec.order
    for s in s_points:
        if any(s + i not in values for i in range(L + 1)):
            rep.cases_skipped += 1
            continue
        a = rec.coefficient_values(s)
        if a[L] == 0:
            rel = sum(a[i] * values[s + i] for i in range(L + 1))
            rep.record({"s": s}, Witness(rel, 0, rel == 0))
            continue
        pred = -Fraction(sum(a[i] * values[s + i] for i in range(L)), a[L])
        rep.record({"s": s}, Witness(pred, values[s + L], pred == values[s + L]))
    return rep


def definite_sum(F: BinomialProductTerm, s: int, window: int) -> Fraction:
    """``sum_n F(s, n)`` over ``|n| <= window``; undefined points count as 0."""
    return sum((F.value(n, s) or 0 for n in range(-window, window + 1)), Fraction(0))


def beta_inner_recurrence(
    l: int,
    a: int,
    b: int,
    m: int,
    max_order: int = 4,
    s_range: tuple[int, int] | None = None,
) -> tuple[Recurrence | None, VerificationReport]:
    """Telescope the summand of ``beta_m(s, l, a, b)`` in ``n`` with ``s`` free.

    On success the recurrence is checked against :func:`binomid.beta.beta` by
    prediction on ``s_range`` (inclusive; default 15 points from
    ``max(l, a)``) and its certificate pointwise on the same s-range.
    """
    F = beta_summand(l, a, b, m)
    s0 = max(l, a, 0)
    lo, hi = s_range if s_range is not None else (s0, s0 + 14)
    check_beta_domain(lo, l, a)
    rec = zeilberger(F, max_order)
    box = {"l": l, "a": a, "b": b, "m": m, "max_order": max_order, "s_lo": lo, "s_hi": hi}
    rep = VerificationReport("beta-inner", box)
    if rec is None:
        rep.notes["recurrence"] = None
        return None, rep
    values = {s: beta(s, l, a, b, m) for s in range(lo, hi + rec.order + 1)}
    pred = check_recurrence_on_values(rec, values, range(lo, hi + 1))
    n_hi = abs(b) + m + 1
    pts = [(s, n) for s in range(lo, hi + 1) for n in range(-1, n_hi + 1)]
    cert = verify_certificate(F, rec, pts)
    rep.cases_checked = pred.cases_checked + cert.cases_checked
    rep.cases_skipped = pred.cases_skipped + cert.cases_skipped
    rep.failures = sorted(pred.failures + cert.failures, key=lambda f: f.key)
    rep.notes["recurrence"] = str(rec)
    rep.notes["order"] = rec.order
    rep.notes["certificate"] = str(rec.certificate)
    return rec, rep
