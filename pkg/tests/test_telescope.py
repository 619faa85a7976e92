from fractions import Fraction
from math import comb, factorial

import pytest
import sympy as sp

from binomid.beta import beta
from binomid.telescope import (
    Affine,
    BinomialProductTerm,
    Factor,
    GosperCertificate,
    RationalFunction,
    UnsupportedTermError,
    beta_inner_recurrence,
    beta_summand,
    gosper,
    gosper_form,
    parse_term,
    term_ratio,
    verify_certificate,
    zeilberger,
)
from binomid.telescope.gosper import _shift, dispersion_set

n = sp.Symbol("n")


def binom(top, bottom):
    return Factor("binomial", top=top, bottom=bottom)


ROW = BinomialProductTerm((binom(Affine(0, 0, 1), Affine(1, 0)),), var="k", outer="n")
SQUARE = BinomialProductTerm((binom(Affine(0, 0, 1), Affine(1, 0)),) * 2, var="k", outer="n")
N_FACT = BinomialProductTerm((Factor("linear", arg=Affine(1, 0)), Factor("factorial", arg=Affine(1, 0))))
FACT = BinomialProductTerm((Factor("factorial", arg=Affine(1, 0)),))
POW2 = BinomialProductTerm((), z=Fraction(2))


# -- RationalFunction -------------------------------------------------------


def test_rational_function_normalization():
    r = RationalFunction.from_expr((2 * n + 2) / (4 * n**2 - 4), n)
    assert r.den.LC() == 1
    assert r == RationalFunction.from_expr(sp.Rational(1, 2) / (n - 1), n)
    assert r(3) == Fraction(1, 4)
    assert r(1) is None


# -- term ratios ------------------------------------------------------------


def test_ratio_of_fixed_binomial():
    t = BinomialProductTerm((binom(Affine(0, 10), Affine(1, 0)),))
    assert term_ratio(t) == RationalFunction.from_expr((10 - t.v) / (t.v + 1), t.v)


def test_ratio_of_power():
    assert term_ratio(POW2) == RationalFunction.from_expr(sp.Integer(2), POW2.v)


SUPPORTED = [
    ROW,
    SQUARE,
    N_FACT,
    FACT,
    POW2,
    BinomialProductTerm((binom(Affine(0, 0, 1), Affine(1, 0)),), var="k", outer="n", z=Fraction(-3, 2), alternating=True),
    BinomialProductTerm((binom(Affine(1, 20), Affine(-1, 30)), Factor("factorial", arg=Affine(-1, 40), exponent=-1))),
    beta_summand(1, 1, 1, 0),
    beta_summand(3, 2, -2, 2),
    beta_summand(4, 1, 3, 1),
]


@pytest.mark.parametrize("t", SUPPORTED)
def test_ratio_matches_pointwise_quotients(t):
    r = term_ratio(t)
    outer = range(4, 16) if t.outer else [0]
    checked = 0
    for w in outer:
        for v in range(-4, 40):
            a, b = t.value(v, w), t.value(v + 1, w)
            rv = r(v, w) if t.outer else r(v)
            if a in (None, 0) or b is None or rv is None:
                continue
            assert rv == Fraction(b) / a
            checked += 1
    assert checked >= 10


@pytest.mark.parametrize("t", [ROW, SQUARE, beta_summand(2, 1, -1, 1), beta_summand(3, 2, 2, 1)])
def test_outer_ratio_matches_pointwise(t):
    r = term_ratio(t, along="outer")
    checked = 0
    for w in range(3, 16):
        for v in range(0, 5):
            a, b = t.value(v, w), t.value(v, w + 1)
            rv = r(v, w)
            if a in (None, 0) or b is None or rv is None:
                continue
            assert rv == Fraction(b) / a
            checked += 1
    assert checked >= 10


def test_unsupported_slopes():
    with pytest.raises(UnsupportedTermError):
        BinomialProductTerm((binom(Affine(2, 0), Affine(1, 0)),))
    with pytest.raises(UnsupportedTermError):
        BinomialProductTerm((binom(Affine(0, 0, 1), Affine(1, 0)),))  # outer slope without outer variable
    with pytest.raises(UnsupportedTermError):
        parse_term({"factors": [{"top": {"slope": 0, "constant": 3}, "bottom": {"slope": -2, "constant": 0}}]})


# -- Gosper -----------------------------------------------------------------


def test_gosper_form_properties():
    num = sp.Poly((n + 3) * (n + 1) ** 2, n)
    den = sp.Poly(n * (n + 5), n)
    a, b, c = gosper_form(num, den)
    lhs = sp.cancel(a.as_expr() / b.as_expr() * c.as_expr().subs(n, n + 1) / c.as_expr())
    assert sp.simplify(lhs - num.as_expr() / den.as_expr()) == 0
    for h in range(0, 10):
        assert a.gcd(_shift(b, h)).degree() == 0


def test_dispersion_set():
    assert dispersion_set(sp.Poly((n + 4) * (n - 1), n), sp.Poly(n * (n + 2), n)) == [2, 4]
    assert dispersion_set(sp.Poly(n, n), sp.Poly(n + 3, n)) == []


def test_gosper_n_times_factorial():
    cert = gosper(term_ratio(N_FACT))
    assert cert is not None
    assert cert.R == RationalFunction.from_expr(1 / N_FACT.v, N_FACT.v)
    # the antidifference R(n) t(n) = n!
    for k in range(1, 21):
        T = lambda x: cert.R(x) * N_FACT.value(x)
        assert T(k + 1) - T(k) == k * factorial(k)
        assert T(k) == factorial(k)
    rep = verify_certificate(N_FACT, cert, range(1, 21))
    assert rep.cases_checked == 20 and rep.ok


def test_gosper_power_of_two():
    cert = gosper(RationalFunction.from_expr(sp.Integer(2), n))
    assert cert.R == RationalFunction.from_expr(sp.Integer(1), n)


def test_gosper_factorial_none():
    assert gosper(RationalFunction.from_expr(n + 1, n)) is None


def test_factorial_has_no_polynomial_solution_up_to_degree_8():
    # Gosper form of n+1 is a = n+1, b = 1, c = 1: (n+1) x(n+1) - x(n) = 1
    a, b, c = gosper_form(sp.Poly(n + 1, n), sp.Poly(1, n))
    assert (a.as_expr(), b.as_expr(), c.as_expr()) == (n + 1, 1, 1)
    for d in range(0, 9):
        cs = sp.symbols(f"x0:{d + 1}")
        x = sum(cs[i] * n**i for i in range(d + 1))
        eq = sp.Poly(sp.expand((n + 1) * x.subs(n, n + 1) - x - 1), n)
        assert sp.solve(eq.coeffs(), cs, dict=True) == []


def test_negative_control_wrong_sign():
    cert = gosper(term_ratio(N_FACT))
    bad = GosperCertificate(-cert.R)
    rep = verify_certificate(N_FACT, bad, range(1, 21))
    assert not rep.ok
    assert rep.failures[0].params == (("v", 1),)


# -- Zeilberger -------------------------------------------------------------


def test_zeilberger_binomial_row():
    rec = zeilberger(ROW)
    assert rec.order == 1
    assert str(rec) == "f(n+1) - 2*f(n) = 0"
    f = [sum(comb(N, k) for k in range(N + 1)) for N in range(17)]
    for N in range(16):
        a0, a1 = rec.coefficient_values(N)
        assert a1 * f[N + 1] + a0 * f[N] == 0


def test_zeilberger_binomial_square():
    rec = zeilberger(SQUARE)
    assert rec.order == 1
    s = rec.outer
    assert [c.as_expr() for c in rec.coeffs] == [-2 * (2 * s + 1), s + 1]
    f = [sum(comb(N, k) ** 2 for k in range(N + 1)) for N in range(14)]
    assert f == [comb(2 * N, N) for N in range(14)]
    for N in range(13):
        a0, a1 = rec.coefficient_values(N)
        assert a1 * f[N + 1] + a0 * f[N] == 0


@pytest.mark.parametrize("F", [ROW, SQUARE])
def test_zeilberger_certificate_pointwise(F):
    rec = zeilberger(F)
    pts = [(N, k) for N in range(0, 8) for k in range(-1, N + 2)]
    rep = verify_certificate(F, rec, pts)
    assert rep.ok and rep.cases_checked >= 20


def test_zeilberger_negative_control():
    rec = zeilberger(SQUARE)
    from binomid.telescope.zeilberger import Recurrence

    bad = Recurrence(rec.coeffs, -rec.certificate, rec.outer, rec.var)
    pts = [(N, k) for N in range(1, 6) for k in range(0, N + 1)]
    assert not verify_certificate(SQUARE, bad, pts).ok


def test_zeilberger_deterministic():
    a, b = zeilberger(beta_summand(3, 2, 1, 2)), zeilberger(beta_summand(3, 2, 1, 2))
    assert str(a) == str(b) and str(a.certificate) == str(b.certificate)
    assert a.coeffs[-1].LC() > 0


def test_zeilberger_needs_outer():
    with pytest.raises(UnsupportedTermError):
        zeilberger(FACT)


# -- beta inner sum ---------------------------------------------------------


def test_beta_inner_trivial():
    rec, rep = beta_inner_recurrence(0, 0, 0, 0)
    assert str(rec) == "f(s+1) - f(s) = 0"
    assert rep.ok


def test_beta_inner_111_against_beta():
    rec, rep = beta_inner_recurrence(1, 1, 1, 0, s_range=(2, 20))
    assert rep.ok and rep.cases_checked >= 19
    vals = {s: beta(s, 1, 1, 1, 0) for s in range(2, 22)}
    for s in range(2, 21):
        a = rec.coefficient_values(s)
        assert sum(a[i] * vals[s + i] for i in range(rec.order + 1)) == 0


def test_beta_inner_order_recorded():
    rec, rep = beta_inner_recurrence(2, 1, -1, 1)
    assert rep.ok
    assert rep.notes["order"] == rec.order <= 4


def test_parse_term_document():
    doc = {
        "var": "k",
        "outer": "n",
        "z": "1/2",
        "alternating": True,
        "factors": [{"top": {"outer": 1}, "bottom": {"slope": 1}}],
    }
    t = parse_term(doc)
    assert t.z == Fraction(1, 2) and t.alternating and t.outer == "n"
    assert t.value(3, 5) == -Fraction(comb(5, 3), 8)
