"""Exit criteria. Each test is one criterion; a PASS/FAIL line per criterion
is printed in the terminal summary."""

import subprocess
import sys
import time

import pytest

from binomid.beta import sweep_beta_recurrences
from binomid.identity import (
    verify_boundary,
    verify_gamma_recurrence,
    verify_l_independence,
    verify_lambda_recurrence_sweep,
    verify_theorem,
)
from binomid.qalgebra import sweep_q_kernel, sweep_q_recurrences, sweep_q_specialization
from binomid.telescope import (
    Affine,
    BinomialProductTerm,
    Factor,
    RationalFunction,
    beta_inner_recurrence,
    gosper,
    term_ratio,
    verify_certificate,
    zeilberger,
)


def _timed(fn, *args, **kw):
    t = time.perf_counter()
    out = fn(*args, **kw)
    return out, time.perf_counter() - t


@pytest.mark.acceptance("1 theorem sweep s<=40 (and timing)")
def test_theorem_sweep():
    small, t_small = _timed(verify_theorem, 20, jobs=1)
    assert small.ok and t_small < 5.0
    full, t_full = _timed(verify_theorem, 40, jobs=1)
    assert full.ok, full.failures[:5]
    # every (s, l, j) with 0 <= l <= s <= 40, -1 <= j <= s+1
    assert full.cases_checked == sum((s + 1) * (s + 3) for s in range(41))
    assert t_full < 120.0


@pytest.mark.acceptance("2 beta shift recurrences s<=25 |b|<=25 m<=12")
def test_beta_recurrences():
    rep = sweep_beta_recurrences(25, 12, 25, jobs=1)
    assert rep.ok, rep.failures[:5]
    assert rep.cases_checked > 0


@pytest.mark.acceptance("3 Lambda recurrence s<=20")
def test_lambda_recurrence():
    rep = verify_lambda_recurrence_sweep(20, jobs=1)
    assert rep.ok, rep.failures[:5]
    expected = sum((l // 2 + 2) * (s + 2) for s in range(21) for l in range(s + 1))
    assert rep.cases_checked == expected


@pytest.mark.acceptance("4 Gamma boundary values s<=25")
def test_boundary():
    rep = verify_boundary(25, width=3, jobs=1)
    assert rep.ok, rep.failures[:5]
    assert rep.cases_checked == sum((s + 1) * 7 for s in range(26))


@pytest.mark.acceptance("5 Gamma Pascal recurrence s<=25")
def test_gamma_recurrence():
    rep = verify_gamma_recurrence(25, jobs=1)
    assert rep.ok, rep.failures[:5]


@pytest.mark.acceptance("6 l-independence s<=25")
def test_l_independence():
    rep = verify_l_independence(25, jobs=1)
    assert rep.ok, rep.failures[:5]


@pytest.mark.acceptance("7 q-recurrences and q=1 specialization s<=12 m<=6")
def test_q_recurrences():
    rep = sweep_q_recurrences(12, 6, jobs=1)
    assert rep.ok, rep.failures[:5]
    spec = sweep_q_specialization(12, 6, jobs=1)
    assert spec.ok, spec.failures[:5]


@pytest.mark.acceptance("8 q-kernel self-checks n<=30")
def test_q_kernel():
    rep = sweep_q_kernel(30, jobs=1)
    assert rep.ok, rep.failures[:5]
    checks = {dict(f.params)["check"] for f in rep.failures}
    assert not checks
    assert rep.cases_checked == sum(3 * (n + 1) for n in range(31)) + sum(n + 1 for n in range(1, 31))


@pytest.mark.acceptance("9 telescoper corpus")
def test_telescoper_corpus():
    lin = Factor("linear", arg=Affine(1, 0))
    fac = Factor("factorial", arg=Affine(1, 0))
    n_fact = BinomialProductTerm((lin, fac))
    cert = gosper(term_ratio(n_fact))
    assert cert is not None and cert.R == RationalFunction.from_expr(1 / n_fact.v, n_fact.v)
    rep = verify_certificate(n_fact, cert, range(1, 21))
    assert rep.ok and rep.cases_checked == 20

    assert gosper(term_ratio(BinomialProductTerm((fac,)))) is None

    col = Factor("binomial", top=Affine(0, 0, 1), bottom=Affine(1, 0))
    row = BinomialProductTerm((col,), var="k", outer="n")
    square = BinomialProductTerm((col, col), var="k", outer="n")
    rec = zeilberger(row)
    assert str(rec) == "f(n+1) - 2*f(n) = 0"
    rec2 = zeilberger(square)
    s = rec2.outer
    assert rec2.order == 1 and [c.as_expr() for c in rec2.coeffs] == [-2 * (2 * s + 1), s + 1]

    pts = [(N, k) for N in range(1, 8) for k in range(N)][:20]
    for F, r in ((row, rec), (square, rec2)):
        rep = verify_certificate(F, r, pts)
        assert rep.ok and rep.cases_checked == 20


BETA_TUPLES = [
    (0, 0, 0, 0),
    (1, 1, 1, 0),
    (1, 0, -1, 1),
    (2, 1, -1, 1),
    (2, 2, 0, 1),
    (2, 0, 2, 1),
    (3, 2, 1, 2),
    (3, 1, -2, 1),
    (3, 3, -3, 0),
    (4, 2, -2, 2),
    (4, 3, 1, 1),
    (4, 1, 2, 2),
]


@pytest.mark.acceptance("10 beta inner-sum telescoping, >=10 tuples with l<=4")
def test_beta_inner_sum():
    passed = 0
    for l, a, b, m in BETA_TUPLES:
        (rec, rep), dt = _timed(beta_inner_recurrence, l, a, b, m, max_order=4)
        assert dt < 10.0, (l, a, b, m, dt)
        assert rec is not None and rec.order <= 4
        assert rep.box["s_hi"] - rep.box["s_lo"] + 1 == 15
        assert rep.ok, (l, a, b, m, rep.failures[:3])
        passed += 1
    assert passed >= 10


@pytest.mark.acceptance("11 byte-identical JSON for --jobs 1 and --jobs 8")
def test_cli_determinism():
    outs = []
    for jobs in ("1", "8"):
        proc = subprocess.run(
            [sys.executable, "-m", "binomid", "verify", "theorem", "--s-max", "15", "--format", "json", "--jobs", jobs],
            capture_output=True,
            check=True,
        )
        outs.append(proc.stdout)
    assert outs[0] == outs[1]
    assert b'"failures": []' in outs[0]
