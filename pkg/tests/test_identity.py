import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from binomid.exact import DomainError, binomial
from binomid.identity import (
    gamma,
    lambda_m,
    phi_m,
    theorem_lhs,
    verify_boundary,
    verify_gamma_recurrence,
    verify_l_independence,
    verify_lambda_recurrence,
    verify_lambda_recurrence_sweep,
    verify_phi_telescoping,
    verify_theorem,
)
from oracles import naive_lambda, naive_phi


def test_lambda_at_j0():
    for s in range(12):
        for l in range(s + 1):
            assert lambda_m(s, l, 0, 0) == 1
            for m in range(1, l // 2 + 2):
                assert lambda_m(s, l, 0, m) == 0


def test_lambda_l0_is_binomial():
    for s in range(15):
        for j in range(-2, s + 3):
            assert lambda_m(s, 0, j, 0) == (binomial(s, j) if j >= 0 else 0)


# frozen from the naive oracle in tests/oracles.py
@pytest.mark.parametrize("args, expected", [((5, 2, 1, 1), 8), ((5, 2, 1, 0), -3), ((8, 5, 3, 1), -30), ((6, 4, 3, 0), 0)])
def test_lambda_values(args, expected):
    assert naive_lambda(*args) == expected
    assert lambda_m(*args) == expected


def test_lambda_outside_range_vanishes():
    for s in range(10):
        for l in range(s + 1):
            for m in range(l // 2 + 2):
                for j in (-2, -1, s + 1, s + 2):
                    assert lambda_m(s, l, j, m) == 0


@pytest.mark.parametrize("args, expected", [((6, 3, 2, 0), 0), ((8, 5, 3, 1), -30), ((9, 6, 4, 1), -120)])
def test_phi_values(args, expected):
    assert naive_phi(*args) == expected
    assert phi_m(*args) == expected


def test_phi_from_rearranged_lemma():
    # Phi_0 = Lambda_0(s,l,j) + Lambda_0(s,l,j-1) - Lambda_0(s+1,l,j) + Phi_{-1}
    val = lambda_m(6, 3, 2, 0) + lambda_m(6, 3, 1, 0) - lambda_m(7, 3, 2, 0) + phi_m(6, 3, 2, -1)
    assert phi_m(6, 3, 2, 0) == val


def test_phi_trivial_cases():
    for s in range(8):
        for l in range(s + 1):
            for j in range(-1, s + 2):
                assert phi_m(s, l, j, -1) == 0
                if l <= 1:
                    assert phi_m(s, l, j, 0) == 0


ident_args = st.integers(0, 14).flatmap(
    lambda s: st.tuples(st.just(s), st.integers(0, s), st.integers(-2, s + 2), st.integers(0, s // 2 + 1))
)


@settings(max_examples=150)
@given(ident_args)
def test_lambda_phi_against_oracle(args):
    assert lambda_m(*args) == naive_lambda(*args)
    assert phi_m(*args) == naive_phi(*args)


@pytest.mark.parametrize("args", [(1, 2, 0, 0), (3, 1, 0, -1)])
def test_lambda_domain(args):
    with pytest.raises(DomainError):
        lambda_m(*args)


def test_gamma_examples():
    assert gamma(5, 3, 2) == 10
    assert theorem_lhs(5, 3, 2) == 10
    for s in range(10):
        for l in range(s + 1):
            assert gamma(s, l, 0) == 1
            assert gamma(s, l, -1) == gamma(s, l, s + 1) == 0


def test_theorem_lhs_l0():
    for s in range(15):
        for j in range(-1, s + 2):
            assert theorem_lhs(s, 0, j) == (binomial(s, j) if j >= 0 else 0)


@pytest.mark.parametrize("fn", [gamma, theorem_lhs])
def test_theorem_domain(fn):
    with pytest.raises(DomainError):
        fn(3, 4, 1)
    with pytest.raises(DomainError):
        fn(3, -1, 1)


@pytest.mark.parametrize("args", [(4, 2, 1, 0), (8, 5, 3, 1), (5, 0, 2, 0), (0, 0, 0, 0)])
def test_lambda_recurrence_examples(args):
    w = verify_lambda_recurrence(*args)
    assert w.holds


def test_lambda_recurrence_l0_has_no_phi():
    for s in range(8):
        for j in range(s + 2):
            assert phi_m(s, 0, j, 0) == 0
            assert verify_lambda_recurrence(s, 0, j, 0).holds


@pytest.mark.parametrize("args", [(2, 3, 1, 0), (4, 2, -1, 0), (4, 2, 1, -1)])
def test_lambda_recurrence_domain(args):
    with pytest.raises(DomainError):
        verify_lambda_recurrence(*args)


def test_verify_theorem_s0():
    r = verify_theorem(0)
    assert r.cases_checked == 3 and r.ok
    assert [theorem_lhs(0, 0, j) for j in (-1, 0, 1)] == [0, 1, 0]


def test_small_sweeps():
    assert verify_theorem(12).ok
    assert verify_boundary(10).ok
    assert verify_gamma_recurrence(10).ok
    assert verify_l_independence(10).ok
    assert verify_phi_telescoping(10).ok
    r = verify_lambda_recurrence_sweep(10)
    assert r.ok
    neg = r.notes["negative_j"]
    assert neg["checked"] > 0 and 0 <= neg["held"] <= neg["checked"]
