"""Partial sums Lambda_m, corrections Phi_m, their total Gamma, and the main identity.

``theorem_lhs`` transcribes the three sums of the identity directly while
``gamma`` goes through ``lambda_m``; the two are kept as separate code paths
so that a transcription slip in either one shows up as a disagreement.
"""

from __future__ import annotations

from binomid.beta import _beta, check_beta_domain
from binomid.exact import DomainError, binomial, multinomial
from binomid.report import VerificationReport, Witness, run_partitioned

__all__ = [
    "lambda_m",
    "phi_m",
    "gamma",
    "theorem_lhs",
    "verify_lambda_recurrence",
    "verify_lambda_recurrence_sweep",
    "verify_theorem",
    "verify_boundary",
    "verify_gamma_recurrence",
    "verify_l_independence",
    "verify_phi_telescoping",
]


def _weighted_beta(weight: int, s: int, l: int, a: int, b: int, m: int) -> int:
    # beta is only evaluated behind a nonzero weight: zero-weight summands
    # may name beta outside its domain.
    if weight == 0 or m < 0:
        return 0
    check_beta_domain(s, l, a)
    return weight * _beta(s, l, a, b, m)


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise DomainError(msg)


def lambda_m(s: int, l: int, j: int, m: int) -> int:
    _require(s >= l, f"Lambda requires s >= l (got s={s}, l={l})")
    _require(m >= 0, f"Lambda requires m >= 0 (got m={m})")
    n = s - l
    total = 0
    for i in range(2 * m, l):
        w = multinomial((i - 2 * m, j - l + m, s - i - j + m))
        total += (-2) ** (i - 2 * m) * _weighted_beta(w, s, l, i + j - l, l - i, m)
    for i in range(2 * m, l + 1):
        w = multinomial((i - 2 * m, j - i + m, n - j + m))
        total += (-2) ** (i - 2 * m) * _weighted_beta(w, s, l, l + j - i, i - l, m)
    return total


def phi_m(s: int, l: int, j: int, m: int) -> int:
    """Correction term; beta factors are taken at ``s + 1``. Zero for ``m < 0``."""
    _require(s >= l, f"Phi requires s >= l (got s={s}, l={l})")
    if m < 0:
        # every summand carries beta_m with m < 0
        return 0
    n = s - l
    total = 0
    for i in range(2 * m + 1, l):
        sign = (-2) ** (i - 2 * m - 1)
        w1 = multinomial((i - 2 * m - 1, j - l + m, s - i - j + m + 1))
        w2 = multinomial((i - 2 * m - 1, j - i + m, n - j + m + 1))
        total += sign * (
            _weighted_beta(w1, s + 1, l, i + j - l, l - i, m)
            + _weighted_beta(w2, s + 1, l, l + j - i, i - l, m)
        )
    return total


def _check_theorem_domain(s: int, l: int) -> None:
    _require(s >= l >= 0, f"requires s >= l >= 0 (got s={s}, l={l})")


def gamma(s: int, l: int, j: int) -> int:
    """``sum_m lambda_m(s, l, j, m)``; terms with ``2m > l`` are empty."""
    _check_theorem_domain(s, l)
    return sum(lambda_m(s, l, j, m) for m in range(l // 2 + 1))


def theorem_lhs(s: int, l: int, j: int) -> int:
    """Left-hand side of the main identity, summed exactly as written."""
    _check_theorem_domain(s, l)
    n = s - l
    total = 0
    for m in range((l - 1) // 2 + 1):
        for i in range(2 * m, l):
            w1 = multinomial((i - 2 * m, j - l + m, s - i - j + m))
            w2 = multinomial((i - 2 * m, j - i + m, n - j + m))
            total += (-2) ** (i - 2 * m) * (
                _weighted_beta(w1, s, l, i + j - l, l - i, m)
                + _weighted_beta(w2, s, l, l + j - i, i - l, m)
            )
    for m in range(l // 2 + 1):
        w = multinomial((l - 2 * m, j - l + m, n - j + m))
        total += (-2) ** (l - 2 * m) * _weighted_beta(w, s, l, j, 0, m)
    return total


def verify_lambda_recurrence(s: int, l: int, j: int, m: int) -> Witness:
    """Lambda_m(s,l,j) + Lambda_m(s,l,j-1) against Lambda_m(s+1,l,j) + Phi_m - Phi_{m-1}."""
    _require(s >= l, f"requires s >= l (got s={s}, l={l})")
    _require(j >= 0, f"requires j >= 0 (got j={j})")
    _require(m >= 0, f"requires m >= 0 (got m={m})")
    return _lambda_witness(s, l, j, m)


def _lambda_witness(s: int, l: int, j: int, m: int) -> Witness:
    lhs = lambda_m(s, l, j, m) + lambda_m(s, l, j - 1, m)
    rhs = lambda_m(s + 1, l, j, m) + phi_m(s, l, j, m) - phi_m(s, l, j, m - 1)
    return Witness(lhs, rhs, lhs == rhs)


def _binomial_ext(s: int, j: int) -> int:
    return binomial(s, j) if s >= 0 else 0


# -- sweeps -----------------------------------------------------------------
# Each worker handles one value of s so partitions are independent.


def _theorem_layer(s: int) -> VerificationReport:
    rep = VerificationReport("theorem", {})
    for l in range(s + 1):
        for j in range(-1, s + 2):
            lhs, g, expected = theorem_lhs(s, l, j), gamma(s, l, j), _binomial_ext(s, j)
            ok = lhs == g == expected
            rep.record({"s": s, "l": l, "j": j}, Witness(f"lhs={lhs} gamma={g}", expected, ok))
    return rep


def verify_theorem(s_max: int, jobs: int = 1) -> VerificationReport:
    """``theorem_lhs == gamma == binomial(s, j)`` on ``0 <= l <= s <= s_max``, ``-1 <= j <= s+1``."""
    layers = [(s,) for s in range(s_max + 1)]
    return run_partitioned("theorem", {"s_max": s_max}, _theorem_layer, layers, jobs)


def _boundary_layer(s: int, width: int) -> VerificationReport:
    rep = VerificationReport("boundary", {})
    outside = [*range(-width, 0), *range(s + 1, s + width + 1)]
    for l in range(s + 1):
        for j in outside:
            g = gamma(s, l, j)
            rep.record({"s": s, "l": l, "j": j}, Witness(g, 0, g == 0))
        g = gamma(s, l, 0)
        rep.record({"s": s, "l": l, "j": 0}, Witness(g, 1, g == 1))
    return rep


def verify_boundary(s_max: int, width: int = 3, jobs: int = 1) -> VerificationReport:
    """Gamma vanishes for ``j`` just outside ``0..s`` and equals 1 at ``j = 0``."""
    layers = [(s, width) for s in range(s_max + 1)]
    return run_partitioned("boundary", {"s_max": s_max, "width": width}, _boundary_layer, layers, jobs)


def _gamma_rec_layer(s: int) -> VerificationReport:
    rep = VerificationReport("gamma-recurrence", {})
    for l in range(s + 1):
        for j in range(0, s + 3):
            lhs = gamma(s + 1, l, j)
            rhs = gamma(s, l, j) + gamma(s, l, j - 1)
            rep.record({"s": s, "l": l, "j": j}, Witness(lhs, rhs, lhs == rhs))
    return rep


def verify_gamma_recurrence(s_max: int, jobs: int = 1) -> VerificationReport:
    """``gamma(s+1,l,j) == gamma(s,l,j) + gamma(s,l,j-1)`` for ``0 <= j <= s+2``."""
    layers = [(s,) for s in range(s_max + 1)]
    return run_partitioned("gamma-recurrence", {"s_max": s_max}, _gamma_rec_layer, layers, jobs)


def _l_indep_layer(s: int) -> VerificationReport:
    rep = VerificationReport("l-independence", {})
    for j in range(-1, s + 2):
        ref = theorem_lhs(s, 0, j)
        for l in range(1, s + 1):
            v = theorem_lhs(s, l, j)
            rep.record({"s": s, "j": j, "l": l}, Witness(v, ref, v == ref))
    return rep


def verify_l_independence(s_max: int, jobs: int = 1) -> VerificationReport:
    """``theorem_lhs(s, l, j)`` agrees with its ``l = 0`` value for every ``l <= s``."""
    layers = [(s,) for s in range(s_max + 1)]
    return run_partitioned("l-independence", {"s_max": s_max}, _l_indep_layer, layers, jobs)


def _lambda_rec_layer(s: int, j_neg: int) -> VerificationReport:
    rep = VerificationReport("lambda-recurrence", {})
    neg_checked = neg_held = 0
    for l in range(s + 1):
        for m in range(l // 2 + 2):
            for j in range(0, s + 2):
                rep.record({"s": s, "l": l, "j": j, "m": m}, _lambda_witness(s, l, j, m))
            # j < 0 lies outside the stated range: observed, never asserted
            for j in range(-j_neg, 0):
                neg_checked += 1
                neg_held += _lambda_witness(s, l, j, m).holds
    if j_neg:
        rep.notes["negative_j"] = {"checked": neg_checked, "held": neg_held}
    return rep


def verify_lambda_recurrence_sweep(s_max: int, j_neg: int = 2, jobs: int = 1) -> VerificationReport:
    """Check the Lambda recurrence on ``l <= s <= s_max``, ``0 <= j <= s+1``, ``0 <= m <= l//2 + 1``.

    ``j_neg`` extra negative values of ``j`` are evaluated and only tallied
    in the report notes.
    """
    layers = [(s, j_neg) for s in range(s_max + 1)]
    return run_partitioned("lambda-recurrence", {"s_max": s_max, "j_neg": j_neg}, _lambda_rec_layer, layers, jobs)


def _phi_tel_layer(s: int) -> VerificationReport:
    rep = VerificationReport("phi-telescoping", {})
    for l in range(s + 1):
        for j in range(-1, s + 2):
            total = sum(phi_m(s, l, j, m) - phi_m(s, l, j, m - 1) for m in range(l // 2 + 2))
            rep.record({"s": s, "l": l, "j": j}, Witness(total, 0, total == 0))
    return rep


def verify_phi_telescoping(s_max: int, jobs: int = 1) -> VerificationReport:
    """``sum_{m=0}^{l//2+1} (phi_m - phi_{m-1}) == 0``, the step that turns the Lambda recurrence into Gamma's."""
    layers = [(s,) for s in range(s_max + 1)]
    return run_partitioned("phi-telescoping", {"s_max": s_max}, _phi_tel_layer, layers, jobs)
