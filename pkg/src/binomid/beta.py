"""The triple-binomial sum ``beta_m(s, l, a, b)`` and its four shift recurrences."""

from __future__ import annotations

import math
from functools import lru_cache
from typing import Callable, NamedTuple

from binomid.exact import DomainError
from binomid.report import VerificationReport, Witness, run_partitioned

__all__ = [
    "BetaParams",
    "CASES",
    "split_b",
    "beta",
    "check_beta_domain",
    "verify_beta_recurrence",
    "sweep_beta_recurrences",
]


class BetaParams(NamedTuple):
    s: int
    l: int
    a: int
    b: int
    m: int


def split_b(b: int) -> tuple[int, int]:
    """Return ``(b_plus, b_minus)`` with ``b_plus + b_minus == |b|`` and ``b_plus - b_minus == b``."""
    return max(b, 0), max(-b, 0)


def check_beta_domain(s: int, l: int, a: int) -> None:
    if not s >= l:
        raise DomainError(f"beta requires s >= l (got s={s}, l={l})")
    if not s >= a >= 0:
        raise DomainError(f"beta requires s >= a >= 0 (got s={s}, a={a})")


def beta(s: int, l: int, a: int, b: int, m: int) -> int:
    """Evaluate ``sum_{n=0}^{|b|+m} C(s-a, b+ + m-n) C(a, b- + m-n) C(s-l+n, n)``.

    Defined for ``s >= l`` and ``s >= a >= 0``; any integer ``m`` is accepted
    and ``m < 0`` gives 0.
    """
    check_beta_domain(s, l, a)
    return _beta(s, l, a, b, m)


@lru_cache(maxsize=1 << 20)
def _beta(s: int, l: int, a: int, b: int, m: int) -> int:
    bp, bm = split_b(b)
    top1, top3 = s - a, s - l
    # Terms with n outside [lo, hi] have a vanishing binomial; hi < 0 when m < 0.
    lo = max(0, bp + m - top1, bm + m - a)
    hi = min(abs(b) + m, bp + m, bm + m)
    comb = math.comb
    total = 0
    for n in range(lo, hi + 1):
        total += comb(top1, bp + m - n) * comb(a, bm + m - n) * comb(top3 + n, n)
    return total


class _Case(NamedTuple):
    condition: Callable[[int, int, int, int, int], bool]
    condition_text: str
    lhs: Callable[[int, int, int, int, int], int]
    rhs: Callable[[int, int, int, int, int], int]


# Each case is stated for the tuple (s, l, a, b, m) that appears in the identity.
CASES: dict[str, _Case] = {
    "i": _Case(
        lambda s, l, a, b, m: b > 0,
        "b > 0",
        lambda s, l, a, b, m: _beta(s, l, a, b, m),
        lambda s, l, a, b, m: _beta(s + 1, l, a, b, m) - _beta(s + 1, l, a + 1, b - 1, m),
    ),
    "ii": _Case(
        lambda s, l, a, b, m: a > 0 and b >= 0,
        "a > 0 and b >= 0",
        lambda s, l, a, b, m: _beta(s, l, a - 1, b, m),
        lambda s, l, a, b, m: _beta(s + 1, l, a, b, m) - _beta(s + 1, l, a - 1, b + 1, m - 1),
    ),
    "iii": _Case(
        lambda s, l, a, b, m: b <= 0,
        "b <= 0",
        lambda s, l, a, b, m: _beta(s, l, a, b, m),
        lambda s, l, a, b, m: _beta(s + 1, l, a, b, m) - _beta(s + 1, l, a + 1, b - 1, m - 1),
    ),
    "iv": _Case(
        lambda s, l, a, b, m: a > 0 and b < 0,
        "a > 0 and b < 0",
        lambda s, l, a, b, m: _beta(s, l, a - 1, b, m),
        lambda s, l, a, b, m: _beta(s + 1, l, a, b, m) - _beta(s + 1, l, a - 1, b + 1, m),
    ),
}


def check_case(case: str, s: int, l: int, a: int, b: int, m: int) -> _Case:
    try:
        spec = CASES[case]
    except KeyError:
        raise DomainError(f"unknown recurrence case {case!r}; expected one of {sorted(CASES)}") from None
    check_beta_domain(s, l, a)
    if not spec.condition(s, l, a, b, m):
        raise DomainError(f"case {case} requires {spec.condition_text} (got a={a}, b={b})")
    return spec


def verify_beta_recurrence(case: str, s: int, l: int, a: int, b: int, m: int) -> Witness:
    """Evaluate both sides of shift recurrence ``case`` at ``(s, l, a, b, m)``."""
    spec = check_case(case, s, l, a, b, m)
    lhs = spec.lhs(s, l, a, b, m)
    rhs = spec.rhs(s, l, a, b, m)
    return Witness(lhs, rhs, lhs == rhs)


def _sweep_layer(s: int, m_max: int, b_max: int) -> VerificationReport:
    rep = VerificationReport("beta-recurrences", {})
    for l in range(s + 1):
        for a in range(s + 1):
            for b in range(-b_max, b_max + 1):
                for m in range(m_max + 1):
                    for name, spec in CASES.items():
                        if not spec.condition(s, l, a, b, m):
                            rep.cases_skipped += 1
                            continue
                        lhs = spec.lhs(s, l, a, b, m)
                        rhs = spec.rhs(s, l, a, b, m)
                        rep.record(
                            {"case": name, "s": s, "l": l, "a": a, "b": b, "m": m},
                            Witness(lhs, rhs, lhs == rhs),
                        )
    return rep


def sweep_beta_recurrences(
    s_max: int, m_max: int, b_max: int | None = None, jobs: int = 1
) -> VerificationReport:
    """Check all four recurrences on ``0 <= l, a <= s <= s_max``, ``|b| <= b_max``, ``0 <= m <= m_max``."""
    if b_max is None:
        b_max = s_max
    box = {"s_max": s_max, "m_max": m_max, "b_max": b_max}
    layers = [(s, m_max, b_max) for s in range(s_max + 1)]
    return run_partitioned("beta-recurrences", box, _sweep_layer, layers, jobs)
