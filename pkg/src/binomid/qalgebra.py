"""Laurent polynomials in q with integer coefficients, Gaussian binomials and q-beta."""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Mapping

from binomid.beta import CASES, _beta, check_beta_domain, check_case, split_b
from binomid.exact import DomainError, multinomial
from binomid.report import VerificationReport, Witness, run_partitioned

__all__ = [
    "LaurentPoly",
    "ZERO",
    "ONE",
    "Q",
    "qint",
    "qint_factorial",
    "qmultinomial",
    "qbinomial",
    "qbeta",
    "eval_at_one",
    "verify_q_recurrence",
    "sweep_q_recurrences",
    "sweep_q_specialization",
    "sweep_q_kernel",
]


class LaurentPoly:
    """Immutable ``sum_k c_k q^k`` stored densely from the lowest exponent.

    The stored form is canonical (no leading or trailing zero coefficients,
    the zero polynomial has no coefficients), so ``==`` compares values.
    """

    __slots__ = ("low", "coeffs", "_hash")

    def __init__(self, coeffs: Iterable[int] = (), low: int = 0):
        c = list(coeffs)
        start = 0
        while start < len(c) and c[start] == 0:
            start += 1
        end = len(c)
        while end > start and c[end - 1] == 0:
            end -= 1
        self.coeffs: tuple[int, ...] = tuple(c[start:end])
        self.low: int = low + start if self.coeffs else 0
        self._hash = None

    @classmethod
    def from_dict(cls, terms: Mapping[int, int]) -> LaurentPoly:
        terms = {e: c for e, c in terms.items() if c}
        if not terms:
            return ZERO
        lo, hi = min(terms), max(terms)
        return cls([terms.get(e, 0) for e in range(lo, hi + 1)], lo)

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> LaurentPoly:
        return cls([coeff], exponent)

    def to_dict(self) -> dict[int, int]:
        return {self.low + i: c for i, c in enumerate(self.coeffs) if c}

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def valuation(self) -> int | None:
        """Lowest exponent present, ``None`` for zero."""
        return self.low if self.coeffs else None

    @property
    def degree(self) -> int | None:
        return self.low + len(self.coeffs) - 1 if self.coeffs else None

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = LaurentPoly([other])
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.low == other.low and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.low, self.coeffs))
        return self._hash

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly([-c for c in self.coeffs], self.low)

    def __add__(self, other: LaurentPoly | int) -> LaurentPoly:
        if isinstance(other, int):
            other = LaurentPoly([other])
        if not self.coeffs:
            return other
        if not other.coeffs:
            return self
        lo = min(self.low, other.low)
        hi = max(self.low + len(self.coeffs), other.low + len(other.coeffs))
        out = [0] * (hi - lo)
        for i, c in enumerate(self.coeffs, self.low - lo):
            out[i] += c
        for i, c in enumerate(other.coeffs, other.low - lo):
            out[i] += c
        return LaurentPoly(out, lo)

    __radd__ = __add__

    def __sub__(self, other: LaurentPoly | int) -> LaurentPoly:
        if isinstance(other, int):
            other = LaurentPoly([other])
        return self + (-other)

    def __rsub__(self, other: int) -> LaurentPoly:
        return LaurentPoly([other]) - self

    def __mul__(self, other: LaurentPoly | int) -> LaurentPoly:
        if isinstance(other, int):
            return LaurentPoly([c * other for c in self.coeffs], self.low)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return ZERO
        if len(a) < len(b):
            a, b = b, a
        out = [0] * (len(a) + len(b) - 1)
        for j, cb in enumerate(b):
            if cb:
                for i, ca in enumerate(a, j):
                    out[i] += ca * cb
        return LaurentPoly(out, self.low + other.low)

    __rmul__ = __mul__

    def shift(self, k: int) -> LaurentPoly:
        """Multiply by ``q**k``."""
        return LaurentPoly(self.coeffs, self.low + k) if self.coeffs else ZERO

    def exact_divide(self, other: LaurentPoly) -> LaurentPoly:
        """Quotient ``self / other``; raises ``ArithmeticError`` unless the division is exact."""
        if not other.coeffs:
            raise ZeroDivisionError("division by the zero polynomial")
        if not self.coeffs:
            return ZERO
        num = list(self.coeffs)
        den = other.coeffs
        lead = den[-1]
        nq = len(num) - len(den) + 1
        if nq <= 0:
            raise ArithmeticError(f"inexact division of {self} by {other}")
        quot = [0] * nq
        for k in range(nq - 1, -1, -1):
            c, r = divmod(num[k + len(den) - 1], lead)
            if r:
                raise ArithmeticError(f"inexact division of {self} by {other}")
            quot[k] = c
            if c:
                for i, d in enumerate(den, k):
                    num[i] -= c * d
        if any(num):
            raise ArithmeticError(f"inexact division of {self} by {other}")
        return LaurentPoly(quot, self.low - other.low)

    def __call__(self, x):
        """Evaluate at ``x`` (int, Fraction, ...); negative exponents need ``x`` invertible."""
        total = 0
        for e, c in self.to_dict().items():
            total += c * (x**e if e >= 0 else 1 / x ** (-e))
        return total

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        out = []
        for e, c in sorted(self.to_dict().items()):
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                var = "q" if e == 1 else f"q^{e}"
                body = var if mag == 1 else f"{mag}*{var}"
            if not out:
                out.append(("-" if c < 0 else "") + body)
            else:
                out.append((" - " if c < 0 else " + ") + body)
        return "".join(out)

    def __repr__(self) -> str:
        return f"LaurentPoly({str(self)!r})"


ZERO = LaurentPoly()
ONE = LaurentPoly([1])
Q = LaurentPoly([1], 1)


def eval_at_one(p: LaurentPoly) -> int:
    """Specialize ``q = 1``: the sum of the coefficients."""
    return sum(p.coeffs)


@lru_cache(maxsize=None)
def qint(n: int) -> LaurentPoly:
    """``1 + q + ... + q^(n-1)``."""
    if n < 0:
        raise DomainError(f"q-integer of negative {n}")
    return LaurentPoly([1] * n)


@lru_cache(maxsize=None)
def qint_factorial(n: int) -> LaurentPoly:
    if n < 0:
        raise DomainError(f"q-factorial of negative integer {n}")
    if n <= 1:
        return ONE
    return qint_factorial(n - 1) * qint(n)


def qmultinomial(parts: Iterable[int]) -> LaurentPoly:
    """Gaussian multinomial; zero if any part is negative."""
    parts = tuple(parts)
    total = sum(parts)
    if total < 0:
        raise DomainError(f"q-multinomial with negative total {total} (parts {parts})")
    if any(r < 0 for r in parts):
        return ZERO
    return _qmultinomial(tuple(sorted(parts)))


@lru_cache(maxsize=None)
def _qmultinomial(parts: tuple[int, ...]) -> LaurentPoly:
    den = ONE
    for r in parts:
        den = den * qint_factorial(r)
    return qint_factorial(sum(parts)).exact_divide(den)


def qbinomial(n: int, r: int) -> LaurentPoly:
    if n < 0:
        raise DomainError(f"q-binomial with negative upper index {n}")
    if r < 0 or r > n:
        return ZERO
    return _qmultinomial((min(r, n - r), max(r, n - r)))


def qbeta(s: int, l: int, a: int, b: int, m: int) -> LaurentPoly:
    """q-analogue of :func:`binomid.beta.beta`; each term gets weight ``q^(n(n-|b|+l-2m))``."""
    check_beta_domain(s, l, a)
    return _qbeta(s, l, a, b, m)


@lru_cache(maxsize=1 << 18)
def _qbeta(s: int, l: int, a: int, b: int, m: int) -> LaurentPoly:
    bp, bm = split_b(b)
    lo = max(0, bp + m - (s - a), bm + m - a)
    hi = min(abs(b) + m, bp + m, bm + m)
    total = ZERO
    for n in range(lo, hi + 1):
        term = qbinomial(s - a, bp + m - n) * qbinomial(a, bm + m - n) * qbinomial(s - l + n, n)
        total = total + term.shift(n * (n - abs(b) + l - 2 * m))
    return total


# q-weights on the subtracted term, keyed like binomid.beta.CASES
_Q_EXPONENTS = {
    "i": lambda s, l, a, b, m: s - a - b - m + 1,
    "ii": lambda s, l, a, b, m: a - m,
    "iii": lambda s, l, a, b, m: s - a - m + 1,
    "iv": lambda s, l, a, b, m: a + b - m,
}


def _q_sides(case: str, s: int, l: int, a: int, b: int, m: int) -> tuple[LaurentPoly, LaurentPoly]:
    e = _Q_EXPONENTS[case](s, l, a, b, m)
    if case == "i":
        return _qbeta(s, l, a, b, m), _qbeta(s + 1, l, a, b, m) - _qbeta(s + 1, l, a + 1, b - 1, m).shift(e)
    if case == "ii":
        return _qbeta(s, l, a - 1, b, m), _qbeta(s + 1, l, a, b, m) - _qbeta(s + 1, l, a - 1, b + 1, m - 1).shift(e)
    if case == "iii":
        return _qbeta(s, l, a, b, m), _qbeta(s + 1, l, a, b, m) - _qbeta(s + 1, l, a + 1, b - 1, m - 1).shift(e)
    return _qbeta(s, l, a - 1, b, m), _qbeta(s + 1, l, a, b, m) - _qbeta(s + 1, l, a - 1, b + 1, m).shift(e)


def verify_q_recurrence(case: str, s: int, l: int, a: int, b: int, m: int) -> Witness:
    """Both sides of q-recurrence ``case`` as Laurent polynomials."""
    check_case(case, s, l, a, b, m)
    lhs, rhs = _q_sides(case, s, l, a, b, m)
    return Witness(lhs, rhs, lhs == rhs)


def _q_rec_layer(s: int, m_max: int, b_max: int) -> VerificationReport:
    rep = VerificationReport("q-recurrences", {})
    for l in range(s + 1):
        for a in range(s + 1):
            for b in range(-b_max, b_max + 1):
                for m in range(m_max + 1):
                    for name, spec in CASES.items():
                        if not spec.condition(s, l, a, b, m):
                            rep.cases_skipped += 1
                            continue
                        lhs, rhs = _q_sides(name, s, l, a, b, m)
                        rep.record(
                            {"case": name, "s": s, "l": l, "a": a, "b": b, "m": m},
                            Witness(lhs, rhs, lhs == rhs),
                        )
    return rep


def sweep_q_recurrences(s_max: int, m_max: int, b_max: int | None = None, jobs: int = 1) -> VerificationReport:
    if b_max is None:
        b_max = s_max
    box = {"s_max": s_max, "m_max": m_max, "b_max": b_max}
    layers = [(s, m_max, b_max) for s in range(s_max + 1)]
    return run_partitioned("q-recurrences", box, _q_rec_layer, layers, jobs)


def _q_spec_layer(s: int, m_max: int, b_max: int) -> VerificationReport:
    rep = VerificationReport("q-specialization", {})
    low_all = low_lam = None
    for l in range(s + 1):
        for a in range(s + 1):
            for b in range(-b_max, b_max + 1):
                for m in range(m_max + 1):
                    p = _qbeta(s, l, a, b, m)
                    v, expected = eval_at_one(p), _beta(s, l, a, b, m)
                    rep.record({"s": s, "l": l, "a": a, "b": b, "m": m}, Witness(v, expected, v == expected))
                    if p.coeffs:
                        low_all = p.low if low_all is None else min(low_all, p.low)
                        if abs(b) <= l - 2 * m:
                            low_lam = p.low if low_lam is None else min(low_lam, p.low)
    rep.notes = {"min_exponent": low_all, "min_exponent_lambda_range": low_lam}
    return rep


def sweep_q_specialization(s_max: int, m_max: int, b_max: int | None = None, jobs: int = 1) -> VerificationReport:
    """``qbeta`` at ``q = 1`` equals ``beta``.

    The notes record the lowest exponent of q seen overall and on the
    subrange ``|b| <= l - 2m`` that the Lambda sums actually use.
    """
    if b_max is None:
        b_max = s_max
    box = {"s_max": s_max, "m_max": m_max, "b_max": b_max}
    layers = [(s, m_max, b_max) for s in range(s_max + 1)]
    return run_partitioned("q-specialization", box, _q_spec_layer, layers, jobs)


def _q_kernel_layer(n: int) -> VerificationReport:
    rep = VerificationReport("q-kernel", {})
    for r in range(n + 1):
        p = qbinomial(n, r)
        rep.record({"check": "degree", "n": n, "r": r}, Witness(p.degree, r * (n - r), p.degree == r * (n - r)))
        nonneg = all(c >= 0 for c in p.coeffs) and p.low == 0
        rep.record({"check": "nonnegative", "n": n, "r": r}, Witness(p, "coefficients >= 0", nonneg))
        v = eval_at_one(p)
        expected = multinomial((r, n - r))
        rep.record({"check": "at-one", "n": n, "r": r}, Witness(v, expected, v == expected))
    if n >= 1:
        # q-Pascal on row n from row n - 1
        for r in range(n + 1):
            lhs = qbinomial(n, r)
            rhs = qbinomial(n - 1, r) + qbinomial(n - 1, r - 1).shift(n - r)
            rep.record({"check": "q-pascal", "n": n, "r": r}, Witness(lhs, rhs, lhs == rhs))
    return rep


def sweep_q_kernel(n_max: int, jobs: int = 1) -> VerificationReport:
    """Self-checks of the Gaussian binomial kernel for ``n <= n_max``."""
    layers = [(n,) for n in range(n_max + 1)]
    return run_partitioned("q-kernel", {"n_max": n_max}, _q_kernel_layer, layers, jobs)
