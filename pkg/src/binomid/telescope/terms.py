"""Hypergeometric terms built from binomials with unit slopes, and their shift ratios."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Mapping

import sympy as sp

from binomid.exact import binomial, factorial
from binomid.telescope.ratfunc import RationalFunction

__all__ = [
    "UnsupportedTermError",
    "Affine",
    "Factor",
    "BinomialProductTerm",
    "term_ratio",
    "beta_summand",
    "parse_term",
]

_SLOPES = (-1, 0, 1)


class UnsupportedTermError(ValueError):
    """The term lies outside the supported shape (unit slopes, known factor kinds)."""


@dataclass(frozen=True)
class Affine:
    """``slope*v + outer*w + constant`` for running variable ``v`` and outer variable ``w``."""

    slope: int = 0
    constant: int = 0
    outer: int = 0

    def at(self, v: int, w: int = 0) -> int:
        return self.slope * v + self.outer * w + self.constant

    def expr(self, v: sp.Symbol, w: sp.Symbol | None):
        e = self.slope * v + self.constant
        if w is not None:
            e += self.outer * w
        return e

    def __sub__(self, other: Affine) -> Affine:
        return Affine(self.slope - other.slope, self.constant - other.constant, self.outer - other.outer)


@dataclass(frozen=True)
class Factor:
    """One factor of a term.

    ``kind`` is ``"binomial"`` (``binomial(top, bottom)``), ``"factorial"``
    (``arg!``) or ``"linear"`` (the value ``arg`` itself); ``exponent`` is
    +1 or -1 for the last two kinds.
    """

    kind: str
    top: Affine | None = None
    bottom: Affine | None = None
    arg: Affine | None = None
    exponent: int = 1


def _factorial_ratio(x, delta: int):
    """``(x + delta)! / x!`` as an expression."""
    if delta > 0:
        return sp.Mul(*[x + k for k in range(1, delta + 1)])
    if delta < 0:
        return 1 / sp.Mul(*[x - k for k in range(0, -delta)])
    return sp.Integer(1)


@dataclass(frozen=True)
class BinomialProductTerm:
    factors: tuple[Factor, ...]
    var: str = "n"
    outer: str | None = None
    z: Fraction | None = None
    alternating: bool = False
    symbols: dict = field(default=None, compare=False, hash=False, repr=False)

    def __post_init__(self):
        for f in self.factors:
            if f.kind == "binomial":
                parts = (f.top, f.bottom)
            elif f.kind in ("factorial", "linear"):
                parts = (f.arg,)
                if f.exponent not in (1, -1):
                    raise UnsupportedTermError(f"exponent {f.exponent} not in (1, -1)")
            else:
                raise UnsupportedTermError(f"unknown factor kind {f.kind!r}")
            for p in parts:
                if p is None or p.slope not in _SLOPES or p.outer not in _SLOPES:
                    raise UnsupportedTermError(f"slopes must lie in {_SLOPES}: {p}")
        if self.outer is None and any(p.outer for f in self.factors for p in (f.top, f.bottom, f.arg) if p):
            raise UnsupportedTermError("factor depends on an outer variable but none is declared")
        v = sp.Symbol(self.var, integer=True)
        w = sp.Symbol(self.outer, integer=True) if self.outer else None
        object.__setattr__(self, "symbols", {"var": v, "outer": w})

    @property
    def v(self) -> sp.Symbol:
        return self.symbols["var"]

    @property
    def w(self) -> sp.Symbol | None:
        return self.symbols["outer"]

    def params(self) -> tuple:
        return (self.w,) if self.w is not None else ()

    def value(self, v: int, w: int = 0) -> Fraction | None:
        """Exact value at ``(v, w)``, or ``None`` off the term's domain.

        Binomials vanish for lower indices out of range; a negative upper
        index, a negative factorial or a zero divisor leaves the term undefined.
        """
        val = Fraction(1)
        for f in self.factors:
            if f.kind == "binomial":
                t = f.top.at(v, w)
                if t < 0:
                    return None
                val *= binomial(t, f.bottom.at(v, w))
            elif f.kind == "factorial":
                x = f.arg.at(v, w)
                if x < 0:
                    return None
                val = val * factorial(x) if f.exponent == 1 else val / factorial(x)
            else:
                x = f.arg.at(v, w)
                if f.exponent == -1:
                    if x == 0:
                        return None
                    val /= x
                else:
                    val *= x
        if self.z is not None:
            val *= Fraction(self.z) ** v
        if self.alternating and v % 2:
            val = -val
        return val

    def ratio_expr(self, along: str = "var"):
        """``t(v+1)/t(v)`` (or the outer shift when ``along="outer"``) as an expression."""
        outer = along == "outer"
        if outer and self.w is None:
            raise UnsupportedTermError("term has no outer variable")
        v, w = self.v, self.w

        def step(a: Affine) -> int:
            return a.outer if outer else a.slope

        r = sp.Integer(1)
        for f in self.factors:
            if f.kind == "binomial":
                diff = f.top - f.bottom
                r *= _factorial_ratio(f.top.expr(v, w), step(f.top))
                r /= _factorial_ratio(f.bottom.expr(v, w), step(f.bottom))
                r /= _factorial_ratio(diff.expr(v, w), step(diff))
            elif f.kind == "factorial":
                r *= _factorial_ratio(f.arg.expr(v, w), step(f.arg)) ** f.exponent
            else:
                x = f.arg.expr(v, w)
                r *= ((x + step(f.arg)) / x) ** f.exponent
        if not outer:
            if self.z is not None:
                r *= sp.Rational(self.z.numerator, self.z.denominator)
            if self.alternating:
                r = -r
        return r


def term_ratio(t: BinomialProductTerm, along: str = "var") -> RationalFunction:
    """Shift ratio of ``t`` in lowest terms.

    The running variable is the first generator; the outer variable, if any,
    is carried as a parameter.
    """
    return RationalFunction.from_expr(t.ratio_expr(along), t.v, t.params())


def _binom(top: Affine, bottom: Affine) -> Factor:
    return Factor("binomial", top=top, bottom=bottom)


def beta_summand(l: int, a: int, b: int, m: int, var: str = "n", outer: str = "s") -> BinomialProductTerm:
    """The summand ``C(s-a, b+ + m-n) C(a, b- + m-n) C(s-l+n, n)`` with ``s`` as outer variable."""
    bp, bm = max(b, 0), max(-b, 0)
    return BinomialProductTerm(
        (
            _binom(Affine(0, -a, 1), Affine(-1, bp + m)),
            _binom(Affine(0, a), Affine(-1, bm + m)),
            _binom(Affine(1, -l, 1), Affine(1, 0)),
        ),
        var=var,
        outer=outer,
    )


def _affine(d: Mapping[str, Any]) -> Affine:
    unknown = set(d) - {"slope", "constant", "outer"}
    if unknown:
        raise UnsupportedTermError(f"unknown affine keys {sorted(unknown)}")
    return Affine(int(d.get("slope", 0)), int(d.get("constant", 0)), int(d.get("outer", 0)))


def parse_term(doc: Mapping[str, Any]) -> BinomialProductTerm:
    """Build a term from a parsed term-description document.

    Factors are mappings ``{top: {slope, constant[, outer]}, bottom: {...}}``
    for binomials, or ``{factorial: {...}}`` / ``{linear: {...}}`` with an
    optional ``exponent`` of +1 or -1.
    """
    factors = []
    for raw in doc.get("factors", []):
        if "top" in raw or "bottom" in raw:
            factors.append(_binom(_affine(raw["top"]), _affine(raw["bottom"])))
        elif "factorial" in raw:
            factors.append(Factor("factorial", arg=_affine(raw["factorial"]), exponent=int(raw.get("exponent", 1))))
        elif "linear" in raw:
            factors.append(Factor("linear", arg=_affine(raw["linear"]), exponent=int(raw.get("exponent", 1))))
        else:
            raise UnsupportedTermError(f"cannot read factor {raw!r}")
    z = doc.get("z")
    return BinomialProductTerm(
        tuple(factors),
        var=str(doc.get("var", "n")),
        outer=doc.get("outer"),
        z=Fraction(str(z)) if z is not None else None,
        alternating=bool(doc.get("alternating", False)),
    )
