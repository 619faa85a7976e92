"""Rational functions over QQ in a running variable, optionally with parameters."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

import sympy as sp
from sympy import QQ, Poly

__all__ = ["RationalFunction", "poly_value"]


def poly_value(terms: Sequence[tuple[tuple[int, ...], Fraction]], point: Sequence[int | Fraction]) -> Fraction:
    total = Fraction(0)
    for monom, c in terms:
        t = c
        for x, e in zip(point, monom):
            if e:
                t *= Fraction(x) ** e
        total += t
    return total


class RationalFunction:
    """``num / den`` with ``gcd(num, den) = 1`` and the denominator's leading coefficient 1.

    ``gens[0]`` is the running variable; further generators are parameters
    (a rational function "in n with coefficients rational in s" is stored with
    ``gens = (n, s)``).
    """

    __slots__ = ("num", "den", "_nt", "_dt")

    def __init__(self, num: Poly, den: Poly | None = None):
        if den is None:
            den = Poly(1, *num.gens, domain=QQ)
        num = num.set_domain(QQ)
        den = den.set_domain(QQ)
        if den.is_zero:
            raise ZeroDivisionError("zero denominator")
        g = num.gcd(den)
        if not g.is_one and not g.is_zero:
            num = num.exquo(g)
            den = den.exquo(g)
        lc = den.LC()
        if lc != 1:
            num = num.quo_ground(lc)
            den = den.quo_ground(lc)
        self.num, self.den = num, den
        self._nt = [(m, Fraction(int(c.numerator), int(c.denominator))) for m, c in num.terms()]
        self._dt = [(m, Fraction(int(c.numerator), int(c.denominator))) for m, c in den.terms()]

    @classmethod
    def from_expr(cls, expr, var: sp.Symbol, params: Sequence[sp.Symbol] = ()) -> RationalFunction:
        n, d = sp.fraction(sp.cancel(sp.together(sp.sympify(expr))))
        gens = (var, *params)
        return cls(Poly(n, *gens, domain=QQ), Poly(d, *gens, domain=QQ))

    @property
    def gens(self) -> tuple:
        return self.num.gens

    @property
    def var(self) -> sp.Symbol:
        return self.num.gens[0]

    def as_expr(self):
        return self.num.as_expr() / self.den.as_expr()

    def __call__(self, *point) -> Fraction | None:
        """Value at ``point`` (one entry per generator); ``None`` at a pole."""
        d = poly_value(self._dt, point)
        if d == 0:
            return None
        return poly_value(self._nt, point) / d

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return self.gens == other.gens and self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __neg__(self) -> RationalFunction:
        return RationalFunction(-self.num, self.den)

    def __mul__(self, other: RationalFunction) -> RationalFunction:
        return RationalFunction(self.num * other.num, self.den * other.den)

    def __str__(self) -> str:
        if self.den.is_one:
            return str(self.num.as_expr())
        return f"({self.num.as_expr()})/({self.den.as_expr()})"

    def __repr__(self) -> str:
        return f"RationalFunction({self})"
