"""Creative telescoping for a single definite sum."""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce

import sympy as sp
from sympy import QQ, ZZ, Poly

from binomid.telescope.gosper import _shift, gosper_form, solve_gosper_equation
from binomid.telescope.ratfunc import RationalFunction
from binomid.telescope.terms import BinomialProductTerm, UnsupportedTermError

__all__ = ["Recurrence", "zeilberger"]


@dataclass(frozen=True)
class Recurrence:
    """``sum_i coeffs[i](s) F(s+i, n) = G(s, n+1) - G(s, n)`` with ``G = certificate * F``.

    Summing over ``n`` gives ``sum_i coeffs[i](s) f(s+i) = 0`` for the
    definite sum ``f``.
    """

    coeffs: tuple[Poly, ...]
    certificate: RationalFunction
    outer: sp.Symbol
    var: sp.Symbol

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def coefficient_values(self, s: int) -> list[int]:
        return [int(c.eval(s)) for c in self.coeffs]

    def __str__(self) -> str:
        name = str(self.outer)
        parts = []
        for i in range(self.order, -1, -1):
            c = self.coeffs[i]
            if c.is_zero:
                continue
            neg = c.LC() < 0
            if neg:
                c = -c
            arg = name if i == 0 else f"{name}+{i}"
            expr = c.as_expr()
            if expr == 1:
                body = f"f({arg})"
            elif c.is_ground or len(c.terms()) == 1:
                body = f"{expr}*f({arg})"
            else:
                body = f"({expr})*f({arg})"
            if not parts:
                parts.append(("-" if neg else "") + body)
            else:
                parts.append((" - " if neg else " + ") + body)
        return "".join(parts) + " = 0"


def _normalize(sigma: list, outer: sp.Symbol):
    """Clear denominators and content; leading coefficient of the top term positive."""
    fracs = [sp.fraction(sp.cancel(s)) for s in sigma]
    dens = [Poly(d, outer, domain=QQ) for _, d in fracs]
    lcm = reduce(lambda p, q: p.lcm(q), dens)
    polys = [Poly(n, outer, domain=QQ) * lcm.exquo(Poly(d, outer, domain=QQ)) for n, d in fracs]
    nonzero = [p for p in polys if not p.is_zero]
    g = reduce(lambda p, q: p.gcd(q), nonzero)
    polys = [p.exquo(g) if not p.is_zero else p for p in polys]
    # rational content -> coprime integer coefficients
    content = [c for p in polys for c in p.coeffs()]
    den_lcm = reduce(sp.ilcm, [sp.Rational(c).q for c in content], 1)
    num_gcd = reduce(sp.igcd, [sp.Rational(c * den_lcm).p for c in content])
    scale = sp.Rational(den_lcm, num_gcd)
    top = next(p for p in reversed(polys) if not p.is_zero)
    if top.LC() < 0:
        scale = -scale
    polys = [Poly(p * scale, outer, domain=ZZ) if not p.is_zero else Poly(0, outer, domain=ZZ) for p in polys]
    factor = scale * lcm.as_expr() / g.as_expr()
    return polys, factor


def zeilberger(F: BinomialProductTerm, max_order: int = 4) -> Recurrence | None:
    """Smallest-order recurrence (up to ``max_order``) for ``f(s) = sum_n F(s, n)``; ``None`` if none is found."""
    if F.w is None:
        raise UnsupportedTermError("creative telescoping needs an outer variable")
    n, s = F.v, F.w
    gens = (n, s)
    rho_n = sp.cancel(F.ratio_expr("var"))
    rho_s = sp.cancel(F.ratio_expr("outer"))
    shifts = [sp.Integer(1)]
    for order in range(1, max_order + 1):
        # shifts[i] = F(s+i, n) / F(s, n)
        shifts.append(sp.cancel(shifts[-1] * rho_s.subs(s, s + order - 1)))
        fr = [sp.fraction(sh) for sh in shifts]
        nums = [Poly(p, *gens, domain=QQ) for p, _ in fr]
        dens = [Poly(q, *gens, domain=QQ) for _, q in fr]
        D = reduce(lambda p, q: p.lcm(q), dens)
        us = [p * D.exquo(q) for p, q in zip(nums, dens)]
        # F / D has shift ratio rho_n * D(n) / D(n+1)
        tilde = RationalFunction.from_expr(rho_n * D.as_expr() / _shift(D, 1).as_expr(), n, (s,))
        a, b, c = gosper_form(tilde.num, tilde.den)
        sol = solve_gosper_equation(a, b, [c * u for u in us])
        if sol is None:
            continue
        sigma, x = sol
        coeffs, factor = _normalize(sigma, s)
        cert = _shift(b, -1).as_expr() * x * factor / (c.as_expr() * D.as_expr())
        return Recurrence(tuple(coeffs), RationalFunction.from_expr(cert, n, (s,)), s, n)
    return None
