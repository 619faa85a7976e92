"""Gosper's algorithm, including the parameterized variant used by creative telescoping.

Polynomials are sympy ``Poly`` objects over QQ whose first generator is the
summation variable; any further generators are parameters, and the linear
algebra is then carried out over the rational function field in them.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import sympy as sp
from sympy import QQ, Poly
from sympy.polys.matrices import DomainMatrix

from binomid.telescope.ratfunc import RationalFunction

__all__ = ["GosperCertificate", "gosper_form", "dispersion_set", "solve_gosper_equation", "gosper"]


@dataclass(frozen=True)
class GosperCertificate:
    """``R`` with ``t(v) = R(v+1) t(v+1) - R(v) t(v)``; the antidifference is ``R(v) t(v)``."""

    R: RationalFunction

    def __str__(self) -> str:
        return f"R({self.R.var}) = {self.R}"


def _shift(p: Poly, k: int) -> Poly:
    if k == 0:
        return p
    v = p.gens[0]
    return Poly(p.as_expr().subs(v, v + k), *p.gens, domain=QQ)


def _deg(p: Poly) -> int:
    """Degree in the summation variable; -1 for the zero polynomial."""
    return -1 if p.is_zero else p.degree(p.gens[0])


def _lead(p: Poly):
    """Leading coefficient in the summation variable (an expression in the parameters)."""
    v = p.gens[0]
    return p.as_expr().coeff(v, _deg(p)) if _deg(p) > 0 else p.as_expr()


def _integer_roots(p: Poly) -> list[int]:
    out = []
    for fac, _ in p.factor_list()[1]:
        if fac.degree() == 1:
            c1, c0 = fac.all_coeffs()
            r = -c0 / c1
            if r.denominator == 1:
                out.append(int(r))
    return sorted(set(out))


def dispersion_set(a: Poly, b: Poly) -> list[int]:
    """Nonnegative integers ``h`` with ``gcd(a(v), b(v+h))`` nonconstant in ``v``.

    Found as integer roots of ``Res_v(a(v), b(v+h))``; with parameters present
    a root must annihilate the resultant identically in them.
    """
    if _deg(a) <= 0 or _deg(b) <= 0:
        return []
    v, params = a.gens[0], a.gens[1:]
    h = sp.Dummy("h")
    res = sp.resultant(a.as_expr(), b.as_expr().subs(v, v + h), v)
    res = sp.expand(res)
    if res == 0:
        raise ArithmeticError("resultant vanishes identically; inputs share a factor")
    if params:
        coeffs = Poly(res, *params).coeffs()
        g = Poly(coeffs[0], h, domain=QQ)
        for c in coeffs[1:]:
            g = g.gcd(Poly(c, h, domain=QQ))
    else:
        g = Poly(res, h, domain=QQ)
    if g.degree() <= 0:
        return []
    return [r for r in _integer_roots(g) if r >= 0]


def gosper_form(num: Poly, den: Poly) -> tuple[Poly, Poly, Poly]:
    """Split ``num/den`` as ``(a(v)/b(v)) * c(v+1)/c(v)`` with ``gcd(a(v), b(v+h)) = 1`` for all ``h >= 0``."""
    a, b = num, den
    c = Poly(1, *num.gens, domain=QQ)
    for h in dispersion_set(a, b):
        g = a.gcd(_shift(b, h))
        if _deg(g) <= 0:
            continue
        a = a.exquo(g)
        b = b.exquo(_shift(g, -h))
        for i in range(1, h + 1):
            c = c * _shift(g, -i)
    return a, b, c


def _degree_bound(a: Poly, bm1: Poly, deg_c: int) -> int:
    """Largest possible degree of ``x`` in ``a(v) x(v+1) - b(v-1) x(v) = c(v)``."""
    diff, tot = a - bm1, a + bm1
    k1, k2 = _deg(diff), _deg(tot)
    if k1 >= k2:
        return deg_c - k1
    cands = [deg_c - k2 + 1]
    if k1 == k2 - 1:
        d0 = sp.simplify(-2 * _lead(diff) / _lead(tot))
        if d0.is_Integer and d0 >= 0:
            cands.append(int(d0))
    return max(cands)


def _field(params: Sequence[sp.Symbol]):
    return QQ.frac_field(*params) if params else QQ


def solve_gosper_equation(a: Poly, b: Poly, cs: Sequence[Poly]) -> tuple[list, Poly] | None:
    """Find ``sigma`` (not all zero) and polynomial ``x`` with ``a(v) x(v+1) - b(v-1) x(v) = sum_i sigma_i c_i(v)``.

    Returns ``(sigma, x)`` with entries/coefficients as sympy expressions in
    the parameters, or ``None`` when only the trivial solution exists.
    """
    gens = a.gens
    v, params = gens[0], gens[1:]
    bm1 = _shift(b, -1)
    d = _degree_bound(a, bm1, max(_deg(c) for c in cs))
    columns: list[Poly] = []
    for k in range(max(d, -1) + 1):
        vk = Poly(v**k, *gens, domain=QQ)
        columns.append(a * _shift(vk, 1) - bm1 * vk)
    columns.extend(-c for c in cs)
    rows = max(_deg(p) for p in columns) + 1
    if rows <= 0:
        rows = 1
    K = _field(params)
    entries = []
    for r in range(rows):
        row = []
        for col in columns:
            coeff = col.as_expr().coeff(v, r) if r else col.as_expr().subs(v, 0)
            row.append(K.from_sympy(sp.expand(coeff)))
        entries.append(row)
    M = DomainMatrix(entries, (rows, len(columns)), K)
    nx = len(columns) - len(cs)
    for vec in M.nullspace().to_Matrix().tolist():
        sigma = vec[nx:]
        if any(sp.simplify(s) != 0 for s in sigma):
            x = sum((vec[k] * v**k for k in range(nx)), sp.Integer(0))
            return [sp.cancel(s) for s in sigma], x
    return None


def gosper(ratio: RationalFunction) -> GosperCertificate | None:
    """Gosper's algorithm on the term with shift ratio ``ratio``.

    Returns the certificate ``R = b(v-1) x(v) / c(v)`` or ``None`` if the term
    has no hypergeometric antidifference.
    """
    a, b, c = gosper_form(ratio.num, ratio.den)
    sol = solve_gosper_equation(a, b, [c])
    if sol is None:
        return None
    (sigma,), x = sol
    v = a.gens[0]
    R = _shift(b, -1).as_expr() * x / (sigma * c.as_expr())
    return GosperCertificate(RationalFunction.from_expr(R, v, a.gens[1:]))
