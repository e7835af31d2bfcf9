"""Multivariate gcd through sympy.

Euclid over Q(A)[m] with rational-function coefficients swells badly, so
common factors of a list of polynomials are removed in Q[A, m2, m] instead,
where sympy has fast multivariate gcd.  Values cross the boundary as
multinomials keyed by exponent triples (a, m2, m).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

import sympy as sp

from .field import Field
from .laurent import LaurentPoly
from .poly import Poly
from .ratfunc import RatFunc

_GENS = sp.symbols("A m2 m")

Multinomial = dict[tuple[int, int, int], Fraction]


def _shift(terms: Multinomial, k: int) -> Multinomial:
    return {(a + k, b, c): v for (a, b, c), v in terms.items()}


def _to_sympy(terms: Multinomial) -> sp.Poly:
    return sp.Poly.from_dict({k: sp.Rational(v.numerator, v.denominator) for k, v in terms.items()},
                             *_GENS, domain="QQ")


def _from_sympy(p: sp.Poly) -> Multinomial:
    return {k: Fraction(int(v.p), int(v.q)) for k, v in p.as_dict().items()}


def coprime_parts(nums: Sequence[Multinomial], dens: Sequence[Multinomial]) -> list[Multinomial]:
    """Scale the quotients nums[j]/dens[j] by one common factor so that they
    become polynomials in Q[A^+-1, m2, m] with no common factor."""
    lows = [min(k[0] for k in t) for t in list(nums) + list(dens)]
    shift = -min(lows)
    N = [_to_sympy(_shift(t, shift)) for t in nums]
    D = [_to_sympy(_shift(t, shift)) for t in dens]
    common = D[0]
    for d in D[1:]:
        common = sp.lcm(common, d)
    cleared = [n * sp.div(common, d)[0] for n, d in zip(N, D)]
    g = cleared[0]
    for c in cleared[1:]:
        g = sp.gcd(g, c)
    return [_from_sympy(sp.div(c, g)[0]) for c in cleared]


def poly_from_multinomial(field: Field, terms: Multinomial, var: str = "m") -> Poly:
    by_deg: dict[int, dict] = {}
    for (a, b, c), v in terms.items():
        by_deg.setdefault(c, {})[(a, b)] = v
    top = max(by_deg, default=-1)
    return Poly(field, [scalar_from_multinomial(field, by_deg.get(i, {})) for i in range(top + 1)], var)


def scalar_from_multinomial(field: Field, terms: dict[tuple[int, int], Fraction]):
    if field.label == "QA":
        if any(b for _, b in terms):
            raise ValueError("m2 does not belong to Q(A)")
        return RatFunc(LaurentPoly({a: v for (a, _), v in terms.items()}))
    from .extended import ExtFunc
    from .field import QA

    by_m2: dict[int, dict] = {}
    for (a, b), v in terms.items():
        by_m2.setdefault(b, {})[a] = v
    top = max(by_m2, default=-1)
    return ExtFunc(Poly(QA, [RatFunc(LaurentPoly(by_m2.get(i, {}))) for i in range(top + 1)], "m2"))
