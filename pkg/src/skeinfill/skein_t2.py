"""Skein algebra of the torus and the Frohman-Gelca isomorphism.

Multicurves on the torus are parallel copies of one primitive curve, so a
basis is given by the empty multicurve and the powers gamma^n of primitive
curves gamma = l^p m^q (slope q/p, direction (p,q) up to sign).  The
isomorphism sends the Chebyshev element T_gcd(p,q)(gamma) to et_{p,q}.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from functools import lru_cache
from math import comb, gcd
from typing import Mapping

from .coeff import QA, Field, Poly
from .qtorus import Pair, SymmetricElement, canonical_class, etilde_mul, is_canonical


@lru_cache(maxsize=None)
def _cheb(n: int) -> tuple[int, ...]:
    if n == 0:
        return (2,)
    if n == 1:
        return (0, 1)
    # T_n = x T_{n-1} - T_{n-2}
    prev, cur = _cheb(n - 2), _cheb(n - 1)
    out = [0] * (n + 1)
    for i, c in enumerate(cur):
        out[i + 1] += c
    for i, c in enumerate(prev):
        out[i] -= c
    return tuple(out)


def chebyshev(n: int) -> list[int]:
    """Integer coefficients of T_n, constant term first (T_0 = 2, T_1 = x)."""
    if n < 0:
        raise ValueError("Chebyshev index must be nonnegative")
    return list(_cheb(n))


def power_to_chebyshev(n: int) -> tuple[dict[int, int], int]:
    """Write x^n = sum_k c_k T_k(x) + c * 1 with k >= 1.

    Returns ``({k: c_k}, c)``.  The unit is kept apart from T_0 = 2 so all
    coefficients stay integral.
    """
    if n < 0:
        raise ValueError("power must be nonnegative")
    # x = t + 1/t and T_k = t^k + t^-k pair up the binomial expansion
    coeffs = {n - 2 * j: comb(n, j) for j in range((n + 1) // 2)}
    unit = comb(n, n // 2) if n % 2 == 0 else 0
    return coeffs, unit


@dataclass(frozen=True, order=True)
class CurveMonomial:
    """gamma^copies for a primitive direction, or the empty multicurve."""

    direction: Pair | None
    copies: int

    def __post_init__(self):
        if self.direction is None:
            if self.copies != 0:
                raise ValueError("the empty multicurve has zero copies")
            return
        p, q = self.direction
        if self.copies < 1:
            raise ValueError("a nonempty multicurve needs at least one copy")
        if gcd(abs(p), abs(q)) != 1:
            raise ValueError(f"direction {self.direction} is not primitive")
        if not is_canonical(p, q):
            raise ValueError(f"direction {self.direction} is not canonical under +-1")

    @classmethod
    def curve(cls, p: int, q: int, copies: int = 1) -> "CurveMonomial":
        g = gcd(abs(p), abs(q))
        if g != 1:
            raise ValueError(f"({p},{q}) is not primitive")
        return cls(canonical_class(p, q), copies)

    @property
    def is_empty(self) -> bool:
        return self.direction is None

    def sort_key(self):
        return (0, 0, 0) if self.direction is None else (*self.direction, self.copies)


EMPTY = CurveMonomial(None, 0)


@dataclass(frozen=True)
class SkeinElement:
    field: Field
    terms: Mapping[CurveMonomial, object] = dc_field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for k, v in self.terms.items():
            v = self.field.coerce(v)
            if v:
                clean[k] = clean[k] + v if k in clean else v
        object.__setattr__(self, "terms", {k: v for k, v in clean.items() if v})

    @classmethod
    def empty(cls, field: Field = QA, coeff=1) -> "SkeinElement":
        return cls(field, {EMPTY: coeff})

    def __eq__(self, other) -> bool:
        if not isinstance(other, SkeinElement):
            return NotImplemented
        return self.terms == other.terms

    def __add__(self, other: "SkeinElement") -> "SkeinElement":
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out[k] + v if k in out else v
        return SkeinElement(self.field, out)

    def __sub__(self, other: "SkeinElement") -> "SkeinElement":
        return self + SkeinElement(other.field, {k: -v for k, v in other.terms.items()})

    def items(self):
        return sorted(self.terms.items(), key=lambda kv: kv[0].sort_key())


def phi(x: SkeinElement) -> SymmetricElement:
    """Frohman-Gelca map: T_k(gamma) for primitive gamma of direction d goes to et_{k d}."""
    f = x.field
    out: dict = {}
    half = f.coerce(1) / 2
    for mono, c in x.terms.items():
        if mono.is_empty:
            out[(0, 0)] = out.get((0, 0), f.zero) + c * half
            continue
        p, q = mono.direction
        ks, unit = power_to_chebyshev(mono.copies)
        for k, ck in ks.items():
            key = canonical_class(k * p, k * q)
            out[key] = out.get(key, f.zero) + c * ck
        if unit:
            out[(0, 0)] = out.get((0, 0), f.zero) + c * unit * half
    return SymmetricElement(f, out)


def phi_inv(x: SymmetricElement) -> SkeinElement:
    f = x.field
    out: dict = {}
    for (a, b), c in x.terms.items():
        g = gcd(abs(a), abs(b))
        if g == 0:
            out[EMPTY] = out.get(EMPTY, f.zero) + c * 2
            continue
        d = (a // g, b // g)
        for k, tk in enumerate(_cheb(g)):
            if not tk:
                continue
            mono = EMPTY if k == 0 else CurveMonomial(d, k)
            out[mono] = out.get(mono, f.zero) + c * tk
    return SkeinElement(f, out)


@dataclass(frozen=True)
class PeripheralPoly:
    """Q = sum_i a_i(m) l^i with a_i polynomials in the meridian."""

    field: Field
    coefficients: Mapping[int, Poly]

    def __post_init__(self):
        clean = {int(i): a for i, a in self.coefficients.items() if a}
        if any(i < 0 for i in clean):
            raise ValueError("l-degrees must be nonnegative")
        object.__setattr__(self, "coefficients", dict(sorted(clean.items())))

    @property
    def degree(self) -> int | None:
        return max(self.coefficients) if self.coefficients else None

    def leading(self) -> Poly:
        return self.coefficients[self.degree]

    def __eq__(self, other) -> bool:
        if not isinstance(other, PeripheralPoly):
            return NotImplemented
        return self.coefficients == other.coefficients


def meridian_poly_to_etilde(a: Poly) -> SymmetricElement:
    """phi(a(m)) with m the curve of direction (0,1)."""
    terms = {EMPTY if j == 0 else CurveMonomial((0, 1), j): c for j, c in a.coefficients.items()}
    return phi(SkeinElement(a.field, terms))


def peripheral_to_etilde(Q: PeripheralPoly) -> SymmetricElement:
    """sum_i phi(a_i(m)) * phi(l)^i, with a_i(m) to the left of l^i."""
    f = Q.field
    total = SymmetricElement(f, {})
    for i, a in Q.coefficients.items():
        left = meridian_poly_to_etilde(a)
        right = phi(SkeinElement(f, {EMPTY if i == 0 else CurveMonomial((1, 0), i): 1}))
        total = total + etilde_mul(left, right)
    return total
